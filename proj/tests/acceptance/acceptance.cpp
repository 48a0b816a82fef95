// Copyright 2026 The wilc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// One line per acceptance criterion. Exit status is 0 once the report is printed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wilc/invariants.hpp"
#include "wilc/modular.hpp"
#include "wilc/qseries.hpp"
#include "wilc/random.hpp"
#include "wilc/reparam.hpp"
#include "wilc/siegel.hpp"

using namespace wilc;

namespace {

using MatRF = Matrix<RatFunc>;
using MRing = MatrixRing<RatFuncRing>;
using QM = QuasiModular;

RatFunc z() { return z_var(); }
RatFunc c(long p, long q = 1) { return RatFunc(make_rational(p, q)); }
MRing mring(std::size_t r) { return MRing{r, {}}; }

template <class R>
oracle::Deriv<typename R::Element> deriv(const R& ring) {
  return [ring](const typename R::Element& x) { return ring.derive(x); };
}

// Failed checks are counted and the first few are named.
struct Tally {
  long checks = 0, failures = 0;
  std::string notes;
  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures < 4) notes += (notes.empty() ? "" : "; ") + what;
    ++failures;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit;  // seconds, 0 for none
  std::function<void(Tally&)> run;
};

template <class R>
void closed_vs_miura(const BinomialOperator<R>& l, Tally& t, const std::string& tag) {
  auto closed = closed_I_all(l);
  auto miura = miura_extract(l);
  for (int k = 2; k <= l.n; ++k) t(closed[static_cast<std::size_t>(k)] == miura.at(k), tag + " I" + std::to_string(k));
}

void c1(Tally& t) {
  MatRF a1{{c(0), z()}, {c(1), c(0)}};
  BinomialOperator<MRing> l(mring(2), {a1, MatRF(2), MatRF(2)});
  t(closed_Ik(l, 2) == MatRF{{-z(), c(-1)}, {c(0), -z()}}, "I2");
  t(closed_Ik(l, 3) == MatRF{{c(2), c(2) * z() * z()}, {c(2) * z(), c(-2)}}, "I3");
  closed_vs_miura(l, t, "worked");
}

void c2(Tally& t) {
  for (int k : {0, 2, 11})
    for (Rational alpha : {Rational(0), Rational(1), make_rational(17, 5)})
      t(closed_Ik(mldo_second_order(k, alpha), 2) == (alpha - make_rational(1, 144)) * E4(),
        "k=" + std::to_string(k) + " alpha=" + alpha.get_str());
}

void c3(Tally& t) {
  auto l = nsz_example_operator();
  auto inv = closed_I_all(l);
  t(inv[2] == make_rational(-133, 225) * E4(), "I2");
  t(inv[3] == make_rational(-133, 450) * (E2() * E4()) + make_rational(319, 270) * E6(), "I3");
  t(w_currents(l, 3).at(3) == make_rational(598, 675) * E6(), "W3");
}

void c4(Tally& t) {
  Sampler s(2024);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + i % 5;
    int deg = 1 + i % 2;
    std::string tag = "op " + std::to_string(i);
    switch (i % 3) {
      case 0: closed_vs_miura(s.scalar_operator(n, deg), t, tag); break;
      case 1: closed_vs_miura(s.matrix_operator(2, n, deg), t, tag); break;
      default: closed_vs_miura(s.matrix_operator(3, n, deg), t, tag); break;
    }
  }
}

void c5(Tally& t) {
  Sampler s(5);
  for (int i = 0; i < 50; ++i) {
    auto l = s.matrix_operator(2 + static_cast<std::size_t>(i % 2), 5, 1);
    auto inv = closed_I_all(l);
    auto miura = miura_extract(l);
    auto d = deriv(l.ring);
    for (int k = 2; k <= 5; ++k) {
      auto e = oracle::explicit_I(k, l.a, d);
      t(e == miura.at(k) && e == inv[static_cast<std::size_t>(k)], "op " + std::to_string(i) + " I" + std::to_string(k));
    }
  }
}

void c6(Tally& t) {
  Sampler s(6);
  for (int i = 0; i < 10; ++i) {
    auto l = s.matrix_operator(2, 3 + i % 4, 1);
    auto u = s.matrix(2, 1), v = s.matrix(2, 1);
    if (u * l.a[1] == l.a[1] * u) continue;
    t(!(u * l.a[1] == l.a[1] * u), "noncentral u");
    auto st = star_action(u, l);
    auto d = deriv(l.ring);
    t(closed_I_all(st) == closed_I_all(l), "I_k fixed");
    t(st.a[1] == l.a[1] - u, "a1");
    t(st.a[2] == oracle::star_a2(l.a, u, d), "a2");
    t(st.a[3] == oracle::star_a3(l.a, u, d), "a3");
    t(star_action(v, st) == star_action(u + v, l), "group law");
  }
}

void c7(Tally& t) {
  Sampler s(7);
  for (int i = 0; i < 25; ++i) {
    auto l = s.matrix_operator(2, 2 + i % 3, 1);
    auto f = s.invertible(2, 1);
    auto fi = inverse(f);
    auto a = closed_I_all(l), b = closed_I_all(gauge_binomial(l, make_gauge(l.ring, f)));
    for (int k = 2; k <= l.n; ++k)
      t(b[static_cast<std::size_t>(k)] == fi * a[static_cast<std::size_t>(k)] * f, "f " + std::to_string(i));
  }
}

std::vector<RatFunc> c8_maps() {
  return {(c(2) * z() + c(1)) / (z() + c(3)), z() * z(), z() * z() + z(), z() * z() * z() + c(1)};
}

void c8(Tally& t) {
  Sampler s(8);
  for (const auto& lam : c8_maps()) {
    ReparamJet jet(lam);
    RatFunc l1 = lam.derive(), l2 = l1.derive(), l3 = l2.derive();
    RatFunc S = oracle::schwarzian(lam);
    for (int n = 2; n <= 6; ++n) {
      auto l = s.scalar_operator(n, 1);
      auto I = closed_I_all(l);
      auto J = reparam_Ik_pullback(l, jet);
      auto at = [&](int k) { return compose(I[static_cast<std::size_t>(k)], lam); };
      Rational nn(n);
      std::string tag = "lambda=" + lam.to_string() + " n=" + std::to_string(n);
      t(J[2] == l1 * l1 * at(2) + make_rational(1, 6) * (nn + 1) * S, tag + " I2");
      if (n >= 3)
        t(J[3] == l1 * l1 * l1 * at(3) + c(3) * l1 * l2 * at(2) + make_rational(1, 4) * (nn + 1) * S.derive(),
          tag + " I3");
      if (n >= 4) {
        RatFunc mid = RatFunc(Rational(nn + 5)) * l1 * l3 - Rational(make_rational(3, 2) * (nn - 1)) * l2 * l2;
        t(J[4] == l1 * l1 * l1 * l1 * at(4) + c(6) * l1 * l1 * l2 * at(3) + mid * at(2) +
                      make_rational(3, 10) * (nn + 1) * S.derive().derive() +
                      Rational((nn + 1) * (5 * nn + 7) / 60) * (S * S),
          tag + " I4");
      }
      for (int k = 3; k <= n; ++k) t(verify_w_tensoriality(l, jet, k).exact(), tag + " W" + std::to_string(k));
    }
  }
}

void c9(Tally& t) {
  for (const auto& lam : {z() * z(), z() * z() * z() + c(1)}) {
    ReparamJet jet(lam);
    RatFunc S = oracle::schwarzian(lam);
    for (int n = 3; n <= 6; ++n) {
      Rational nn(n);
      std::string tag = "lambda=" + lam.to_string() + " n=" + std::to_string(n);
      t(vacuum_cocycle(n, 2, jet) == Rational((nn + 1) / 6) * S, tag + " S2");
      t(Rational(24) * vacuum_cocycle(n, 3, jet) == Rational(6 * (nn + 1)) * S.derive(), tag + " S3");
      if (n >= 4)
        t(Rational(120) * vacuum_cocycle(n, 4, jet) ==
              Rational(36 * (nn + 1)) * S.derive().derive() + Rational(2 * (nn + 1) * (5 * nn + 7)) * (S * S),
          tag + " S4");
    }
  }
}

void c10(Tally& t) {
  Sampler s(10);
  for (const auto& lam : c8_maps()) {
    ReparamJet jet(lam);
    for (int n = 3; n <= 4; ++n) {
      auto l = s.matrix_operator(2, n, 1);
      t(pullback_operator(l, jet).a == oracle::coefficient_law(l.a, lam), "coefficient law n=" + std::to_string(n));
    }
    int n = 3;
    auto l = s.matrix_operator(2, n, 1);
    auto f = s.invertible(2, 1);
    auto fi = inverse(f);
    auto tr = overlap_transform(l, jet, make_gauge(l.ring, f));
    RatFunc l1 = lam.derive(), l2 = l1.derive();
    MatRF inner = scale(l1, compose_elem(l.a[1], lam)) - MatRF::scalar(2, make_rational(n - 1, 2) * (l2 / l1));
    t(tr.a[1] == fi * inner * f + fi * l.ring.derive(f), "overlap a1");
  }
}

GradedForm<QM> form(const QM& x, int k) { return {x, k}; }

void c11(Tally& t) {
  const int order = 20;
  auto conn = canonical_connection(QM());
  auto serre_series = [&](const QM& f, int k) {
    auto df = oracle::qdq(oracle::series_of(f, order));
    auto e2f = oracle::mul(oracle::series_of(E2(), order), oracle::series_of(f, order));
    for (std::size_t i = 0; i < df.size(); ++i) df[i] -= make_rational(k, 12) * e2f[i];
    return df;
  };
  auto d4 = serre_derive(form(E4(), 4), conn).value, d6 = serre_derive(form(E6(), 6), conn).value;
  t(d4 == make_rational(-1, 3) * E6(), "dE4");
  t(d6 == make_rational(-1, 2) * (E4() * E4()), "dE6");
  t(oracle::series_of(d4, order) == serre_series(E4(), 4), "dE4 q-series");
  t(oracle::series_of(d6, order) == serre_series(E6(), 6), "dE6 q-series");
  QM delta = make_rational(1, 1728) * (E4() * E4() * E4() - E6() * E6());
  t(maurer_cartan(GradedForm<QMRat>{QMRat(delta), 12}).g == QMRat(make_rational(1, 6) * E2()), "Maurer-Cartan");
  Sampler s(11);
  for (int i = 0; i < 6; ++i) {
    int kf = 4 + 2 * (i % 3), kg = 4 + 2 * (i % 2);
    auto f = form(s.modular(kf), kf), g = form(s.modular(kg), kg);
    for (int r = 0; r <= 2; ++r) {
      auto b = rc_bracket(f, g, r, BracketSide::Left, conn);
      t(depth_zero(b.value) && b.weight == kf + kg + 2 * r, "bracket r=" + std::to_string(r));
    }
  }
  auto w = w_currents(nsz_example_operator(), 3);
  auto cur = discriminant_current(form(w.at(2), 4), form(w.at(3), 6));
  t(depth_zero(cur.value), "current depth");
  t(cur.weight == 12, "current weight");
  auto q0 = eval_qseries(cur.value, 4)[0];
  t(q0 == 0, "current q^0 = " + q0.get_str());
}

void c12(Tally& t) {
  Sampler s(12);
  for (int i = 0; i < 50; ++i) {
    auto g = random_symplectic(s.engine());
    t(chain_rule_check(s.mv_poly(2), g).exact, "chain " + std::to_string(i));
    std::vector<MVRat> cf;
    for (int a = 0; a <= 2 * (i % 2); ++a) cf.push_back(s.mv_poly(1));
    t(anomaly_check(SiegelElement::form(i % 3, cf), g).exact, "anomaly " + std::to_string(i));
  }
  for (int i = 0; i < 5; ++i) {
    Matrix<MVRat> m(2), x(2), y(2);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        m(a, b) = s.mv_poly(1);
        x(a, b) = s.mv_poly(1);
        y(a, b) = s.mv_poly(1);
      }
    Matrix<MVRat> mt{{m(0, 0), m(1, 0)}, {m(0, 1), m(1, 1)}};
    MVRat dm = det(m);
    t(odet(std::vector<Matrix<MVRat>>{m * x * mt, m * y * mt}) ==
          dm * dm * odet(std::vector<Matrix<MVRat>>{x, y}),
      "odet");
  }
  MVRat detZ = tau(1) * tau(3) - tau(2) * tau(2);
  auto phi = SiegelElement::scalar(detZ, 2);
  auto A = maurer_cartan_A(phi, 2, Rational(1));
  t(covariant_raise(phi, A).is_zero(), "det Z killed");
  Matrix<MVRat> p(2);
  do {
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) p(a, b) = s.mv_poly(1);
  } while (det(p).is_zero());
  auto mphi = SiegelElement::matrix(p, 3);
  t(covariant_raise(mphi, maurer_cartan_A(mphi, 3, Rational(1))).is_zero(), "matrix source killed");
  for (int i = 0; i < 5; ++i) {
    auto x = SiegelElement::form(i % 2, {s.mv_poly(2), s.mv_poly(2), s.mv_poly(2)});
    auto y = SiegelElement::scalar(s.mv_poly(2), 1);
    t(covariant_raise(x * y, A) == covariant_raise(x, A) * y + x * covariant_raise(y, A), "Leibniz");
  }
  for (int i = 0; i < 3; ++i) {
    auto f1 = SiegelElement::scalar(s.mv_poly(2), 1), f2 = SiegelElement::scalar(s.mv_poly(2), 2);
    t(det_bracket_check(f1, f2, SiegelElement::scalar(detZ), 2, Rational(1), random_symplectic(s.engine())).exact,
      "det_bracket");
  }
}

void c13(Tally& t) {
  Sampler s(13);
  MRing R = mring(2);
  auto d = deriv(R);
  using MOp = OreOperator<MRing>;
  auto op = [&](int order) {
    std::vector<MatRF> b;
    for (int j = 0; j <= order; ++j) b.push_back(s.matrix(2, 1));
    return MOp(R, b);
  };
  for (int i = 0; i < 5; ++i) {
    auto a = op(1 + i % 3), b = op(2), c3 = op(1);
    t(ore_mul(a, b).coeffs() == oracle::ore_product(a.coeffs(), b.coeffs(), d, R.zero()), "Leibniz product");
    t(ore_mul(ore_mul(a, b), c3) == ore_mul(a, ore_mul(b, c3)), "associativity");
  }
  for (int m = 1; m <= 5; ++m) {
    auto u = s.matrix(2, 1);
    MOp p(R, {u, R.one()});
    MOp pw = MOp::constant(R, R.one());
    for (int i = 0; i < m; ++i) pw = ore_mul(p, pw);
    t(normal_order_power(R, u, m) == pw, "normal order");
    t(pw.coeffs()[0] == bell_P(R, m, u), "P");
    // P_m(u) is f^{-1} D^m f acting on 1 when u = f^{-1} f'
    auto f = s.invertible(2, 1);
    auto g = make_gauge(R, f);
    t(gauge_conjugate(MOp::D(R, m), g).coeffs()[0] == bell_P(R, m, g.u), "P as conjugation");
    // (nabla + u)^m = sum_j C(m, j) Q_{m-j} nabla^j
    auto a1 = s.matrix(2, 1);
    MOp nabla(R, {a1, R.one()}), shifted(R, {a1 + u, R.one()});
    std::vector<MOp> nw{MOp::constant(R, R.one())};
    MOp lhs = MOp::constant(R, R.one());
    for (int i = 0; i < m; ++i) {
      nw.push_back(ore_mul(nabla, nw.back()));
      lhs = ore_mul(shifted, lhs);
    }
    MOp rhs = MOp::constant(R, R.zero());
    for (int j = 0; j <= m; ++j)
      rhs = rhs + ore_mul(MOp::constant(R, Rational(binomial(m, j)) * bell_Q(R, m - j, u, a1)),
                          nw[static_cast<std::size_t>(j)]);
    t(lhs == rhs, "Q");
  }
  for (int i = 0; i < 5; ++i) {
    auto a1 = s.matrix(2, 1), x = s.matrix(2, 1);
    auto f = s.invertible(2, 1);
    auto fi = inverse(f);
    auto g = make_gauge(R, f);
    MatRF b1 = fi * a1 * f + fi * R.derive(f);
    t(delta(R, fi * x * f, b1) == fi * delta(R, x, a1) * f, "delta covariance");
  }
  RatFuncRing S;
  for (int i = 0; i < 5; ++i) {
    std::vector<RatFunc> ys{s.ratfunc(2), s.poly(3), s.ratfunc(1)};
    auto l = operator_from_solutions(S, ys).to_ore();
    for (const auto& y : ys) t(ore_apply(l, y).is_zero(), "annihilation");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> all{
      {1, "worked 2x2 example", 1, c1},
      {2, "second order modular operator", 0, c2},
      {3, "third order example", 0, c3},
      {4, "closed formula equals Miura on 100 operators", 120, c4},
      {5, "explicit I2..I5 on 50 matrix operators", 0, c5},
      {6, "star action", 0, c6},
      {7, "gauge covariance", 0, c7},
      {8, "reparametrization laws and W tensoriality", 0, c8},
      {9, "vacuum cocycles", 0, c9},
      {10, "explicit coefficient laws and overlap", 0, c10},
      {11, "modular layer", 0, c11},
      {12, "Siegel layer", 180, c12},
      {13, "structural suite", 0, c13},
  };
  int passed = 0;
  for (const auto& cr : all) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(t);
    } catch (const std::exception& e) {
      t(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit > 0 && secs > cr.limit) t(false, "time limit exceeded");
    bool ok = t.failures == 0 && t.checks > 0;
    passed += ok;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", secs);
    std::cout << "criterion " << cr.id << " " << (ok ? "PASS" : "FAIL") << " (" << buf << ", " << t.checks
              << " checks) " << cr.name;
    if (!ok) std::cout << " [" << t.failures << " failed: " << t.notes << "]";
    std::cout << "\n";
  }
  std::cout << passed << "/" << all.size() << " criteria passed\n";
  return 0;
}
