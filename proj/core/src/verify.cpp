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

#include "wilc/verify.hpp"

#include <chrono>
#include <functional>

#include "wilc/modular.hpp"
#include "wilc/qseries.hpp"
#include "wilc/random.hpp"
#include "wilc/reparam.hpp"
#include "wilc/siegel.hpp"

namespace wilc {

namespace {

using MatRF = Matrix<RatFunc>;
using MatRing = MatrixRing<RatFuncRing>;
using Check = std::function<std::optional<std::string>(int)>;

std::string clip(std::string s) {
  if (s.size() > 240) s = s.substr(0, 240) + "...";
  return s;
}

class Runner {
 public:
  Runner(std::string suite, std::uint64_t seed, PropertyHook hook)
      : sampler(seed), hook_(std::move(hook)) {
    report.suite = std::move(suite);
    report.seed = seed;
  }

  void property(const std::string& name, int cases, const Check& check) {
    PropertyResult r{name, true, 0, "", 0};
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < cases; ++i) {
      std::optional<std::string> bad;
      try {
        bad = check(i);
      } catch (const MathError& e) {
        bad = e.what();
      }
      ++r.cases;
      if (bad) {
        r.passed = false;
        r.detail = "case " + std::to_string(i) + ": " + clip(*bad);
        break;
      }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (hook_) hook_(r);
    report.properties.push_back(std::move(r));
  }

  Sampler sampler;
  SuiteReport report;

 private:
  PropertyHook hook_;
};

template <class T>
std::optional<std::string> same(const T& a, const T& b) {
  if (a == b) return std::nullopt;
  return a.to_string() + " != " + b.to_string();
}

template <class R>
std::optional<std::string> same_op(const OreOperator<R>& a, const OreOperator<R>& b) {
  if (a == b) return std::nullopt;
  return render(a) + " != " + render(b);
}

RatFunc mobius(Sampler& s) {
  while (true) {
    long a = s.integer(-3, 3), b = s.integer(-3, 3), c = s.integer(-3, 3), d = s.integer(-3, 3);
    if (a * d - b * c == 0) continue;
    return (Rational(a) * z_var() + RatFunc(Rational(b))) /
           (Rational(c) * z_var() + RatFunc(Rational(d)));
  }
}

RatFunc nonconstant_map(Sampler& s, int i) {
  if (i % 3 == 0) return mobius(s);
  RatFunc p = s.poly(2 + i % 2);
  if (p.frac().num().degree(0) < 1) p = p + z_var() * z_var();
  return p;
}

// ---- coefficient rings ----

void rings_suite(Runner& run) {
  Sampler& s = run.sampler;
  run.property("leibniz_ratfunc", 60, [&](int) {
    RatFunc x = s.ratfunc(3), y = s.ratfunc(3);
    return same((x * y).derive(), x.derive() * y + x * y.derive());
  });
  run.property("leibniz_qmrat", 40, [&](int i) {
    QMRat x = QMRat(s.quasimodular(2 + 2 * (i % 4))) / QMRat(E4() + s.rational() * (E2() * E2()));
    QMRat y = QMRat(s.quasimodular(6));
    return same((x * y).derive(), x.derive() * y + x * y.derive());
  });
  run.property("leibniz_matrix", 30, [&](int) {
    MatRing ring{2, {}};
    MatRF x = s.matrix(2, 2), y = s.matrix(2, 2);
    return same(ring.derive(x * y), ring.derive(x) * y + x * ring.derive(y));
  });
  run.property("compose_morphism", 40, [&](int i) {
    RatFunc x = s.ratfunc(3), y = s.ratfunc(2), lam = nonconstant_map(s, i);
    return same(compose(x * y, lam), compose(x, lam) * compose(y, lam));
  });
  run.property("chain_rule", 40, [&](int i) {
    RatFunc a = s.ratfunc(3), lam = nonconstant_map(s, i);
    return same(compose(a, lam).derive(), compose(a.derive(), lam) * lam.derive());
  });
  run.property("ramanujan_qseries", 5, [&](int i) {
    QuasiModular delta = make_rational(1, 1728) * (E4() * E4() * E4() - E6() * E6());
    std::array<QuasiModular, 5> fs{E2(), E4(), E6(), E2() * E4(), delta};
    const QuasiModular& f = fs[static_cast<std::size_t>(i)];
    return same(eval_qseries(f.derive(), 20), eval_qseries(f, 21).derive().truncate(20));
  });
  run.property("matrix_inverse", 30, [&](int i) {
    std::size_t r = 2 + static_cast<std::size_t>(i % 2);
    MatRF x = s.invertible(r, 2);
    return same(x * inverse(x), MatRF::identity(r));
  });
}

// ---- Ore calculus ----

OreOperator<MatRing> random_ore(Sampler& s, std::size_t r, int order, int deg) {
  MatRing ring{r, {}};
  std::vector<MatRF> b;
  for (int j = 0; j <= order; ++j) b.push_back(s.matrix(r, deg));
  return OreOperator<MatRing>(ring, std::move(b));
}

void ore_suite(Runner& run) {
  Sampler& s = run.sampler;
  MatRing ring2{2, {}};
  run.property("associativity", 12, [&](int i) {
    auto l1 = random_ore(s, 2, i % 5, 1), l2 = random_ore(s, 2, (i + 2) % 5, 1),
         l3 = random_ore(s, 2, (i + 4) % 5, 1);
    return same_op(ore_mul(ore_mul(l1, l2), l3), ore_mul(l1, ore_mul(l2, l3)));
  });
  run.property("p_as_conjugation", 3, [&](int i) -> std::optional<std::string> {
    if (i < 2) {
      RatFuncRing ring;
      RatFunc f = i == 0 ? z_var() : z_var() * z_var();
      RatFunc u = f.derive() / f;
      for (int m = 0; m <= 6; ++m) {
        RatFunc dm = derivatives(ring, f, m).back();
        if (auto bad = same(bell_P(ring, m, u), f.inverse() * dm)) return bad;
      }
      return std::nullopt;
    }
    MatRF f{{RatFunc(1), z_var()}, {RatFunc(0), RatFunc(1)}};
    MatRF finv = inverse(f);
    MatRF u = finv * ring2.derive(f);
    for (int m = 0; m <= 6; ++m) {
      MatRF dm = derivatives(ring2, f, m).back();
      if (auto bad = same(bell_P(ring2, m, u), finv * dm)) return bad;
    }
    return std::nullopt;
  });
  run.property("normal_order", 6, [&](int i) {
    int m = i + 1;
    MatRF u = s.matrix(2, 1);
    auto dpu = OreOperator<MatRing>::D(ring2) + OreOperator<MatRing>::constant(ring2, u);
    return same_op(normal_order_power(ring2, u, m), ore_pow(dpu, m));
  });
  run.property("normal_order_nabla", 5, [&](int i) {
    int m = i + 1;
    MatRF u = s.matrix(2, 1), a1 = s.matrix(2, 1);
    auto nab = nabla_powers(ring2, a1, m);
    auto lhs = ore_pow(nab[1] + OreOperator<MatRing>::constant(ring2, u), m);
    auto q = bell_Q_table(ring2, u, a1, m);
    OreOperator<MatRing> rhs(ring2);
    for (int j = 0; j <= m; ++j)
      rhs = rhs + left_mul(binomial(m, j) * q[static_cast<std::size_t>(m - j)],
                           nab[static_cast<std::size_t>(j)]);
    return same_op(lhs, rhs);
  });
  run.property("module_action", 20, [&](int i) {
    auto l1 = random_ore(s, 2, i % 4, 1), l2 = random_ore(s, 2, (i + 1) % 4, 1);
    MatRF y = s.matrix(2, 3);
    return same(ore_apply(ore_mul(l1, l2), y), ore_apply(l1, ore_apply(l2, y)));
  });
  run.property("delta_covariance", 20, [&](int) {
    MatRF f = s.invertible(2, 1), b = s.matrix(2, 2), a1 = s.matrix(2, 1);
    auto g = make_gauge(ring2, f);
    return same(delta(ring2, g.f_inv * b * f, g.f_inv * a1 * f + g.u),
                g.f_inv * delta(ring2, b, a1) * f);
  });
  run.property("gauge_paths_agree", 10, [&](int i) {
    int n = 2 + i % 3;
    auto l = s.matrix_operator(2, n, 1);
    auto g = make_gauge(ring2, s.invertible(2, 1));
    return same_op(gauge_conjugate(l.to_ore(), g), gauge_binomial(l, g).to_ore());
  });
}

// ---- invariants ----

template <class R>
std::optional<std::string> closed_vs_miura(const BinomialOperator<R>& l) {
  auto closed = closed_I_all(l);
  auto d = miura_extract(l);
  for (int k = 2; k <= l.n; ++k)
    if (auto bad = same(closed[static_cast<std::size_t>(k)], d.I[static_cast<std::size_t>(k)]))
      return "I" + std::to_string(k) + ": " + *bad;
  return std::nullopt;
}

void invariants_suite(Runner& run) {
  Sampler& s = run.sampler;
  MatRing ring2{2, {}};
  run.property("closed_equals_miura", 30, [&](int i) -> std::optional<std::string> {
    int n = 2 + i % 5;
    if (i % 3 == 0) return closed_vs_miura(s.scalar_operator(n, 2));
    return closed_vs_miura(s.matrix_operator(2 + static_cast<std::size_t>(i % 2), n, 1));
  });
  run.property("gauge_covariance", 10, [&](int i) -> std::optional<std::string> {
    int n = 2 + i % 3;
    auto l = s.matrix_operator(2, n, 1);
    auto g = make_gauge(ring2, s.invertible(2, 1));
    auto lhs = closed_I_all(gauge_binomial(l, g));
    auto rhs = closed_I_all(l);
    for (int k = 2; k <= n; ++k)
      if (auto bad = same(lhs[static_cast<std::size_t>(k)],
                          g.f_inv * rhs[static_cast<std::size_t>(k)] * g.f))
        return bad;
    return std::nullopt;
  });
  run.property("reconstruction", 15, [&](int i) {
    auto l = s.matrix_operator(2, 2 + i % 4, 1);
    return same_op(reconstruct(l.ring, miura_extract(l)), l.to_ore());
  });
  run.property("star_fixes_invariants", 15, [&](int i) -> std::optional<std::string> {
    int n = 2 + i % 4;
    auto l = s.matrix_operator(2, n, 1);
    auto u = s.matrix(2, 1);
    auto lhs = closed_I_all(star_action(u, l));
    auto rhs = closed_I_all(l);
    for (int k = 2; k <= n; ++k)
      if (auto bad = same(lhs[static_cast<std::size_t>(k)], rhs[static_cast<std::size_t>(k)]))
        return bad;
    return std::nullopt;
  });
  run.property("star_group_law", 10, [&](int i) -> std::optional<std::string> {
    auto l = s.matrix_operator(2, 2 + i % 3, 1);
    MatRF u = s.matrix(2, 1), v = s.matrix(2, 1);
    auto lhs = star_action(u, star_action(v, l));
    auto rhs = star_action(u + v, l);
    return same_op(lhs.to_ore(), rhs.to_ore());
  });
  run.property("star_on_w234", 8, [&](int i) -> std::optional<std::string> {
    int n = 4 + i % 2;
    auto l = s.matrix_operator(2, n, 1);
    MatRF u = s.matrix(2, 1);
    auto comm = [](const MatRF& a, const MatRF& b) { return a * b - b * a; };
    auto w = w_currents(l, 4);
    auto ws = w_currents(star_action(u, l), 4);
    auto d = [&](const MatRF& x) { return delta(ring2, x, l.a[1]); };
    const MatRF& w2 = w.at(2);
    if (auto bad = same(ws.at(2), w2)) return "W2: " + *bad;
    if (auto bad = same(ws.at(3), w.at(3) + make_rational(3, 2) * comm(u, w2))) return "W3: " + *bad;
    MatRF w4 = w.at(4) + Rational(2) * comm(u, closed_Ik(l, 3)) +
               make_rational(6, 5) * (comm(u, comm(u, w2)) - comm(d(u), w2) -
                                      Rational(2) * comm(u, d(w2)));
    if (auto bad = same(ws.at(4), w4)) return "W4: " + *bad;
    return std::nullopt;
  });
  run.property("operator_from_solutions", 12, [&](int i) -> std::optional<std::string> {
    RatFuncRing ring;
    int n = 1 + i % 4;
    std::vector<RatFunc> ys;
    for (int j = 0; j < n; ++j) ys.push_back(s.poly(n + 1) + RatFunc(Rational(j + 1)) * mobius(s));
    BinomialOperator<RatFuncRing> l;
    try {
      l = operator_from_solutions(ring, ys);
    } catch (const MathError& e) {
      if (e.kind() == ErrorKind::DegenerateWronskian) return std::nullopt;
      throw;
    }
    auto op = l.to_ore();
    for (const auto& y : ys)
      if (!ore_apply(op, y).is_zero()) return "L y = " + ore_apply(op, y).to_string();
    return std::nullopt;
  });
}

// ---- reparametrization ----

void reparam_suite(Runner& run) {
  Sampler& s = run.sampler;
  run.property("functoriality", 10, [&](int i) {
    auto l = s.scalar_operator(2 + i % 3, 2);
    RatFunc l1 = nonconstant_map(s, i), l2 = nonconstant_map(s, i + 1);
    auto lhs = pullback_operator(pullback_operator(l, ReparamJet(l1)), ReparamJet(l2));
    auto rhs = pullback_operator(l, ReparamJet(compose(l1, l2)));
    return same_op(lhs.to_ore(), rhs.to_ore());
  });
  run.property("intertwining", 20, [&](int i) {
    int n = 1 + i % 4;
    auto l = s.scalar_operator(n, 2);
    RatFunc lam = nonconstant_map(s, i), y = s.ratfunc(3);
    ReparamJet jet(lam);
    RatFunc lp_n(1);
    for (int j = 0; j < n; ++j) lp_n = lp_n * lam.derive();
    auto lhs = ore_apply(pullback_operator(l, jet).to_ore(), compose(y, lam));
    return same(lhs, lp_n * compose(ore_apply(l.to_ore(), y), lam));
  });
  run.property("dual_path", 12, [&](int i) -> std::optional<std::string> {
    int n = 2 + i % 4;
    auto l = s.scalar_operator(n, 2);
    l.a[1] = RatFunc(0);
    ReparamJet jet(nonconstant_map(s, i));
    auto p = reparam_Ik_pullback(l, jet), c = reparam_Ik_closed(l, jet);
    for (int k = 2; k <= n; ++k)
      if (auto bad = same(p[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k)]))
        return "I" + std::to_string(k) + ": " + *bad;
    return std::nullopt;
  });
  run.property("dual_path_matrix", 6, [&](int i) -> std::optional<std::string> {
    int n = 2 + i % 3;
    auto l = s.matrix_operator(2, n, 1);
    l.a[1] = MatRF(2);
    ReparamJet jet(nonconstant_map(s, i + 1));
    auto p = reparam_Ik_pullback(l, jet), c = reparam_Ik_closed(l, jet);
    for (int k = 2; k <= n; ++k)
      if (auto bad = same(p[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k)]))
        return "I" + std::to_string(k) + ": " + *bad;
    return std::nullopt;
  });
  run.property("schwarzian_cocycle", 20, [&](int i) {
    RatFunc l1 = nonconstant_map(s, i), l2 = nonconstant_map(s, i + 2);
    RatFunc d2 = l2.derive();
    return same(schwarzian_of(compose(l1, l2)),
                d2 * d2 * compose(schwarzian_of(l1), l2) + schwarzian_of(l2));
  });
  run.property("vacuum_vanishes_on_mobius", 6, [&](int) -> std::optional<std::string> {
    ReparamJet jet(mobius(s));
    for (int n = 2; n <= 6; ++n)
      for (int k = 2; k <= n; ++k)
        if (!vacuum_cocycle(n, k, jet).is_zero())
          return "n=" + std::to_string(n) + " k=" + std::to_string(k);
    return std::nullopt;
  });
}

// ---- modular ----

void modular_suite(Runner& run) {
  Sampler& s = run.sampler;
  auto conn = canonical_connection(QuasiModular());
  run.property("depth_stability", 12, [&](int i) -> std::optional<std::string> {
    int k = 4 + 2 * (i % 6);
    QuasiModular f = s.modular(k);
    auto d = serre_derive(GradedForm<QuasiModular>{f, k}, conn);
    if (!is_modular(d.value)) return d.value.to_string();
    return std::nullopt;
  });
  run.property("weight_additivity", 12, [&](int i) -> std::optional<std::string> {
    int k = 2 + 2 * (i % 3), l = 4 + 2 * (i % 2), r = 1 + i % 3;
    GradedForm<QuasiModular> f{s.quasimodular(k), k}, g{s.quasimodular(l), l};
    auto b = rc_bracket(f, g, r, BracketSide::Left, conn);
    if (b.weight != k + l + 2 * r) return "weight " + std::to_string(b.weight);
    check_weight(b);
    return std::nullopt;
  });
  run.property("left_right_symmetry", 10, [&](int i) -> std::optional<std::string> {
    int k = 4 + 2 * (i % 2), l = 6, r = 1 + i % 3;
    GradedForm<QuasiModular> f{s.modular(k), k}, g{s.modular(l), l};
    auto left = rc_bracket(f, g, r, BracketSide::Left, conn);
    auto right = rc_bracket(f, g, r, BracketSide::Right, conn);
    auto skew = rc_bracket(f, g, r, BracketSide::Skew, conn);
    if (auto bad = same(left.value, right.value)) return bad;
    if (!skew.value.is_zero()) return "skew " + skew.value.to_string();
    return std::nullopt;
  });
  run.property("rc_first_correction", 10, [&](int i) {
    using MQ = Matrix<QMRat>;
    int k = 2 + 2 * (i % 3), l = 4;
    MQ f = s.qm_matrix(2, k), g = s.qm_matrix(2, l), gh = s.qm_matrix(2, 2);
    NormalizedConnection<MQ> c{gh};
    auto b = rc_bracket(GradedForm<MQ>{f, k}, GradedForm<MQ>{g, l}, 1, BracketSide::Left, c);
    MQ lhs = b.value - (Rational(k) * (f * qm_derive(g)) - Rational(l) * (qm_derive(f) * g));
    MQ rhs = make_rational(k * l, 2) * ((gh * f - f * gh) * g);
    return same(lhs, rhs);
  });
  run.property("maurer_cartan_flat", 8, [&](int i) -> std::optional<std::string> {
    int n = 4 + 2 * (i % 4);
    if (i % 2 == 0) {
      QMRat phi(s.modular(n));
      if (phi.is_zero()) return std::nullopt;
      GradedForm<QMRat> f{phi, n};
      return same(serre_derive(f, maurer_cartan(f)).value, QMRat(0));
    }
    Matrix<QMRat> phi = Matrix<QMRat>::scalar(2, QMRat(s.modular(n)));
    phi(0, 1) = QMRat(s.modular(n));
    if (det(phi).is_zero()) return std::nullopt;
    GradedForm<Matrix<QMRat>> f{phi, n};
    return same(serre_derive(f, maurer_cartan(f)).value, Matrix<QMRat>(2));
  });
  run.property("mlde_cancellation", 3, [&](int i) {
    Rational alpha = std::array<Rational, 3>{0, 1, make_rational(17, 5)}[static_cast<std::size_t>(i)];
    auto ref = closed_Ik(mldo_second_order(0, alpha), 2);
    for (int k : {2, 11})
      if (auto bad = same(closed_Ik(mldo_second_order(k, alpha), 2), ref)) return bad;
    return std::optional<std::string>{};
  });
}

// ---- Siegel ----

SiegelElement random_form(Sampler& s, int k, int m, int deg) {
  std::vector<MVRat> c;
  for (int a = 0; a <= m; ++a) c.push_back(s.mv_poly(deg));
  return SiegelElement::form(k, c);
}

MVRat det_Z() { return tau(1) * tau(3) - tau(2) * tau(2); }

void siegel_suite(Runner& run) {
  Sampler& s = run.sampler;
  auto& rng = s.engine();
  run.property("symplectic_membership", 30, [&](int) -> std::optional<std::string> {
    auto g = random_symplectic(rng);
    if (!SymplecticElement::is_symplectic(g.matrix())) return g.to_string();
    return std::nullopt;
  });
  run.property("dz_transform", 10, [&](int) -> std::optional<std::string> {
    auto r = dz_transform_check(random_symplectic(rng));
    if (!r.exact) return r.residual;
    return std::nullopt;
  });
  run.property("chain_rule", 10, [&](int) -> std::optional<std::string> {
    auto r = chain_rule_check(s.mv_poly(3), random_symplectic(rng));
    if (!r.exact) return r.residual;
    return std::nullopt;
  });
  run.property("anomaly", 16, [&](int i) -> std::optional<std::string> {
    static const int ks[4] = {0, 1, 2, 4};
    int k = ks[i % 4], m = 2 * ((i / 4) % 2);
    auto r = anomaly_check(random_form(s, k, m, 2), random_symplectic(rng));
    if (!r.exact) return r.residual;
    return std::nullopt;
  });
  run.property("connection_law", 8, [&](int i) -> std::optional<std::string> {
    SiegelElement phi0 = SiegelElement::scalar(i % 2 ? det_Z() : det_Z() + s.mv_poly(1));
    auto r = connection_law_check(phi0, 2 + i % 3, make_rational(1 + i, 2), random_symplectic(rng));
    if (!r.exact) return r.residual;
    return std::nullopt;
  });
  run.property("covariant_transport", 8, [&](int i) -> std::optional<std::string> {
    auto r = covariant_transport_check(random_form(s, i % 3, 2 * (i % 2), 2),
                                       SiegelElement::scalar(det_Z()), 2, Rational(1 + i % 2),
                                       random_symplectic(rng));
    if (!r.exact) return r.residual;
    return std::nullopt;
  });
  run.property("maurer_cartan_kills_source", 4, [&](int i) -> std::optional<std::string> {
    SiegelElement phi;
    long N = 2 + i;
    if (i % 2 == 0) {
      phi = SiegelElement::scalar(det_Z(), static_cast<int>(N));
    } else {
      Matrix<MVRat> p(2);
      do {
        for (std::size_t a = 0; a < 2; ++a)
          for (std::size_t b = 0; b < 2; ++b) p(a, b) = s.mv_poly(1);
      } while (det(p).is_zero());
      phi = SiegelElement::matrix(p, static_cast<int>(N));
    }
    auto conn = maurer_cartan_A(phi, N, make_rational(3, 2));
    auto d = covariant_raise(phi, conn);
    if (!d.is_zero()) return d.to_string();
    return std::nullopt;
  });
  run.property("da_leibniz", 10, [&](int i) {
    auto conn = maurer_cartan_A(SiegelElement::scalar(det_Z()), 2, Rational(1));
    SiegelElement x = random_form(s, i % 3, 2 * (i % 2), 2), y = random_form(s, 1 + i % 2, 0, 2);
    auto lhs = covariant_raise(x * y, conn);
    auto rhs = covariant_raise(x, conn) * y + x * covariant_raise(y, conn);
    return same(lhs, rhs);
  });
  run.property("odet_reduces_to_det", 10, [&](int i) {
    std::size_t g = 1 + static_cast<std::size_t>(i % 3);
    Matrix<RatFunc> x(g);
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = a; b < g; ++b) x(a, b) = x(b, a) = s.poly(1);
    std::vector<Matrix<RatFunc>> xs(g, x);
    return same(odet(xs), det(x));
  });
  run.property("odet_symmetric_multilinear", 10, [&](int i) -> std::optional<std::string> {
    std::size_t g = 2 + static_cast<std::size_t>(i % 2);
    auto sym = [&] {
      Matrix<RatFunc> x(g);
      for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = a; b < g; ++b) x(a, b) = x(b, a) = s.poly(1);
      return x;
    };
    std::vector<Matrix<RatFunc>> xs;
    for (std::size_t j = 0; j < g; ++j) xs.push_back(sym());
    auto base = odet(xs);
    auto swapped = xs;
    std::swap(swapped[0], swapped[1]);
    if (auto bad = same(odet(swapped), base)) return "symmetry: " + *bad;
    Matrix<RatFunc> y = sym();
    Rational c = s.rational();
    auto mixed = xs;
    mixed[0] = xs[0] + c * y;
    auto other = xs;
    other[0] = y;
    if (auto bad = same(odet(mixed), base + c * odet(other))) return "linearity: " + *bad;
    return std::nullopt;
  });
  run.property("odet_covariance", 8, [&](int i) -> std::optional<std::string> {
    std::size_t g = 2 + static_cast<std::size_t>(i % 2);
    Matrix<RatFunc> m(g);
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = 0; b < g; ++b) m(a, b) = RatFunc(s.rational());
    std::vector<Matrix<MatRF>> xs, ys;
    for (std::size_t j = 0; j < g; ++j) {
      Matrix<MatRF> x(g);
      for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = a; b < g; ++b) x(a, b) = x(b, a) = s.matrix(2, 1);
      Matrix<MatRF> y(g);
      for (std::size_t a = 0; a < g; ++a)
        for (std::size_t d = 0; d < g; ++d) {
          MatRF acc(2);
          for (std::size_t b = 0; b < g; ++b)
            for (std::size_t c = 0; c < g; ++c)
              acc = acc + scale(m(a, b) * m(d, c), x(b, c));
          y(a, d) = acc;
        }
      xs.push_back(x);
      ys.push_back(y);
    }
    RatFunc dm = det(m);
    return same(odet(ys), scale(dm * dm, odet(xs)));
  });
  run.property("det_bracket_modularity", 6, [&](int i) -> std::optional<std::string> {
    auto f1 = SiegelElement::scalar(s.mv_poly(2), 1 + i % 2);
    auto f2 = SiegelElement::scalar(s.mv_poly(2), 2 + i % 3);
    auto r = det_bracket_check(f1, f2, SiegelElement::scalar(det_Z()), 2, Rational(1),
                               random_symplectic(rng));
    if (!r.exact) return r.residual;
    return std::nullopt;
  });
  run.property("ode_typing", 6, [&](int i) -> std::optional<std::string> {
    auto conn = maurer_cartan_A(SiegelElement::scalar(det_Z()), 2, Rational(1));
    int k = 1 + i % 4;
    auto f = SiegelElement::scalar(s.mv_poly(2), k);
    auto q2 = random_form(s, 0, 4, 1);
    auto x = covariant_raise(covariant_raise(f, conn), conn) + q2 * f;
    if (x.k() != k || x.m() != 4) return "bidegree (" + std::to_string(x.k()) + "," + std::to_string(x.m()) + ")";
    return std::nullopt;
  });
  run.property("siegel_Ik_gauge", 4, [&](int i) -> std::optional<std::string> {
    auto conn = maurer_cartan_A(SiegelElement::scalar(det_Z()), 2, Rational(1));
    SiegelRing ring{2, conn};
    int n = 2 + i % 2;
    std::vector<SiegelElement> a;
    for (int j = 1; j <= n; ++j) {
      std::vector<Matrix<MVRat>> c;
      for (int e = 0; e <= 2 * j; ++e) {
        Matrix<MVRat> m(2);
        for (std::size_t p = 0; p < 2; ++p)
          for (std::size_t q = 0; q < 2; ++q) m(p, q) = s.mv_poly(1);
        c.push_back(m);
      }
      a.push_back(SiegelElement(0, 2 * j, c));
    }
    BinomialOperator<SiegelRing> l(ring, a);
    Matrix<MVRat> f(2);
    do {
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) f(p, q) = MVRat(s.rational());
    } while (det(f).is_zero());
    auto F = SiegelElement::matrix(f), Finv = F.inverse().with_weight(0);
    std::vector<SiegelElement> b;
    for (int j = 1; j <= n; ++j) b.push_back(Finv * l.a[static_cast<std::size_t>(j)] * F);
    BinomialOperator<SiegelRing> lg(ring, b);
    auto I = siegel_I_all(l), Ig = siegel_I_all(lg);
    for (int k = 2; k <= n; ++k) {
      const auto& x = I[static_cast<std::size_t>(k)];
      if (!x.is_zero() && (x.k() != 0 || x.m() != 2 * k)) return "bidegree of I" + std::to_string(k);
      if (auto bad = same(Ig[static_cast<std::size_t>(k)], Finv * x * F)) return bad;
    }
    if (n == 2) {
      const auto& a1 = l.a[1];
      if (auto bad = same(I[2], l.a[2] - covariant_raise(a1, conn) - a1 * a1)) return bad;
    }
    return std::nullopt;
  });
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rings", "ore", "invariants",
                                              "reparam", "modular", "siegel"};
  return names;
}

std::optional<SuiteReport> run_suite(const std::string& name, std::uint64_t seed,
                                     const PropertyHook& on_property) {
  Runner run(name, seed, on_property);
  if (name == "rings") rings_suite(run);
  else if (name == "ore") ore_suite(run);
  else if (name == "invariants") invariants_suite(run);
  else if (name == "reparam") reparam_suite(run);
  else if (name == "modular") modular_suite(run);
  else if (name == "siegel") siegel_suite(run);
  else return std::nullopt;
  return run.report;
}

}  // namespace wilc
