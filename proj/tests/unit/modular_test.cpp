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


#include "doctest.h"
#include "oracles.hpp"
#include "wilc/invariants.hpp"
#include "wilc/modular.hpp"
#include "wilc/random.hpp"

using namespace wilc;

namespace {
using QM = QuasiModular;
GradedForm<QM> form(const QM& x, int k) { return {x, k}; }
auto conn() { return canonical_connection(QM()); }
QM delta() { return make_rational(1, 1728) * (E4() * E4() * E4() - E6() * E6()); }

// q-series of the Serre derivative straight from divisor sums.
oracle::Series serre_series(const QM& f, int k, int order) {
  auto df = oracle::qdq(oracle::series_of(f, order));
  auto e2f = oracle::mul(oracle::series_of(E2(), order), oracle::series_of(f, order));
  for (std::size_t i = 0; i < df.size(); ++i) df[i] -= make_rational(k, 12) * e2f[i];
  return df;
}
}  // namespace

TEST_CASE("Serre derivative") {
  CHECK(serre_derive(form(E4(), 4), conn()).value == make_rational(-1, 3) * E6());
  CHECK(serre_derive(form(E6(), 6), conn()).value == make_rational(-1, 2) * (E4() * E4()));
  CHECK(serre_derive(form(QM(1), 0), conn()).value.is_zero());
  CHECK(serre_derive(form(E4(), 4), conn()).weight == 6);
  CHECK(oracle::series_of(make_rational(-1, 3) * E6(), 20) == serre_series(E4(), 4, 20));
  CHECK(oracle::series_of(make_rational(-1, 2) * (E4() * E4()), 20) == serre_series(E6(), 6, 20));
  CHECK_THROWS_AS(serre_derive(form(E4(), 6), conn()), MathError);
}

TEST_CASE("higher Serre derivatives") {
  CHECK(higher_serre(form(E4(), 4), conn(), 0).value == E4());
  CHECK(higher_serre(form(E4(), 4), conn(), 2).value == make_rational(1, 6) * (E4() * E4()));
  CHECK(higher_serre(form(E4(), 4), conn(), 2).weight == 8);
}

TEST_CASE("Rankin-Cohen brackets") {
  auto f = form(E4(), 4), g = form(E6(), 6);
  CHECK(rc_bracket(f, g, 0, BracketSide::Left, conn()).value == E4() * E6());
  auto b1 = rc_bracket(f, g, 1, BracketSide::Left, conn());
  CHECK(b1.weight == 12);
  CHECK(depth_zero(b1.value));
  auto df = serre_derive(f, conn()).value, dg = serre_derive(g, conn()).value;
  CHECK(b1.value == Rational(4) * (E4() * dg) - Rational(6) * (df * E6()));
  Sampler s(3);
  for (int i = 0; i < 4; ++i) {
    auto x = form(s.modular(4 + 2 * (i % 2)), 4 + 2 * (i % 2));
    auto y = form(s.modular(6), 6);
    auto b = rc_bracket(x, y, 2, BracketSide::Sym, conn());
    CHECK(depth_zero(b.value));
    CHECK(b.weight == x.weight + y.weight + 4);
  }
}

TEST_CASE("matrix brackets: left and right differ by commutators") {
  Sampler s(5);
  auto f = GradedForm<Matrix<QMRat>>{s.qm_matrix(2, 4), 4};
  auto g = GradedForm<Matrix<QMRat>>{s.qm_matrix(2, 6), 6};
  auto c = canonical_connection(f.value);
  auto l = rc_bracket(f, g, 1, BracketSide::Left, c);
  auto r = rc_bracket(f, g, 1, BracketSide::Right, c);
  auto df = serre_derive(f, c).value, dg = serre_derive(g, c).value;
  CHECK(l.value == Rational(4) * (f.value * dg) - Rational(6) * (df * g.value));
  CHECK(r.value == Rational(4) * (dg * f.value) - Rational(6) * (g.value * df));
  Matrix<QMRat> mf(2), mg(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      mf(i, j) = QMRat(s.modular(4));
      mg(i, j) = QMRat(s.modular(6));
    }
  auto lm = rc_bracket(GradedForm<Matrix<QMRat>>{mf, 4}, GradedForm<Matrix<QMRat>>{mg, 6}, 1, BracketSide::Left,
                       canonical_connection(mf));
  CHECK(depth_zero(lm.value));
}

TEST_CASE("Maurer-Cartan connections") {
  auto mc = maurer_cartan(GradedForm<QMRat>{QMRat(delta()), 12});
  CHECK(mc.g == QMRat(make_rational(1, 6) * E2()));
  auto m4 = maurer_cartan(GradedForm<QMRat>{QMRat(E4()), 4});
  CHECK(m4.g == QMRat(make_rational(1, 2) * (E2() * E4() - E6())) / QMRat(Rational(3) * E4()));
  Matrix<QMRat> cst{{QMRat(1), QMRat(2)}, {QMRat(0), QMRat(3)}};
  CHECK(maurer_cartan(GradedForm<Matrix<QMRat>>{cst, 8}).g.is_zero());
  CHECK_THROWS_AS(maurer_cartan(GradedForm<QMRat>{QMRat(E4()), 0}), MathError);
  // D - (N/2) g kills the source
  auto kill = serre_derive(GradedForm<QMRat>{QMRat(E4()), 4}, m4);
  CHECK(kill.value.is_zero());
}

TEST_CASE("second order modular operator") {
  for (int k : {0, 2, 11})
    for (Rational alpha : {Rational(0), Rational(1), make_rational(17, 5), make_rational(1, 144)}) {
      auto l = mldo_second_order(k, alpha);
      auto I2 = closed_Ik(l, 2);
      CHECK(I2 == (alpha - make_rational(1, 144)) * E4());
      if (k == 0) CHECK(l.a[1] == make_rational(-1, 12) * E2());
    }
}

TEST_CASE("third order example") {
  auto l = nsz_example_operator();
  auto inv = closed_I_all(l);
  CHECK(inv[2] == make_rational(-133, 225) * E4());
  CHECK(inv[3] == make_rational(-133, 450) * (E2() * E4()) + make_rational(319, 270) * E6());
  auto w = w_currents(l, 3);
  CHECK(w.at(3) == make_rational(598, 675) * E6());
  auto cur = discriminant_current(form(w.at(2), 4), form(w.at(3), 6));
  CHECK(cur.weight == 12);
  CHECK(depth_zero(cur.value));
  auto xy = e4e6_coordinates(cur.value);
  REQUIRE(xy.has_value());
  CHECK(cur.value == xy->first * (E4() * E4() * E4()) + xy->second * (E6() * E6()));
}

TEST_CASE("discriminant current examples") {
  CHECK(discriminant_current(form(E4(), 4), form(E6(), 6)).value ==
        Rational(-27) * (Rational(4) * (E4() * E4() * E4()) + E6() * E6()));
  CHECK(discriminant_current(form(QM(), 4), form(QM(), 6)).value.is_zero());
}

TEST_CASE("h_m covariants") {
  auto c = nsz_example_coefficients();
  CHECK(nsz_hm(c, c.n).value == c.a[static_cast<std::size_t>(c.n)]);
  auto h0 = nsz_hm(c, 0);
  CHECK(depth_zero(h0.value));
  CHECK(h0.weight == 2 * c.n);
  MLDOCoefficients bad = c;
  bad.K = 3;
  CHECK_THROWS_AS(nsz_hm(bad, 0), MathError);
}
