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
#include "wilc/random.hpp"
#include "wilc/siegel.hpp"

using namespace wilc;

namespace {
MVRat t1() { return tau(1); }
MVRat t2() { return tau(2); }
MVRat t3() { return tau(3); }
MVRat q(long p, long d = 1) { return MVRat(make_rational(p, d)); }
MVRat det_Z() { return t1() * t3() - t2() * t2(); }

SiegelElement random_form(Sampler& s, int k, int m) {
  std::vector<MVRat> c;
  for (int a = 0; a <= m; ++a) c.push_back(s.mv_poly(2));
  return SiegelElement::form(k, c);
}
}  // namespace

TEST_CASE("partial_Z") {
  CHECK(partial_Z(t1()) == Matrix<MVRat>{{q(1), q(0)}, {q(0), q(0)}});
  CHECK(partial_Z(t2()) == Matrix<MVRat>{{q(0), q(1, 2)}, {q(1, 2), q(0)}});
  CHECK(partial_Z(det_Z()) == Matrix<MVRat>{{t3(), -t2()}, {-t2(), t1()}});
  CHECK(D_Z(t1()) == Matrix<MVRat>{{kappa(), q(0)}, {q(0), q(0)}});
}

TEST_CASE("symplectic elements") {
  auto J0 = SymplecticElement::inversion();
  CHECK(SymplecticElement::is_symplectic(J0.matrix()));
  CHECK(J0 * J0 * J0 * J0 == SymplecticElement::identity());
  auto full = SymplecticElement::identity().matrix();
  full[0][1] = 1;
  CHECK_THROWS_AS(SymplecticElement{full}, MathError);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) CHECK(SymplecticElement::is_symplectic(random_symplectic(rng).matrix()));
}

TEST_CASE("siegel_act") {
  auto id = siegel_act(SymplecticElement::identity());
  CHECK(id.z == siegel_Z());
  CHECK(id.J == Matrix<MVRat>::identity(2));
  auto inv = siegel_act(SymplecticElement::inversion());
  CHECK(inv.z == Rational(-1) * inverse(siegel_Z()));
  CHECK(inv.J == Rational(-1) * siegel_Z());
}

TEST_CASE("chain rule") {
  CHECK(chain_rule_check(t1(), SymplecticElement::identity()).exact);
  CHECK(chain_rule_check(det_Z(), SymplecticElement::inversion()).exact);
  Sampler s(3);
  for (int i = 0; i < 5; ++i) CHECK(chain_rule_check(s.mv_poly(3), random_symplectic(s.engine())).exact);
}

TEST_CASE("transport") {
  Sampler s(5);
  auto phi = random_form(s, 2, 2);
  CHECK(transport(phi, SymplecticElement::identity()) == phi);
  auto g = SymplecticElement::translation(1, 0, 2);
  auto f = SiegelElement::scalar(s.mv_poly(2));
  CHECK(transport(f, g) == f);
  CHECK(transport(SiegelElement::scalar(t1(), 2), SymplecticElement::inversion()) ==
        SiegelElement::scalar(det_Z() * det_Z() * t1(), 2));
  // J = -Z under the inversion; Q[J^t u] for Q = u1^2 is (tau1 u1 + tau2 u2)^2
  auto Q = SiegelElement::quadratic(q(1), q(0), q(0));
  auto T = transport(Q, SymplecticElement::inversion());
  CHECK(T == SiegelElement::quadratic(t1() * t1(), q(2) * t1() * t2(), t2() * t2()));
}

TEST_CASE("raw raise") {
  CHECK(raw_raise(SiegelElement::scalar(q(3))).is_zero());
  CHECK(raw_raise(SiegelElement::scalar(t1())) == SiegelElement::quadratic(kappa(), q(0), q(0)));
}

TEST_CASE("anomaly") {
  Sampler s(9);
  CHECK(anomaly_check(SiegelElement::scalar(s.mv_poly(2)), random_symplectic(s.engine())).exact);
  CHECK(anomaly_check(SiegelElement::scalar(det_Z(), 2), random_symplectic(s.engine())).exact);
  for (int i = 0; i < 3; ++i) CHECK(anomaly_check(random_form(s, 1 + i, 2), random_symplectic(s.engine())).exact);
}

TEST_CASE("connections") {
  auto phi = SiegelElement::scalar(det_Z(), 2);
  auto A = maurer_cartan_A(phi, 2, Rational(1));
  // (2e/N) kappa (u^t adj(Z) u) / det Z
  auto expect = (q(1) / det_Z()) * SiegelElement::quadratic(kappa() * t3(), q(-2) * kappa() * t2(), kappa() * t1());
  CHECK(A.A == expect);
  CHECK(maurer_cartan_A(SiegelElement::scalar(q(5), 2), 2, Rational(1)).A.is_zero());
  CHECK(covariant_raise(phi, A).is_zero());
  auto x = SiegelElement::scalar(t1() * t2());
  CHECK(covariant_raise(x, A) == raw_raise(x));
  CHECK_THROWS_AS(SiegelConnection(Rational(0), A.A), MathError);
  Sampler s(11);
  for (int i = 0; i < 3; ++i)
    CHECK(connection_law_check(SiegelElement::scalar(det_Z()), 2, Rational(1), random_symplectic(s.engine())).exact);
}

TEST_CASE("matrix Maurer-Cartan source is killed") {
  Sampler s(13);
  Matrix<MVRat> p(2);
  do {
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) p(a, b) = s.mv_poly(1);
  } while (det(p).is_zero());
  auto phi = SiegelElement::matrix(p, 3);
  CHECK(covariant_raise(phi, maurer_cartan_A(phi, 3, Rational(1))).is_zero());
}

TEST_CASE("Leibniz rule for D_A") {
  Sampler s(17);
  auto A = maurer_cartan_A(SiegelElement::scalar(det_Z()), 2, Rational(1));
  for (int i = 0; i < 3; ++i) {
    auto x = random_form(s, i, 2 * (i % 2)), y = random_form(s, 1, 0);
    CHECK(covariant_raise(x * y, A) == covariant_raise(x, A) * y + x * covariant_raise(y, A));
  }
}

TEST_CASE("ordered determinant") {
  Matrix<MVRat> x{{t1(), t2()}, {t2(), t3()}};
  CHECK(odet(std::vector<Matrix<MVRat>>{Matrix<MVRat>{{t1()}}}) == t1());
  CHECK(odet(std::vector<Matrix<MVRat>>{x, x}) == det(x));
  Matrix<MVRat> y{{q(1), t1()}, {t1(), q(2)}};
  CHECK(odet(std::vector<Matrix<MVRat>>{x, y}) == odet(std::vector<Matrix<MVRat>>{y, x}));
  CHECK_THROWS_AS(odet(std::vector<Matrix<MVRat>>{x}), MathError);
}

TEST_CASE("determinant bracket") {
  Sampler s(19);
  auto A = maurer_cartan_A(SiegelElement::scalar(det_Z()), 2, Rational(1));
  auto f = SiegelElement::scalar(s.mv_poly(2), 2);
  CHECK(det_bracket({f}, A) == covariant_raise(f, A));
  auto f1 = SiegelElement::scalar(s.mv_poly(2), 1), f2 = SiegelElement::scalar(s.mv_poly(2), 2);
  CHECK(det_bracket({f1, f2}, A).k() == 5);
  CHECK(det_bracket_check(f1, f2, SiegelElement::scalar(det_Z()), 2, Rational(1), random_symplectic(s.engine())).exact);
}

TEST_CASE("siegel I_k") {
  auto conn = maurer_cartan_A(SiegelElement::scalar(det_Z()), 2, Rational(1));
  SiegelRing ring{1, conn};
  Sampler s(23);
  auto a1 = random_form(s, 0, 2), a2 = random_form(s, 0, 4);
  BinomialOperator<SiegelRing> l(ring, {a1, a2});
  CHECK(siegel_Ik(l, 2) == a2 - covariant_raise(a1, conn) - a1 * a1);
  BinomialOperator<SiegelRing> oper(ring, {SiegelElement::zero(1, 0, 2), a2});
  CHECK(siegel_Ik(oper, 2) == a2);
  BinomialOperator<SiegelRing> bad(ring, {a2, a2});
  CHECK_THROWS_AS(siegel_Ik(bad, 2), MathError);
}
