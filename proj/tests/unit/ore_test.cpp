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
#include "wilc/ore.hpp"
#include "wilc/random.hpp"

using namespace wilc;

namespace {
using Op = OreOperator<RatFuncRing>;
using MatRF = Matrix<RatFunc>;
using MRing = MatrixRing<RatFuncRing>;
using MOp = OreOperator<MRing>;

RatFuncRing ring;
RatFunc z() { return z_var(); }
RatFunc c(long p, long q = 1) { return RatFunc(make_rational(p, q)); }

MRing mring(std::size_t r) { return MRing{r, {}}; }

MOp random_op(Sampler& s, std::size_t r, int order) {
  std::vector<MatRF> b;
  for (int j = 0; j <= order; ++j) b.push_back(s.matrix(r, 1));
  return MOp(mring(r), b);
}

oracle::Deriv<MatRF> mderiv(const MRing& R) {
  return [R](const MatRF& x) { return R.derive(x); };
}
}  // namespace

TEST_CASE("ore_mul examples") {
  CHECK(ore_mul(Op::D(ring), Op::constant(ring, z())) == Op(ring, {c(1), z()}));
  CHECK(ore_mul(Op::D(ring), Op::D(ring)) == Op::D(ring, 2));
  Op dz(ring, {z(), c(1)});
  CHECK(ore_mul(dz, dz) == Op(ring, {z() * z() + c(1), c(2) * z(), c(1)}));
}

TEST_CASE("ore_apply examples") {
  CHECK(ore_apply(Op::D(ring, 2), z() * z() * z()) == c(6) * z());
  CHECK(ore_apply(Op(ring, {c(0), z()}), z()) == z());
  Op w(ring, {c(2) / (z() * z()), c(-2) / z(), c(1)});
  CHECK(ore_apply(w, z()).is_zero());
  CHECK(ore_apply(w, z() * z()).is_zero());
}

TEST_CASE("gauge_conjugate examples") {
  auto g = make_gauge(ring, z());
  CHECK(g.u == c(1) / z());
  CHECK(gauge_conjugate(Op::D(ring), g) == Op(ring, {c(1) / z(), c(1)}));
  CHECK(gauge_conjugate(Op::D(ring, 2), g) == Op(ring, {c(0), c(2) / z(), c(1)}));
  Sampler s(3);
  auto f = s.invertible(2, 1);
  auto a = s.matrix(2, 2);
  auto mg = make_gauge(mring(2), f);
  CHECK(gauge_conjugate(MOp::constant(mring(2), a), mg) ==
        MOp::constant(mring(2), inverse(f) * a * f));
}

TEST_CASE("Bell polynomials keep factor order") {
  Sampler s(9);
  MRing R = mring(2);
  auto d = mderiv(R);
  auto u = s.matrix(2, 2);
  CHECK(bell_P(R, 1, u) == u);
  CHECK(bell_P(R, 2, u) == d(u) + u * u);
  CHECK(bell_P(R, 3, u) == d(d(u)) + d(u) * u + Rational(2) * (u * d(u)) + u * u * u);
  auto a1 = s.matrix(2, 2);
  auto m = Rational(-1) * a1;
  CHECK(bell_Q(R, 0, m, a1) == R.one());
  CHECK(bell_Q(R, 2, m, a1) == Rational(-1) * d(a1) + a1 * a1);
  CHECK(bell_Q(R, 3, m, a1) ==
        Rational(-1) * d(d(a1)) + Rational(2) * (d(a1) * a1) + a1 * d(a1) - a1 * a1 * a1);
}

TEST_CASE("delta") {
  CHECK(delta(ring, z() * z(), z()) == c(2) * z());
  MRing R = mring(2);
  MatRF a1{{c(0), z()}, {c(1), c(0)}};
  CHECK(delta(R, a1, a1) == R.derive(a1));
  CHECK(delta(R, R.derive(a1), a1) == MatRF{{c(-1), c(0)}, {c(0), c(1)}});
}

TEST_CASE("normal_order_power") {
  CHECK(normal_order_power(ring, z(), 0) == Op::constant(ring, c(1)));
  CHECK(normal_order_power(ring, z(), 2) == Op(ring, {c(1) + z() * z(), c(2) * z(), c(1)}));
  Sampler s(21);
  MRing R = mring(2);
  for (int m = 1; m <= 5; ++m) {
    auto u = s.matrix(2, 1);
    MOp p(R, {u, R.one()});
    MOp pw = MOp::constant(R, R.one());
    for (int i = 0; i < m; ++i) pw = ore_mul(p, pw);
    CHECK(normal_order_power(R, u, m) == pw);
  }
}

TEST_CASE("ore_mul agrees with the Leibniz oracle and is associative") {
  Sampler s(31);
  MRing R = mring(2);
  auto d = mderiv(R);
  for (int i = 0; i < 6; ++i) {
    auto a = random_op(s, 2, 1 + i % 3), b = random_op(s, 2, 2), c3 = random_op(s, 2, 1);
    CHECK(ore_mul(a, b).coeffs() == oracle::ore_product(a.coeffs(), b.coeffs(), d, R.zero()));
    CHECK(ore_mul(ore_mul(a, b), c3) == ore_mul(a, ore_mul(b, c3)));
  }
}

TEST_CASE("gauge conjugation through the coefficient law") {
  Sampler s(41);
  MRing R = mring(2);
  for (int i = 0; i < 4; ++i) {
    auto l = s.matrix_operator(2, 1 + i, 1);
    auto g = make_gauge(R, s.invertible(2, 1));
    CHECK(gauge_binomial(l, g).to_ore() == gauge_conjugate(l.to_ore(), g));
  }
}

TEST_CASE("to_binomial") {
  auto b = to_binomial(Op(ring, {c(1), c(2) * z(), c(1)}));
  CHECK(b.n == 2);
  CHECK(b.a[1] == z());
  CHECK(b.a[2] == c(1));
  auto d3 = to_binomial(Op::D(ring, 3));
  CHECK(d3.n == 3);
  CHECK((d3.a[1].is_zero() && d3.a[2].is_zero() && d3.a[3].is_zero()));
  Op two(ring, {c(4), c(2) * z(), c(2)});
  CHECK_THROWS_AS(to_binomial(two), MathError);
  auto h = to_binomial(two, true);
  CHECK(h.a[1] == z() / c(2));
  CHECK(h.a[2] == c(2));
}
