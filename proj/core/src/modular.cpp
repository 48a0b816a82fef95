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
#include "wilc/modular.hpp"

namespace wilc {

int qm_weight(const Matrix<QMRat>& x, int fallback) {
  int w = fallback;
  bool seen = false;
  for (const auto& e : x.entries()) {
    if (e.is_zero()) continue;
    int we = homogeneous_weight(e, 0);
    if (seen && we != w) fail(ErrorKind::InhomogeneousForm, "matrix entries of mixed weight");
    w = we;
    seen = true;
  }
  return w;
}

bool depth_zero(const QuasiModular& x) { return x.poly().degree(0) == 0; }
bool depth_zero(const QMRat& x) { return x.num().degree(0) == 0 && x.den().degree(0) == 0; }
bool depth_zero(const Matrix<QMRat>& x) {
  for (const auto& e : x.entries())
    if (!depth_zero(e)) return false;
  return true;
}

NormalizedConnection<QMRat> maurer_cartan(const GradedForm<QMRat>& phi) {
  if (phi.weight == 0) fail(ErrorKind::ZeroWeight, "Maurer-Cartan connection needs N != 0");
  if (phi.value.is_zero()) fail(ErrorKind::SingularForm, "Phi is not invertible");
  return {make_rational(2, phi.weight) * (phi.value.inverse() * phi.value.derive())};
}

NormalizedConnection<Matrix<QMRat>> maurer_cartan(const GradedForm<Matrix<QMRat>>& phi) {
  if (phi.weight == 0) fail(ErrorKind::ZeroWeight, "Maurer-Cartan connection needs N != 0");
  Matrix<QMRat> inv;
  try {
    inv = inverse(phi.value);
  } catch (const MathError&) {
    fail(ErrorKind::SingularForm, "Phi is not invertible");
  }
  return {make_rational(2, phi.weight) * (inv * qm_derive(phi.value))};
}

BinomialOperator<QuasiModularRing> mldo_second_order(int k, const Rational& alpha) {
  QuasiModularRing ring;
  using Op = OreOperator<QuasiModularRing>;
  Op outer(ring, {QuasiModular(make_rational(-(k + 2), 12) * E2()), QuasiModular(1)});
  Op inner(ring, {QuasiModular(make_rational(-k, 12) * E2()), QuasiModular(1)});
  Op l = ore_mul(outer, inner) + Op::constant(ring, QuasiModular(alpha * E4()));
  return to_binomial(l);
}

BinomialOperator<QuasiModularRing> nsz_example_operator() {
  QuasiModularRing ring;
  QuasiModular a1 = make_rational(-1, 6) * E2();
  QuasiModular a2 = make_rational(1, 6) * E2().derive() - make_rational(169, 300) * E4();
  QuasiModular a3 = make_rational(1271, 1080) * E6();
  return BinomialOperator<QuasiModularRing>(ring, {a1, a2, a3});
}

MLDOCoefficients nsz_example_coefficients() {
  MLDOCoefficients c;
  c.n = 3;
  c.k = 0;
  c.K = 6;
  c.a = {make_rational(1271, 1080) * E6(),
         make_rational(1, 2) * E2().derive() - make_rational(169, 100) * E4(),
         make_rational(-1, 2) * E2(), QuasiModular(1)};
  return c;
}

GradedForm<QuasiModular> nsz_hm(const MLDOCoefficients& c, int m) {
  if (m < 0 || m > c.n) fail(ErrorKind::IndexOutOfRange, "h_" + std::to_string(m));
  QuasiModular acc;
  for (int s = 0; s <= c.n - m; ++s) {
    Rational den = rising(Rational(c.K - 2 * m - s - 1), s);
    if (den == 0)
      fail(ErrorKind::PochhammerZero,
           "(" + std::to_string(c.K - 2 * m - s - 1) + ")_" + std::to_string(s) + " vanishes");
    Rational coeff = binomial(m + s, s) * rising(Rational(c.k + m), s) / den;
    if (coeff == 0) continue;
    QuasiModular x = c.a[static_cast<std::size_t>(m + s)];
    for (int i = 0; i < s; ++i) x = x.derive();
    acc = acc + coeff * x;
  }
  return {acc, c.K - 2 * m};
}

GradedForm<QuasiModular> discriminant_current(const GradedForm<QuasiModular>& w2,
                                              const GradedForm<QuasiModular>& w3) {
  if (w2.weight != 4 || w3.weight != 6)
    fail(ErrorKind::WeightMismatch, "expected weights 4 and 6");
  check_weight(w2);
  check_weight(w3);
  QuasiModular x = Rational(-27) * (Rational(4) * (w2.value * w2.value * w2.value) +
                                   w3.value * w3.value);
  return {x, 12};
}

std::optional<std::pair<Rational, Rational>> e4e6_coordinates(const QuasiModular& x) {
  Rational c1 = x.poly().coefficient(1, 3).constant_term();
  Rational c2 = x.poly().coefficient(2, 2).constant_term();
  QuasiModular rest = x - (c1 * E4() * E4() * E4() + c2 * E6() * E6());
  if (!rest.is_zero()) return std::nullopt;
  return std::make_pair(c1, c2);
}

}  // namespace wilc
