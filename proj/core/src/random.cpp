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

#include "wilc/random.hpp"

namespace wilc {

long Sampler::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational Sampler::rational(long range) {
  return make_rational(integer(-range, range), integer(1, 3));
}

Rational Sampler::nonzero_rational(long range) {
  Rational c;
  do c = rational(range);
  while (c == 0);
  return c;
}

RatFunc Sampler::poly(int deg, long range) {
  Poly p;
  for (int d = 0; d <= deg; ++d) p += Poly::term(Monomial::var(0, d), Rational(integer(-range, range)));
  return RatFunc(p);
}

RatFunc Sampler::ratfunc(int deg) {
  RatFunc p = poly(deg);
  if (integer(0, 1) == 0) return p;
  return p / (z_var() - RatFunc(Rational(integer(-3, 3))));
}

Matrix<RatFunc> Sampler::matrix(std::size_t r, int deg) {
  Matrix<RatFunc> m(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = poly(deg);
  return m;
}

Matrix<RatFunc> Sampler::invertible(std::size_t r, int deg) {
  while (true) {
    Matrix<RatFunc> m = matrix(r, deg);
    if (!det(m).is_zero()) return m;
  }
}

Matrix<RatFunc> Sampler::constant_matrix(std::size_t r) { return matrix(r, 0); }

Matrix<RatFunc> Sampler::constant_invertible(std::size_t r) { return invertible(r, 0); }

QuasiModular Sampler::quasimodular(int weight) {
  Poly p;
  for (int a = 0; 2 * a <= weight; ++a)
    for (int b = 0; 2 * a + 4 * b <= weight; ++b) {
      int rest = weight - 2 * a - 4 * b;
      if (rest % 6) continue;
      Monomial m = Monomial::var(0, a) * Monomial::var(1, b) * Monomial::var(2, rest / 6);
      p += Poly::term(m, rational());
    }
  return QuasiModular(p);
}

QuasiModular Sampler::modular(int weight) {
  Poly p;
  for (int b = 0; 4 * b <= weight; ++b) {
    int rest = weight - 4 * b;
    if (rest % 6) continue;
    p += Poly::term(Monomial::var(1, b) * Monomial::var(2, rest / 6), rational());
  }
  return QuasiModular(p);
}

Matrix<QMRat> Sampler::qm_matrix(std::size_t r, int weight) {
  Matrix<QMRat> m(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = QMRat(quasimodular(weight));
  return m;
}

MVRat Sampler::mv_poly(int deg, long range) {
  Poly p;
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b)
      for (int c = 0; a + b + c <= deg; ++c) {
        long x = integer(-range, range);
        if (x == 0) continue;
        p += Poly::term(Monomial::var(0, a) * Monomial::var(1, b) * Monomial::var(2, c), Rational(x));
      }
  return MVRat(p);
}

BinomialOperator<RatFuncRing> Sampler::scalar_operator(int n, int deg) {
  std::vector<RatFunc> a;
  for (int i = 0; i < n; ++i) a.push_back(poly(deg));
  return BinomialOperator<RatFuncRing>(RatFuncRing{}, std::move(a));
}

BinomialOperator<MatrixRing<RatFuncRing>> Sampler::matrix_operator(std::size_t r, int n, int deg) {
  std::vector<Matrix<RatFunc>> a;
  for (int i = 0; i < n; ++i) a.push_back(matrix(r, deg));
  return BinomialOperator<MatrixRing<RatFuncRing>>(MatrixRing<RatFuncRing>{r, {}}, std::move(a));
}

}  // namespace wilc
