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

#pragma once

#include <cstdint>
#include <random>

#include "wilc/elements.hpp"
#include "wilc/invariants.hpp"
#include "wilc/matrix.hpp"

namespace wilc {

// Seeded generator of small exact test data.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  long integer(long lo, long hi);
  // p/q with |p| <= range, 1 <= q <= 3
  Rational rational(long range = 3);
  Rational nonzero_rational(long range = 3);

  // polynomial in z of degree <= deg
  RatFunc poly(int deg, long range = 3);
  // poly(deg) / (z - c) or poly(deg)
  RatFunc ratfunc(int deg);
  Matrix<RatFunc> matrix(std::size_t r, int deg);
  Matrix<RatFunc> invertible(std::size_t r, int deg);
  // entries constant
  Matrix<RatFunc> constant_matrix(std::size_t r);
  Matrix<RatFunc> constant_invertible(std::size_t r);

  // random combination of the monomials of the given weight
  QuasiModular quasimodular(int weight);
  // depth 0
  QuasiModular modular(int weight);
  Matrix<QMRat> qm_matrix(std::size_t r, int weight);

  // polynomial in tau1, tau2, tau3 of total degree <= deg
  MVRat mv_poly(int deg, long range = 2);

  BinomialOperator<RatFuncRing> scalar_operator(int n, int deg);
  BinomialOperator<MatrixRing<RatFuncRing>> matrix_operator(std::size_t r, int n, int deg);

 private:
  std::mt19937_64 rng_;
};

}  // namespace wilc
