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

#include <optional>
#include <utility>
#include <vector>

#include "wilc/elements.hpp"
#include "wilc/invariants.hpp"
#include "wilc/matrix.hpp"

namespace wilc {

// Quasimodular values: QuasiModular, QMRat or Matrix<QMRat>.
inline QuasiModular qm_derive(const QuasiModular& x) { return x.derive(); }
inline QMRat qm_derive(const QMRat& x) { return x.derive(); }
inline Matrix<QMRat> qm_derive(const Matrix<QMRat>& x) {
  return x.map([](const QMRat& e) { return e.derive(); });
}

inline int qm_weight(const QuasiModular& x, int fallback) { return homogeneous_weight(x, fallback); }
inline int qm_weight(const QMRat& x, int fallback) { return homogeneous_weight(x, fallback); }
int qm_weight(const Matrix<QMRat>& x, int fallback);

bool depth_zero(const QuasiModular& x);
bool depth_zero(const QMRat& x);
bool depth_zero(const Matrix<QMRat>& x);

inline QuasiModular qm_scalar(const QuasiModular&, const QuasiModular& c) { return c; }
inline QMRat qm_scalar(const QMRat&, const QMRat& c) { return c; }
inline Matrix<QMRat> qm_scalar(const Matrix<QMRat>& like, const QMRat& c) {
  return Matrix<QMRat>::scalar(like.size(), c);
}

template <class T>
struct GradedForm {
  T value;
  int weight = 0;
};

// Throws InhomogeneousForm / WeightMismatch unless every monomial has the
// declared weight.
template <class T>
void check_weight(const GradedForm<T>& f) {
  int w = qm_weight(f.value, f.weight);
  if (w != f.weight)
    fail(ErrorKind::WeightMismatch,
         "declared weight " + std::to_string(f.weight) + ", found " + std::to_string(w));
}

// ghat = G/(2 pi i); covariant derivative D - (k/2) ghat on weight k
template <class T>
struct NormalizedConnection {
  T g;
};

// ghat = E2/6
template <class T>
NormalizedConnection<T> canonical_connection(const T& like) {
  return {qm_scalar(like, QMRat(make_rational(1, 6) * E2()))};
}
inline NormalizedConnection<QuasiModular> canonical_connection(const QuasiModular&) {
  return {QuasiModular(make_rational(1, 6) * E2())};
}

template <class T>
GradedForm<T> serre_derive(const GradedForm<T>& f, const NormalizedConnection<T>& conn) {
  check_weight(f);
  return {qm_derive(f.value) - make_rational(f.weight, 2) * (conn.g * f.value), f.weight + 2};
}

template <class T>
GradedForm<T> higher_serre(const GradedForm<T>& f, const NormalizedConnection<T>& conn, int r) {
  GradedForm<T> x = f;
  for (int i = 0; i < r; ++i) x = serre_derive(x, conn);
  return x;
}

enum class BracketSide { Left, Right, Sym, Skew };

template <class T>
GradedForm<T> rc_bracket(const GradedForm<T>& f, const GradedForm<T>& g, int r, BracketSide side,
                         const NormalizedConnection<T>& conn) {
  check_weight(f);
  check_weight(g);
  int k = f.weight, l = g.weight;
  std::vector<T> df{f.value}, dg{g.value};
  for (int s = 1; s <= r; ++s) {
    df.push_back(serre_derive(GradedForm<T>{df.back(), k + 2 * (s - 1)}, conn).value);
    dg.push_back(serre_derive(GradedForm<T>{dg.back(), l + 2 * (s - 1)}, conn).value);
  }
  T left = f.value - f.value, right = left;
  for (int s = 0; s <= r; ++s) {
    Rational c = binomial(k + r - 1, r - s) * binomial(l + r - 1, s);
    if (s % 2) c = -c;
    if (c == 0) continue;
    const T& a = df[static_cast<std::size_t>(s)];
    const T& b = dg[static_cast<std::size_t>(r - s)];
    left = left + c * (a * b);
    right = right + c * (b * a);
  }
  T out;
  switch (side) {
    case BracketSide::Left: out = left; break;
    case BracketSide::Right: out = right; break;
    case BracketSide::Sym: out = make_rational(1, 2) * (left + right); break;
    case BracketSide::Skew: out = make_rational(1, 2) * (left - right); break;
  }
  return {out, k + l + 2 * r};
}

// (2/N) Phi^{-1} D Phi
NormalizedConnection<QMRat> maurer_cartan(const GradedForm<QMRat>& phi);
NormalizedConnection<Matrix<QMRat>> maurer_cartan(const GradedForm<Matrix<QMRat>>& phi);

// D_{k+2} o D_k + alpha E4 in binomial form
BinomialOperator<QuasiModularRing> mldo_second_order(int k, const Rational& alpha);
BinomialOperator<QuasiModularRing> nsz_example_operator();

// L = sum_r a_r D^r of type (k, K)
struct MLDOCoefficients {
  int n = 0;
  std::vector<QuasiModular> a;  // a[0..n]
  int k = 0;
  int K = 0;
};
MLDOCoefficients nsz_example_coefficients();
GradedForm<QuasiModular> nsz_hm(const MLDOCoefficients& c, int m);

GradedForm<QuasiModular> discriminant_current(const GradedForm<QuasiModular>& w2,
                                              const GradedForm<QuasiModular>& w3);
// x = c1 E4^3 + c2 E6^2 when possible
std::optional<std::pair<Rational, Rational>> e4e6_coordinates(const QuasiModular& x);

}  // namespace wilc
