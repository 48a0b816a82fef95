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

#include <vector>

#include "wilc/elements.hpp"
#include "wilc/invariants.hpp"
#include "wilc/matrix.hpp"

namespace wilc {

// Scalar coordinate change lambda with sigma = 1/lambda' and Schwarzian data.
class ReparamJet {
 public:
  explicit ReparamJet(const RatFunc& lambda, int order = 8);

  const RatFunc& lambda() const { return lam_[0]; }
  // lambda^(i), 0 <= i <= order
  const RatFunc& lambda_deriv(int i) const;
  // sigma^(i)
  const RatFunc& sigma_deriv(int i) const;
  const RatFunc& sigma() const { return sigma_deriv(0); }
  int order() const { return static_cast<int>(lam_.size()) - 1; }

  const RatFunc& S() const { return s_[0]; }
  const RatFunc& S1() const { return s_[1]; }
  const RatFunc& S2() const { return s_[2]; }

 private:
  std::vector<RatFunc> lam_;
  std::vector<RatFunc> sig_;
  std::vector<RatFunc> s_;
};

struct Schwarzian {
  RatFunc S, S1, S2;
};
Schwarzian schwarzian(const ReparamJet& jet);
// lambda'''/lambda' - (3/2)(lambda''/lambda')^2 straight from lambda
RatFunc schwarzian_of(const RatFunc& lambda);

// (sigma D)^m = sum_j B[m][j] D^j for m <= M
using SigmaBellTable = std::vector<std::vector<RatFunc>>;
SigmaBellTable sigma_bell(const ReparamJet& jet, int M);

// Coefficient-level plumbing shared by scalar and matrix rings.
inline RatFunc compose_elem(const RatFunc& a, const RatFunc& lambda) { return compose(a, lambda); }
inline Matrix<RatFunc> compose_elem(const Matrix<RatFunc>& a, const RatFunc& lambda) {
  return a.map([&](const RatFunc& x) { return compose(x, lambda); });
}
inline RatFunc scalar_mul(const RatFunc& s, const RatFunc& a) { return s * a; }
inline Matrix<RatFunc> scalar_mul(const RatFunc& s, const Matrix<RatFunc>& a) { return scale(s, a); }

template <DifferentialRing R>
BinomialOperator<R> pullback_operator(const BinomialOperator<R>& l, const ReparamJet& jet) {
  using E = typename R::Element;
  const R& ring = l.ring;
  int n = l.n;
  auto b = sigma_bell(jet, n);
  RatFunc sig_n = RatFunc(1);
  for (int i = 0; i < n; ++i) sig_n = sig_n * jet.lambda_deriv(1);
  std::vector<E> comp;
  for (int i = 0; i <= n; ++i) comp.push_back(compose_elem(l.a[static_cast<std::size_t>(i)], jet.lambda()));
  std::vector<E> out;
  for (int k = 1; k <= n; ++k) {
    E acc = ring.zero();
    for (int i = 0; i <= k; ++i) {
      const RatFunc& bij = b[static_cast<std::size_t>(n - i)][static_cast<std::size_t>(n - k)];
      if (bij.is_zero()) continue;
      acc = acc + scalar_mul(Rational(binomial(n, i)) * bij, comp[static_cast<std::size_t>(i)]);
    }
    out.push_back(scalar_mul(Rational(1 / binomial(n, k)) * sig_n, acc));
  }
  return BinomialOperator<R>(ring, std::move(out));
}

// sigma^{-n} sum_i binom(n,i) (a_i o lambda)(sigma D)^(n-i) as a raw operator
template <DifferentialRing R>
OreOperator<R> pullback_unnormalized(const BinomialOperator<R>& l, const ReparamJet& jet) {
  const R& ring = l.ring;
  OreOperator<R> sd(ring, {ring.zero(), scalar_mul(jet.sigma(), ring.one())});
  OreOperator<R> acc(ring);
  for (int i = 0; i <= l.n; ++i) {
    auto term = ore_pow(sd, l.n - i);
    acc = acc + left_mul(Rational(binomial(l.n, i)) *
                             compose_elem(l.a[static_cast<std::size_t>(i)], jet.lambda()),
                         term);
  }
  return acc;
}

// I_k of sigma^{-n}(sigma D)^n
RatFunc vacuum_cocycle(int n, int k, const ReparamJet& jet);

// C_{k,j} of the closed triangular law
RatFunc reparam_C(int n, int k, int j, const ReparamJet& jet);

template <DifferentialRing R>
std::vector<typename R::Element> reparam_Ik_pullback(const BinomialOperator<R>& l,
                                                     const ReparamJet& jet) {
  auto d = miura_extract(pullback_operator(l, jet));
  return d.I;
}

// Closed law; requires a_1 = 0.
template <DifferentialRing R>
std::vector<typename R::Element> reparam_Ik_closed(const BinomialOperator<R>& l,
                                                   const ReparamJet& jet) {
  using E = typename R::Element;
  const R& ring = l.ring;
  if (l.n >= 1 && !l.a[1].is_zero()) fail(ErrorKind::NotOperGauge, "a_1 must vanish");
  auto inv = closed_I_all(l);
  std::vector<E> comp;
  for (const auto& x : inv) comp.push_back(compose_elem(x, jet.lambda()));
  std::vector<E> out(static_cast<std::size_t>(l.n) + 1, ring.zero());
  out[0] = ring.one();
  for (int k = 2; k <= l.n; ++k) {
    E acc = scalar_mul(vacuum_cocycle(l.n, k, jet), ring.one());
    for (int j = 2; j <= k; ++j)
      acc = acc + scalar_mul(reparam_C(l.n, k, j, jet), comp[static_cast<std::size_t>(j)]);
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

template <class E>
struct TensorialityReport {
  int k = 0;
  E residual{};
  bool exact() const { return residual.is_zero(); }
};

template <DifferentialRing R>
TensorialityReport<typename R::Element> verify_w_tensoriality(const BinomialOperator<R>& l,
                                                              const ReparamJet& jet, int k) {
  using E = typename R::Element;
  if (k < 2 || k > 6 || k > l.n) fail(ErrorKind::IndexOutOfRange, "W_" + std::to_string(k));
  const R& ring = l.ring;
  auto pulled = pullback_operator(l, jet);
  E lhs = w_currents(pulled, k).at(k);
  E base = compose_elem(w_currents(l, k).at(k), jet.lambda());
  RatFunc lp = RatFunc(1);
  for (int i = 0; i < k; ++i) lp = lp * jet.lambda_deriv(1);
  E res = lhs - scalar_mul(lp, base);
  if (k == 2) res = res - scalar_mul(make_rational(l.n + 1, 6) * jet.S(), ring.one());
  return {k, res};
}

// g^{-1} (pullback of L) g via the gauge coefficient law
template <InvertibleRing R>
BinomialOperator<R> overlap_transform(const BinomialOperator<R>& l, const ReparamJet& jet,
                                      const GaugeParam<R>& g) {
  return gauge_binomial(pullback_operator(l, jet), g);
}

}  // namespace wilc
