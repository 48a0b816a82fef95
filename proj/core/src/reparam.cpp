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
#include "wilc/reparam.hpp"

#include "wilc/ore.hpp"

namespace wilc {

ReparamJet::ReparamJet(const RatFunc& lambda, int order) {
  RatFuncRing ring;
  lam_ = derivatives(ring, lambda, order + 1);
  if (lam_[1].is_zero()) fail(ErrorKind::ConstantMap, "lambda is constant");
  sig_ = derivatives(ring, lam_[1].inverse(), order);
  lam_.pop_back();
  const RatFunc& l1 = lam_[1];
  RatFunc r = lam_[2] / l1;
  RatFunc s = lam_[3] / l1 - make_rational(3, 2) * (r * r);
  s_ = derivatives(ring, s, 2);
}

const RatFunc& ReparamJet::lambda_deriv(int i) const {
  if (i < 0 || i > order()) fail(ErrorKind::IndexOutOfRange, "jet order");
  return lam_[static_cast<std::size_t>(i)];
}

const RatFunc& ReparamJet::sigma_deriv(int i) const {
  if (i < 0 || i >= static_cast<int>(sig_.size())) fail(ErrorKind::IndexOutOfRange, "jet order");
  return sig_[static_cast<std::size_t>(i)];
}

Schwarzian schwarzian(const ReparamJet& jet) { return {jet.S(), jet.S1(), jet.S2()}; }

RatFunc schwarzian_of(const RatFunc& lambda) {
  RatFuncRing ring;
  auto d = derivatives(ring, lambda, 3);
  if (d[1].is_zero()) fail(ErrorKind::ConstantMap, "lambda is constant");
  RatFunc r = d[2] / d[1];
  return d[3] / d[1] - make_rational(3, 2) * (r * r);
}

SigmaBellTable sigma_bell(const ReparamJet& jet, int M) {
  RatFuncRing ring;
  const RatFunc& s = jet.sigma();
  SigmaBellTable b(static_cast<std::size_t>(M) + 1);
  b[0] = {RatFunc(1)};
  for (int m = 0; m < M; ++m) {
    auto& row = b[static_cast<std::size_t>(m + 1)];
    const auto& prev = b[static_cast<std::size_t>(m)];
    row.assign(static_cast<std::size_t>(m) + 2, RatFunc());
    for (int j = 0; j <= m + 1; ++j) {
      RatFunc acc;
      if (j >= 1) acc = acc + s * prev[static_cast<std::size_t>(j - 1)];
      if (j <= m) acc = acc + s * ring.derive(prev[static_cast<std::size_t>(j)]);
      row[static_cast<std::size_t>(j)] = acc;
    }
  }
  return b;
}

RatFunc vacuum_cocycle(int n, int k, const ReparamJet& jet) {
  if (k < 2 || k > n) fail(ErrorKind::IndexOutOfRange, "cocycle index");
  RatFuncRing ring;
  std::vector<RatFunc> zeros(static_cast<std::size_t>(n), RatFunc());
  BinomialOperator<RatFuncRing> dn(ring, zeros);
  return closed_Ik(pullback_operator(dn, jet), k);
}

RatFunc reparam_C(int n, int k, int j, const ReparamJet& jet) {
  RatFuncRing ring;
  auto b = sigma_bell(jet, n);
  RatFunc sig_n(1);
  for (int i = 0; i < n; ++i) sig_n = sig_n * jet.lambda_deriv(1);
  RatFunc arg = make_rational(-(n - 1), 2) * (jet.sigma_deriv(1) / jet.sigma());
  auto p = bell_P_table(ring, arg, k - j);
  RatFunc acc;
  for (int r = 0; r <= k - j; ++r) {
    Rational c = binomial(k, r) * binomial(n, j) / binomial(n, k - r);
    acc = acc + c * (b[static_cast<std::size_t>(n - j)][static_cast<std::size_t>(n - k + r)] *
                     p[static_cast<std::size_t>(r)]);
  }
  return sig_n * acc;
}

}  // namespace wilc
