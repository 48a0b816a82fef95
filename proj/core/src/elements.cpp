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
#include "wilc/elements.hpp"

#include <array>

namespace wilc {

std::span<const std::string> ZTag::names() {
  static const std::array<std::string, 1> n{"z"};
  return n;
}

std::span<const Poly> ZTag::derivation() {
  static const std::array<Poly, 1> d{Poly(1)};
  return d;
}

std::span<const std::string> QMTag::names() {
  static const std::array<std::string, 3> n{"E2", "E4", "E6"};
  return n;
}

std::span<const Poly> QMTag::derivation() {
  static const std::array<Poly, 3> d = [] {
    Poly e2 = Poly::var(0), e4 = Poly::var(1), e6 = Poly::var(2);
    return std::array<Poly, 3>{make_rational(1, 12) * (e2 * e2 - e4),
                               make_rational(1, 3) * (e2 * e4 - e6),
                               make_rational(1, 2) * (e2 * e6 - e4 * e4)};
  }();
  return d;
}

std::span<const std::string> SiegelTag::names() {
  static const std::array<std::string, 4> n{"tau1", "tau2", "tau3", "kappa"};
  return n;
}

std::span<const Poly> SiegelTag::derivation() { return {}; }

RatFunc compose(const RatFunc& a, const RatFunc& lambda) {
  std::array<Poly, 1> nums{lambda.num()};
  return RatFunc(a.frac().substitute(1u, nums, lambda.den()));
}

namespace {

int monomial_weight(Monomial m) {
  return 2 * static_cast<int>(m.exponent(0)) + 4 * static_cast<int>(m.exponent(1)) +
         6 * static_cast<int>(m.exponent(2));
}

int poly_weight(const Poly& p, int fallback) {
  if (p.is_zero()) return fallback;
  int w = monomial_weight(p.leading().mono);
  for (const auto& t : p.terms())
    if (monomial_weight(t.mono) != w)
      fail(ErrorKind::InhomogeneousForm, "mixed weights in " + p.to_string(QMTag::names()));
  return w;
}

}  // namespace

Grading grading(const QuasiModular& x) {
  Grading g;
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : x.poly().terms()) {
    parts[monomial_weight(t.mono)].push_back(t);
    g.depth = std::max(g.depth, static_cast<int>(t.mono.exponent(0)));
  }
  for (auto& [w, terms] : parts) g.components[w] = QuasiModular(Poly::from_terms(terms));
  return g;
}

bool is_modular(const QuasiModular& x) { return x.poly().degree(0) == 0; }

int homogeneous_weight(const QuasiModular& x, int fallback) {
  return poly_weight(x.poly(), fallback);
}

int homogeneous_weight(const QMRat& x, int fallback) {
  if (x.is_zero()) return fallback;
  return poly_weight(x.num(), 0) - poly_weight(x.den(), 0);
}

int depth(const QMRat& x) {
  return static_cast<int>(x.num().degree(0)) - static_cast<int>(x.den().degree(0));
}

}  // namespace wilc
