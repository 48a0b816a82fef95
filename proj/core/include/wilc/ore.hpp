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

#include <algorithm>
#include <concepts>
#include <string>
#include <vector>

#include "wilc/error.hpp"
#include "wilc/rational.hpp"

namespace wilc {

template <class R>
concept DifferentialRing = requires(const R& ring, const typename R::Element& x,
                                    const Rational& c) {
  { ring.zero() } -> std::convertible_to<typename R::Element>;
  { ring.one() } -> std::convertible_to<typename R::Element>;
  { ring.derive(x) } -> std::convertible_to<typename R::Element>;
  { x + x } -> std::convertible_to<typename R::Element>;
  { x - x } -> std::convertible_to<typename R::Element>;
  { x * x } -> std::convertible_to<typename R::Element>;
  { -x } -> std::convertible_to<typename R::Element>;
  { c * x } -> std::convertible_to<typename R::Element>;
  { x == x } -> std::convertible_to<bool>;
  { x.is_zero() } -> std::convertible_to<bool>;
};

template <class R>
concept InvertibleRing = DifferentialRing<R> && requires(const R& ring,
                                                         const typename R::Element& x) {
  { ring.inverse(x) } -> std::convertible_to<typename R::Element>;
};

// sum_j b_j D^j in left normal form. The zero operator has no coefficients
// and order -1.
template <DifferentialRing R>
class OreOperator {
 public:
  using Element = typename R::Element;

  explicit OreOperator(R ring = R{}) : ring_(std::move(ring)) {}
  OreOperator(R ring, std::vector<Element> coeffs)
      : ring_(std::move(ring)), b_(std::move(coeffs)) {
    trim();
  }
  static OreOperator D(const R& ring, int power = 1) {
    std::vector<Element> b(static_cast<std::size_t>(power) + 1, ring.zero());
    b.back() = ring.one();
    return OreOperator(ring, std::move(b));
  }
  static OreOperator constant(const R& ring, const Element& a) {
    return OreOperator(ring, {a});
  }

  const R& ring() const { return ring_; }
  int order() const { return static_cast<int>(b_.size()) - 1; }
  bool is_zero() const { return b_.empty(); }
  Element coeff(int j) const {
    if (j < 0 || j > order()) return ring_.zero();
    return b_[static_cast<std::size_t>(j)];
  }
  const std::vector<Element>& coeffs() const { return b_; }

  OreOperator operator-() const {
    std::vector<Element> b;
    for (const auto& x : b_) b.push_back(-x);
    return OreOperator(ring_, std::move(b));
  }
  friend OreOperator operator+(const OreOperator& a, const OreOperator& b) {
    std::size_t n = std::max(a.b_.size(), b.b_.size());
    std::vector<Element> c;
    for (std::size_t j = 0; j < n; ++j) c.push_back(a.coeff(int(j)) + b.coeff(int(j)));
    return OreOperator(a.ring_, std::move(c));
  }
  friend OreOperator operator-(const OreOperator& a, const OreOperator& b) { return a + (-b); }
  friend bool operator==(const OreOperator& a, const OreOperator& b) { return a.b_ == b.b_; }

  // a * L with a acting by left multiplication
  friend OreOperator left_mul(const Element& a, const OreOperator& l) {
    std::vector<Element> c;
    for (const auto& x : l.b_) c.push_back(a * x);
    return OreOperator(l.ring_, std::move(c));
  }

 private:
  void trim() {
    while (!b_.empty() && b_.back().is_zero()) b_.pop_back();
  }
  R ring_;
  std::vector<Element> b_;
};

// derive^0 .. derive^m of y
template <DifferentialRing R>
std::vector<typename R::Element> derivatives(const R& ring, const typename R::Element& y,
                                             int m) {
  std::vector<typename R::Element> out{y};
  for (int i = 0; i < m; ++i) out.push_back(ring.derive(out.back()));
  return out;
}

template <DifferentialRing R>
OreOperator<R> ore_mul(const OreOperator<R>& l1, const OreOperator<R>& l2) {
  using E = typename R::Element;
  const R& ring = l1.ring();
  if (l1.is_zero() || l2.is_zero()) return OreOperator<R>(ring);
  int n1 = l1.order(), n2 = l2.order();
  std::vector<E> c(static_cast<std::size_t>(n1 + n2) + 1, ring.zero());
  for (int j = 0; j <= n2; ++j) {
    E b = l2.coeff(j);
    if (b.is_zero()) continue;
    auto db = derivatives(ring, b, n1);
    for (int i = 0; i <= n1; ++i) {
      E a = l1.coeff(i);
      if (a.is_zero()) continue;
      // D^i b = sum_l binom(i,l) b^(l) D^(i-l)
      for (int l = 0; l <= i; ++l) {
        if (db[l].is_zero()) continue;
        c[static_cast<std::size_t>(i - l + j)] =
            c[static_cast<std::size_t>(i - l + j)] + binomial(i, l) * (a * db[l]);
      }
    }
  }
  return OreOperator<R>(ring, std::move(c));
}

template <DifferentialRing R>
OreOperator<R> ore_pow(const OreOperator<R>& l, int m) {
  OreOperator<R> acc = OreOperator<R>::constant(l.ring(), l.ring().one());
  for (int i = 0; i < m; ++i) acc = ore_mul(acc, l);
  return acc;
}

template <DifferentialRing R>
typename R::Element ore_apply(const OreOperator<R>& l, const typename R::Element& y) {
  const R& ring = l.ring();
  auto dy = derivatives(ring, y, std::max(l.order(), 0));
  typename R::Element acc = ring.zero();
  for (int j = 0; j <= l.order(); ++j) acc = acc + l.coeff(j) * dy[j];
  return acc;
}

template <InvertibleRing R>
struct GaugeParam {
  using Element = typename R::Element;
  Element f;
  Element f_inv;
  Element u;
};

template <InvertibleRing R>
GaugeParam<R> make_gauge(const R& ring, const typename R::Element& f) {
  auto f_inv = ring.inverse(f);
  return {f, f_inv, f_inv * ring.derive(f)};
}

// f^{-1} L f by direct normal ordering of the triple product.
template <InvertibleRing R>
OreOperator<R> gauge_conjugate(const OreOperator<R>& l, const GaugeParam<R>& g) {
  const R& ring = l.ring();
  return ore_mul(ore_mul(OreOperator<R>::constant(ring, g.f_inv), l),
                 OreOperator<R>::constant(ring, g.f));
}

// D(b) + a1 b - b a1
template <DifferentialRing R>
typename R::Element delta(const R& ring, const typename R::Element& b,
                          const typename R::Element& a1) {
  return ring.derive(b) + (a1 * b - b * a1);
}

// P_0 .. P_m with P_{m+1} = D(P_m) + u P_m
template <DifferentialRing R>
std::vector<typename R::Element> bell_P_table(const R& ring, const typename R::Element& u,
                                              int m) {
  std::vector<typename R::Element> p{ring.one()};
  for (int i = 0; i < m; ++i) p.push_back(ring.derive(p.back()) + u * p.back());
  return p;
}

template <DifferentialRing R>
typename R::Element bell_P(const R& ring, int m, const typename R::Element& u) {
  return bell_P_table(ring, u, m).back();
}

// Q_0 .. Q_m with Q_{m+1} = Delta_{a1}(Q_m) + u Q_m
template <DifferentialRing R>
std::vector<typename R::Element> bell_Q_table(const R& ring, const typename R::Element& u,
                                              const typename R::Element& a1, int m) {
  std::vector<typename R::Element> q{ring.one()};
  for (int i = 0; i < m; ++i) q.push_back(delta(ring, q.back(), a1) + u * q.back());
  return q;
}

template <DifferentialRing R>
typename R::Element bell_Q(const R& ring, int m, const typename R::Element& u,
                           const typename R::Element& a1) {
  return bell_Q_table(ring, u, a1, m).back();
}

// sum_j binom(m,j) P_{m-j}(u) D^j
template <DifferentialRing R>
OreOperator<R> normal_order_power(const R& ring, const typename R::Element& u, int m) {
  auto p = bell_P_table(ring, u, m);
  std::vector<typename R::Element> c;
  for (int j = 0; j <= m; ++j) c.push_back(binomial(m, j) * p[static_cast<std::size_t>(m - j)]);
  return OreOperator<R>(ring, std::move(c));
}

template <DifferentialRing R>
std::string render(const OreOperator<R>& l) {
  if (l.is_zero()) return "0";
  std::string s;
  for (int j = l.order(); j >= 0; --j) {
    auto c = l.coeff(j);
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + l.ring().render(c) + ")";
    if (j > 0) s += "*D" + (j > 1 ? "^" + std::to_string(j) : std::string());
  }
  return s;
}

}  // namespace wilc
