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


// Reference formulas written out by hand, independent of the library's
// recursive algorithms.

#pragma once

#include <array>
#include <functional>
#include <vector>

#include "wilc/elements.hpp"
#include "wilc/matrix.hpp"
#include "wilc/reparam.hpp"

namespace oracle {

using wilc::Rational;

template <class E>
using Deriv = std::function<E(const E&)>;

// I_2..I_5 for a binomial operator with coefficients a[0..n], products kept in order.
template <class E>
E explicit_I(int k, const std::vector<E>& a, const Deriv<E>& d) {
  const E& a1 = a[1];
  E a1p = d(a1), a1pp = d(a1p), a1ppp = d(a1pp), a1pppp = d(a1ppp);
  auto r = [](long p, long q = 1) { return wilc::make_rational(p, q); };
  switch (k) {
    case 2: return a[2] - a1p - a1 * a1;
    case 3:
      return a[3] - r(3) * (a[2] * a1) - a1pp + r(2) * (a1p * a1 - a1 * a1p) + r(2) * (a1 * a1 * a1);
    case 4:
      return a[4] - r(4) * (a[3] * a1) + r(6) * (a[2] * a1 * a1) - r(6) * (a[2] * a1p) - a1ppp +
             r(3) * (a1p * a1p) + r(3) * (a1pp * a1 - a1 * a1pp) +
             r(3) * (a1 * a1 * a1p - a1p * a1 * a1) + r(6) * (a1 * a1p * a1) -
             r(3) * (a1 * a1 * a1 * a1);
    case 5: {
      E s = a[5] - r(5) * (a[4] * a1) + r(10) * (a[3] * a1 * a1) - r(10) * (a[3] * a1p);
      s = s - r(10) * (a[2] * a1pp) + r(10) * (a[2] * a1 * a1p) + r(20) * (a[2] * a1p * a1) -
          r(10) * (a[2] * a1 * a1 * a1);
      s = s - a1pppp - r(4) * (a1 * a1ppp) + r(4) * (a1ppp * a1) + r(4) * (a1p * a1pp) +
          r(6) * (a1pp * a1p);
      s = s + r(4) * (a1 * a1 * a1pp) - r(6) * (a1pp * a1 * a1) + r(12) * (a1 * a1pp * a1) +
          r(12) * (a1 * a1p * a1p) - r(4) * (a1p * a1 * a1p);
      s = s - r(8) * (a1p * a1p * a1) - r(4) * (a1 * a1 * a1 * a1p) -
          r(8) * (a1 * a1 * a1p * a1) - r(12) * (a1 * a1p * a1 * a1) +
          r(4) * (a1p * a1 * a1 * a1) + r(4) * (a1 * a1 * a1 * a1 * a1);
      return s;
    }
  }
  return a[0] - a[0];
}

// Operators as coefficient lists b[j] of D^j, multiplied by the Leibniz rule.
template <class E>
std::vector<E> ore_product(const std::vector<E>& x, const std::vector<E>& y, const Deriv<E>& d,
                           const E& zero) {
  if (x.empty() || y.empty()) return {};
  std::vector<E> out(x.size() + y.size() - 1, zero);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      E dy = y[j];
      for (std::size_t l = 0; l <= i; ++l) {
        out[i + j - l] = out[i + j - l] + wilc::binomial(static_cast<long>(i), static_cast<long>(l)) * (x[i] * dy);
        dy = d(dy);
      }
    }
  }
  return out;
}

// nabla^n + sum_k binom(n,k) I_k nabla^(n-k) with nabla = D + a1, as D-coefficients.
template <class E>
std::vector<E> rebuild(int n, const E& a1, const std::vector<E>& I, const Deriv<E>& d,
                       const E& zero, const E& one) {
  std::vector<std::vector<E>> nab{{one}};
  for (int j = 0; j < n; ++j) nab.push_back(ore_product<E>({a1, one}, nab.back(), d, zero));
  std::vector<E> out = nab[static_cast<std::size_t>(n)];
  for (int k = 2; k <= n; ++k) {
    const auto& p = nab[static_cast<std::size_t>(n - k)];
    for (std::size_t j = 0; j < p.size(); ++j)
      out[j] = out[j] + wilc::binomial(n, k) * (I[static_cast<std::size_t>(k)] * p[j]);
  }
  return out;
}

// P_2 and P_3 expanded for the u-star coefficients a2*, a3*.
template <class E>
E star_a2(const std::vector<E>& a, const E& u, const Deriv<E>& d) {
  return a[2] - d(u) - u * a[1] - a[1] * u + u * u;
}

template <class E>
E star_a3(const std::vector<E>& a, const E& u, const Deriv<E>& d) {
  const E& a1 = a[1];
  E up = d(u), upp = d(up), a1p = d(a1);
  auto r = [](long p) { return Rational(p); };
  return a[3] - r(3) * (a[2] * u) - upp - r(2) * (a1 * up) - up * a1 + up * u + r(2) * (u * up) +
         r(2) * (a1 * a1 * u) - u * a1 * a1 + r(2) * (a1p * u) - r(2) * (u * a1p) - a1 * u * a1 +
         a1 * u * u + u * a1 * u + u * u * a1 - u * u * u;
}

// Truncated q-series as coefficient vectors.
using Series = std::vector<Rational>;

inline Rational sigma(int k, int n) {
  Rational s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      Rational p = 1;
      for (int i = 0; i < k; ++i) p *= d;
      s += p;
    }
  return s;
}

inline Series eisenstein(int weight, int order) {
  long c = weight == 2 ? -24 : weight == 4 ? 240 : -504;
  Series s(static_cast<std::size_t>(order) + 1);
  s[0] = 1;
  for (int n = 1; n <= order; ++n) s[static_cast<std::size_t>(n)] = c * sigma(weight - 1, n);
  return s;
}

inline Series mul(const Series& a, const Series& b) {
  Series c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// x(E2, E4, E6) as a q-series.
inline Series series_of(const wilc::QuasiModular& x, int order) {
  std::array<Series, 3> gens{eisenstein(2, order), eisenstein(4, order), eisenstein(6, order)};
  Series out(static_cast<std::size_t>(order) + 1);
  for (const auto& t : x.poly().terms()) {
    Series term(out.size());
    term[0] = t.coeff;
    for (int v = 0; v < 3; ++v)
      for (unsigned e = 0; e < t.mono.exponent(v); ++e) term = mul(term, gens[static_cast<std::size_t>(v)]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i];
  }
  return out;
}

// q d/dq
inline Series qdq(const Series& s) {
  Series out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = Rational(static_cast<long>(i)) * s[i];
  return out;
}

inline wilc::RatFunc d(const wilc::RatFunc& x) { return x.derive(); }

inline wilc::RatFunc schwarzian(const wilc::RatFunc& lam) {
  auto l1 = d(lam), l2 = d(l1), l3 = d(l2);
  return l3 / l1 - wilc::make_rational(3, 2) * (l2 * l2) / (l1 * l1);
}

// Explicit n = 3 and n = 4 coefficient laws; entries are (tilde a_1 .. tilde a_n).
template <class E>
std::vector<E> coefficient_law(const std::vector<E>& a, const wilc::RatFunc& lam) {
  using wilc::RatFunc;
  using wilc::make_rational;
  int n = static_cast<int>(a.size()) - 1;
  RatFunc l1 = d(lam), l2 = d(l1), l3 = d(l2), l4 = d(l3);
  RatFunc q = l2 / l1;
  std::vector<E> c;
  for (int i = 0; i <= n; ++i) c.push_back(wilc::compose_elem(a[static_cast<std::size_t>(i)], lam));
  const E one = c[0];
  auto s = [](const RatFunc& f, const E& x) { return wilc::scalar_mul(f, x); };
  std::vector<E> out(static_cast<std::size_t>(n) + 1, one);
  if (n == 3) {
    out[1] = s(l1, c[1]) - s(q, one);
    out[2] = s(l1 * l1, c[2]) - s(l2, c[1]) - s(make_rational(1, 3) * (l3 / l1), one) + s(q * q, one);
    out[3] = s(l1 * l1 * l1, c[3]);
  } else if (n == 4) {
    out[1] = s(l1, c[1]) - s(make_rational(3, 2) * q, one);
    out[2] = s(l1 * l1, c[2]) - s(RatFunc(2) * l2, c[1]) - s(make_rational(2, 3) * (l3 / l1), one) +
             s(make_rational(5, 2) * (q * q), one);
    out[3] = s(l1 * l1 * l1, c[3]) - s(make_rational(3, 2) * (l1 * l2), c[2]) - s(l3, c[1]) +
             s(RatFunc(3) * (l2 * l2) / l1, c[1]) - s(make_rational(1, 4) * (l4 / l1), one) +
             s(make_rational(5, 2) * (l2 * l3) / (l1 * l1), one) -
             s(make_rational(15, 4) * (q * q * q), one);
    out[4] = s(l1 * l1 * l1 * l1, c[4]);
  }
  return out;
}

}  // namespace oracle
