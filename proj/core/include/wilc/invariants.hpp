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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wilc/matrix.hpp"
#include "wilc/ore.hpp"

namespace wilc {

// sum_i binom(n,i) a_i D^(n-i) with a_0 = 1.
template <DifferentialRing R>
struct BinomialOperator {
  using Element = typename R::Element;

  R ring{};
  int n = 0;
  std::vector<Element> a;  // a[0] = 1, a[1..n]

  BinomialOperator() = default;
  BinomialOperator(R r, std::vector<Element> coeffs)
      : ring(std::move(r)), n(static_cast<int>(coeffs.size())) {
    a.push_back(ring.one());
    for (auto& c : coeffs) a.push_back(std::move(c));
  }

  const Element& coeff(int i) const {
    if (i < 0 || i > n) fail(ErrorKind::IndexOutOfRange, "coefficient index " + std::to_string(i));
    return a[static_cast<std::size_t>(i)];
  }

  OreOperator<R> to_ore() const {
    std::vector<Element> b(static_cast<std::size_t>(n) + 1, ring.zero());
    for (int i = 0; i <= n; ++i) b[static_cast<std::size_t>(n - i)] = binomial(n, i) * a[i];
    return OreOperator<R>(ring, std::move(b));
  }

  friend bool operator==(const BinomialOperator& x, const BinomialOperator& y) {
    return x.n == y.n && x.a == y.a;
  }
};

template <DifferentialRing R>
BinomialOperator<R> to_binomial(const OreOperator<R>& l, bool auto_normalize = false) {
  using E = typename R::Element;
  const R& ring = l.ring();
  int n = l.order();
  if (n < 0) fail(ErrorKind::NotMonic, "zero operator");
  OreOperator<R> m = l;
  if (!(l.coeff(n) == ring.one())) {
    if (!auto_normalize) fail(ErrorKind::NotMonic, "leading coefficient is not 1");
    E inv;
    try {
      inv = ring.inverse(l.coeff(n));
    } catch (const MathError&) {
      fail(ErrorKind::SingularLeading, "leading coefficient is not invertible");
    }
    m = left_mul(inv, l);
  }
  std::vector<E> a;
  for (int i = 1; i <= n; ++i) a.push_back((1 / binomial(n, i)) * m.coeff(n - i));
  return BinomialOperator<R>(ring, std::move(a));
}

template <DifferentialRing R>
struct OperData {
  using Element = typename R::Element;
  int n = 0;
  Element a1{};
  std::vector<Element> I;  // I[k] for 0 <= k <= n; I[0] = 1, I[1] = 0

  const Element& at(int k) const {
    if (k < 2 || k > n) fail(ErrorKind::IndexOutOfRange, "I_" + std::to_string(k));
    return I[static_cast<std::size_t>(k)];
  }
};

// nabla^0 .. nabla^m with nabla = D + a1
template <DifferentialRing R>
std::vector<OreOperator<R>> nabla_powers(const R& ring, const typename R::Element& a1, int m) {
  OreOperator<R> nabla(ring, {a1, ring.one()});
  std::vector<OreOperator<R>> out{OreOperator<R>::constant(ring, ring.one())};
  for (int j = 0; j < m; ++j) out.push_back(ore_mul(nabla, out.back()));
  return out;
}

template <DifferentialRing R>
OperData<R> miura_extract(const BinomialOperator<R>& l) {
  using E = typename R::Element;
  const R& ring = l.ring;
  OperData<R> d;
  d.n = l.n;
  if (l.n < 2) {
    if (l.n == 1) d.a1 = l.a[1];
    return d;
  }
  d.a1 = l.a[1];
  auto nab = nabla_powers(ring, d.a1, l.n);
  OreOperator<R> rest = l.to_ore() - nab[static_cast<std::size_t>(l.n)];
  std::vector<E> b(static_cast<std::size_t>(l.n) + 1, ring.zero());
  for (int j = l.n - 2; j >= 0; --j) {
    E c = rest.coeff(j);
    b[static_cast<std::size_t>(l.n - j)] = c;
    if (!c.is_zero()) rest = rest - left_mul(c, nab[static_cast<std::size_t>(j)]);
  }
  if (!rest.is_zero()) fail(ErrorKind::SingularLeading, "triangular elimination left a remainder");
  d.I.assign(static_cast<std::size_t>(l.n) + 1, ring.zero());
  d.I[0] = ring.one();
  for (int k = 2; k <= l.n; ++k)
    d.I[static_cast<std::size_t>(k)] = (1 / binomial(l.n, k)) * b[static_cast<std::size_t>(k)];
  return d;
}

// nabla^n + sum_k binom(n,k) I_k nabla^(n-k)
template <DifferentialRing R>
OreOperator<R> reconstruct(const R& ring, const OperData<R>& d) {
  auto nab = nabla_powers(ring, d.a1, d.n);
  OreOperator<R> l = nab[static_cast<std::size_t>(d.n)];
  for (int k = 2; k <= d.n; ++k)
    l = l + left_mul(binomial(d.n, k) * d.I[static_cast<std::size_t>(k)],
                     nab[static_cast<std::size_t>(d.n - k)]);
  return l;
}

// I_2..I_n from sum_j binom(k,j) a_(k-j) Q_j(-a1)
template <DifferentialRing R>
std::vector<typename R::Element> closed_I_all(const BinomialOperator<R>& l) {
  using E = typename R::Element;
  const R& ring = l.ring;
  std::vector<E> out(static_cast<std::size_t>(std::max(l.n, 1)) + 1, ring.zero());
  out[0] = ring.one();
  if (l.n < 2) return out;
  const E& a1 = l.a[1];
  auto q = bell_Q_table(ring, -a1, a1, l.n);
  for (int k = 2; k <= l.n; ++k) {
    E acc = ring.zero();
    for (int j = 0; j <= k; ++j)
      acc = acc + binomial(k, j) * (l.a[static_cast<std::size_t>(k - j)] * q[static_cast<std::size_t>(j)]);
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

template <DifferentialRing R>
typename R::Element closed_Ik(const BinomialOperator<R>& l, int k) {
  if (k < 2 || k > l.n) fail(ErrorKind::IndexOutOfRange, "I_" + std::to_string(k));
  return closed_I_all(l)[static_cast<std::size_t>(k)];
}

// a_k^* = sum_m binom(k,m) I_m P_(k-m)(a1 - u), I_0 = 1, I_1 = 0
template <DifferentialRing R>
BinomialOperator<R> star_action(const typename R::Element& u, const BinomialOperator<R>& l) {
  using E = typename R::Element;
  const R& ring = l.ring;
  auto inv = closed_I_all(l);
  auto p = bell_P_table(ring, l.a[1] - u, l.n);
  std::vector<E> out;
  for (int k = 1; k <= l.n; ++k) {
    E acc = ring.zero();
    for (int m = 0; m <= k; ++m) {
      if (m == 1) continue;
      acc = acc + binomial(k, m) * (inv[static_cast<std::size_t>(m)] * p[static_cast<std::size_t>(k - m)]);
    }
    out.push_back(acc);
  }
  return BinomialOperator<R>(ring, std::move(out));
}

// Delta_{a1}^m (I_k)
template <DifferentialRing R>
typename R::Element covariant_jet(const BinomialOperator<R>& l, int k, int m) {
  if (k < 2 || k > l.n || m < 0)
    fail(ErrorKind::IndexOutOfRange, "jet of I_" + std::to_string(k));
  auto x = closed_Ik(l, k);
  for (int i = 0; i < m; ++i) x = delta(l.ring, x, l.a[1]);
  return x;
}

template <DifferentialRing R>
struct WCurrents {
  using Element = typename R::Element;
  std::map<int, Element> W;
  const Element& at(int k) const {
    auto it = W.find(k);
    if (it == W.end()) fail(ErrorKind::IndexOutOfRange, "W_" + std::to_string(k));
    return it->second;
  }
};

// c_{k,j} = k!(k-1)!/(2k-2)! * (2k-j-2)!/((k-j-1)! j! (k-j)!)
inline Rational ek_coefficient(int k, int j) {
  return factorial(k) * factorial(k - 1) / factorial(2 * k - 2) * factorial(2 * k - j - 2) /
         (factorial(k - j - 1) * factorial(j) * factorial(k - j));
}

template <DifferentialRing R>
WCurrents<R> w_currents_from(const R& ring, int n, const typename R::Element& a1,
                             const std::vector<typename R::Element>& inv, int up_to) {
  using E = typename R::Element;
  if (up_to > n || up_to > 6 || up_to < 2)
    fail(ErrorKind::IndexOutOfRange, "W_" + std::to_string(up_to));
  auto d = [&](const E& x, int times = 1) {
    E y = x;
    for (int i = 0; i < times; ++i) y = delta(ring, y, a1);
    return y;
  };
  const Rational nn(n);
  const E& I2 = inv[2];
  WCurrents<R> w;
  w.W[2] = I2;
  if (up_to >= 3) w.W[3] = inv[3] - Rational(3, 2) * d(I2);
  if (up_to >= 4) {
    const E& I4 = inv[4];
    Rational c = 3 * (5 * nn + 7) / (5 * (nn + 1));
    w.W[4] = I4 - Rational(2) * d(inv[3]) + Rational(6, 5) * d(I2, 2) - c * (I2 * I2);
  }
  if (up_to >= 5) {
    Rational c = (7 * nn + 13) / (7 * (nn + 1));
    w.W[5] = inv[5] - Rational(5, 2) * d(inv[4]) + Rational(15, 7) * d(inv[3], 2) -
             Rational(10 * c) * (I2 * inv[3]) + Rational(15 * c) * (I2 * d(I2));
  }
  if (up_to >= 6) {
    Rational n1 = nn + 1;
    E dI2 = d(I2);
    w.W[6] = inv[6] - Rational(3) * d(inv[5]) + Rational(10, 3) * d(inv[4], 2) -
             Rational(5, 3) * d(inv[3], 3) - Rational(5 * (3 * nn + 7) / n1) * (I2 * inv[4]) +
             Rational(10 * (3 * nn + 7) / n1) * (I2 * d(inv[3])) +
             Rational(30 * (7 * nn * nn + 28 * nn + 25) / (7 * n1 * n1)) * (I2 * I2 * I2) +
             Rational(5 * (7 * nn + 8) / (14 * n1)) * (dI2 * dI2) -
             Rational(10 * (14 * nn + 31) / (7 * n1)) * (I2 * d(I2, 2));
  }
  return w;
}

template <DifferentialRing R>
WCurrents<R> w_currents(const BinomialOperator<R>& l, int up_to) {
  if (up_to > l.n || up_to > 6 || up_to < 2)
    fail(ErrorKind::IndexOutOfRange, "W_" + std::to_string(up_to));
  return w_currents_from(l.ring, l.n, l.a[1], closed_I_all(l), up_to);
}

template <DifferentialRing R>
typename R::Element ek_projective(const BinomialOperator<R>& l, int k) {
  if (k < 3 || k > l.n) fail(ErrorKind::IndexOutOfRange, "E_" + std::to_string(k));
  auto inv = closed_I_all(l);
  typename R::Element acc = l.ring.zero();
  for (int j = 0; j <= k - 3; ++j) {
    auto x = inv[static_cast<std::size_t>(k - j)];
    for (int i = 0; i < j; ++i) x = delta(l.ring, x, l.a[1]);
    Rational c = ek_coefficient(k, j);
    acc = acc + ((j % 2) ? -c : c) * x;
  }
  return acc;
}

// A word is a product of factors Delta^m(I_k), listed as (k, m).
using TraceWord = std::vector<std::pair<int, int>>;

std::string render_word(const TraceWord& w);
std::optional<TraceWord> parse_word(const std::string& text);

template <DifferentialRing Base>
std::vector<typename Base::Element> trace_invariants(
    const BinomialOperator<MatrixRing<Base>>& l, const std::vector<TraceWord>& words) {
  using M = typename MatrixRing<Base>::Element;
  std::map<std::pair<int, int>, M> cache;
  auto factor = [&](int k, int m) -> const M& {
    auto key = std::make_pair(k, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, covariant_jet(l, k, m)).first;
    return it->second;
  };
  std::vector<typename Base::Element> out;
  for (const auto& w : words) {
    M prod = l.ring.one();
    for (auto [k, m] : w) prod = prod * factor(k, m);
    out.push_back(prod.trace());
  }
  return out;
}

template <DifferentialRing Base>
typename Base::Element det_invariant(const BinomialOperator<MatrixRing<Base>>& l, int k) {
  return det(closed_Ik(l, k));
}

template <class E>
struct HilbertInvariants {
  int n = 0;
  E I2{}, I3{}, I4{};
  std::optional<E> I_inv, J_inv;
  E discriminant{};
};

template <DifferentialRing R>
HilbertInvariants<typename R::Element> hilbert_constant_invariants(const BinomialOperator<R>& l) {
  using E = typename R::Element;
  for (int i = 1; i <= l.n; ++i)
    if (!l.ring.derive(l.a[static_cast<std::size_t>(i)]).is_zero())
      fail(ErrorKind::NonConstantCoefficients, "a_" + std::to_string(i) + " is not constant");
  if (l.n != 3 && l.n != 4) fail(ErrorKind::UnsupportedOrder, "order " + std::to_string(l.n));
  auto inv = closed_I_all(l);
  HilbertInvariants<E> h;
  h.n = l.n;
  h.I2 = inv[2];
  h.I3 = inv[3];
  if (l.n == 3) {
    h.discriminant = Rational(-27) * (Rational(4) * (h.I2 * h.I2 * h.I2) + h.I3 * h.I3);
  } else {
    h.I4 = inv[4];
    E i_inv = Rational(36) * (h.I2 * h.I2) + Rational(12) * h.I4;
    E j_inv = Rational(432) * (h.I2 * h.I4 - h.I3 * h.I3 - h.I2 * h.I2 * h.I2);
    h.I_inv = i_inv;
    h.J_inv = j_inv;
    h.discriminant = Rational(4) * (i_inv * i_inv * i_inv) - j_inv * j_inv;
  }
  return h;
}

// Monic operator annihilating y_1..y_n, from the Wronskian system.
template <InvertibleRing R>
BinomialOperator<R> operator_from_solutions(const R& ring,
                                            const std::vector<typename R::Element>& ys) {
  using E = typename R::Element;
  std::size_t n = ys.size();
  if (n == 0) fail(ErrorKind::DegenerateWronskian, "no solutions");
  Matrix<E> w(n);
  std::vector<E> rhs;
  for (std::size_t i = 0; i < n; ++i) {
    auto dy = derivatives(ring, ys[i], static_cast<int>(n));
    for (std::size_t j = 0; j < n; ++j) w(i, j) = dy[j];
    rhs.push_back(-dy[n]);
  }
  Matrix<E> winv;
  try {
    winv = inverse(w);
  } catch (const MathError&) {
    fail(ErrorKind::DegenerateWronskian, "Wronskian determinant vanishes");
  }
  std::vector<E> b(n + 1, ring.zero());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) b[j] = b[j] + winv(j, i) * rhs[i];
  b[n] = ring.one();
  return to_binomial(OreOperator<R>(ring, std::move(b)));
}

// f^{-1} L f in binomial form through the coefficient law
// a~_k = sum_j binom(k,j) (f^{-1} a_(k-j) f) P_j(u).
template <InvertibleRing R>
BinomialOperator<R> gauge_binomial(const BinomialOperator<R>& l, const GaugeParam<R>& g) {
  using E = typename R::Element;
  const R& ring = l.ring;
  auto p = bell_P_table(ring, g.u, l.n);
  std::vector<E> conj;
  for (int i = 0; i <= l.n; ++i) conj.push_back(g.f_inv * l.a[static_cast<std::size_t>(i)] * g.f);
  std::vector<E> out;
  for (int k = 1; k <= l.n; ++k) {
    E acc = ring.zero();
    for (int j = 0; j <= k; ++j)
      acc = acc + binomial(k, j) * (conj[static_cast<std::size_t>(k - j)] * p[static_cast<std::size_t>(j)]);
    out.push_back(acc);
  }
  return BinomialOperator<R>(ring, std::move(out));
}

}  // namespace wilc
