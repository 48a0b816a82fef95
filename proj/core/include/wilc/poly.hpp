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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wilc/rational.hpp"

namespace wilc {

inline constexpr int kMaxVars = 4;

// Exponent vector packed into 16-bit lanes, variable 0 most significant,
// so integer order is lexicographic order.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  static Monomial var(int i, unsigned e = 1) {
    return Monomial(static_cast<std::uint64_t>(e) << shift(i));
  }

  unsigned exponent(int i) const {
    return static_cast<unsigned>((bits_ >> shift(i)) & 0xffffu);
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += exponent(i);
    return d;
  }
  bool is_one() const { return bits_ == 0; }
  bool divides(Monomial other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exponent(i) > other.exponent(i)) return false;
    return true;
  }
  std::uint64_t bits() const { return bits_; }

  friend Monomial operator*(Monomial a, Monomial b) {
    return Monomial(a.bits_ + b.bits_);
  }
  // requires b | a
  friend Monomial operator/(Monomial a, Monomial b) {
    return Monomial(a.bits_ - b.bits_);
  }
  friend auto operator<=>(Monomial, Monomial) = default;

 private:
  static constexpr int shift(int i) { return 16 * (kMaxVars - 1 - i); }
  std::uint64_t bits_ = 0;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse polynomial over Q in at most kMaxVars variables. Terms are kept
// sorted by decreasing monomial with nonzero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  static Poly var(int i, unsigned e = 1);
  static Poly term(Monomial m, const Rational& c);
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
  }
  Rational constant_term() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  unsigned degree(int var) const;
  unsigned total_degree() const;
  unsigned var_mask() const;
  Poly partial(int var) const;
  Poly monic() const;
  Poly pow(unsigned e) const;
  // Coefficients with respect to var, keyed by exponent.
  std::map<unsigned, Poly> coefficients(int var) const;
  Poly coefficient(int var, unsigned e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  // Evaluate with each variable replaced by values[i]; unused lanes may be
  // absent from values.
  template <class T>
  T evaluate(std::span<const T> values, const T& one) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Term> terms_;
};

std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
Poly exact_quotient(const Poly& a, const Poly& b);
// Monic gcd (leading lexicographic coefficient 1); gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Monic gcd of the coefficients of p viewed as a polynomial in var.
Poly content_in(const Poly& p, int var);

template <class T>
T Poly::evaluate(std::span<const T> values, const T& one) const {
  std::vector<std::vector<T>> powers(values.size());
  auto power = [&](int i, unsigned e) -> const T& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(one);
    while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
    return cache[e];
  };
  T acc = one - one;
  for (const auto& t : terms_) {
    T prod = one;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono.exponent(i);
      if (e) prod = prod * power(i, e);
    }
    acc = acc + t.coeff * prod;
  }
  return acc;
}

}  // namespace wilc
