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

#include <span>
#include <string>

#include "wilc/poly.hpp"

namespace wilc {

// num/den with gcd(num, den) = 1 and den monic (leading coefficient 1).
class Frac {
 public:
  Frac() : den_(1) {}
  Frac(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  Frac(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  Frac(long c) : num_(c), den_(1) {}  // NOLINT
  Frac(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  Frac inverse() const;

  Frac operator-() const;
  friend Frac operator+(const Frac& a, const Frac& b);
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b);
  friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }
  friend Frac operator*(const Rational& c, const Frac& a);
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Frac partial(int var) const;
  // Derivation determined by the images of the variables.
  Frac derive(std::span<const Poly> images) const;
  // Replace the variables in mask by nums[i]/den (one shared denominator).
  Frac substitute(unsigned mask, std::span<const Poly> nums, const Poly& den) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  struct Reduced {};
  Frac(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

Poly derive_poly(const Poly& p, std::span<const Poly> images);
Poly substitute_poly(const Poly& p, unsigned mask, std::span<const Poly> nums,
                     const Poly& den, unsigned* out_degree);

}  // namespace wilc
