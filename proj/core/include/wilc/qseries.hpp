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

#include <string>
#include <vector>

#include "wilc/elements.hpp"

namespace wilc {

// Power series in q truncated after q^N.
class QSeries {
 public:
  explicit QSeries(int order = 0, const Rational& c0 = 0);
  QSeries(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  QSeries truncate(int order) const;
  QSeries inverse() const;
  // q d/dq
  QSeries derive() const;
  std::string to_string() const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, const QSeries& a);
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  int order_;
  std::vector<Rational> c_;
};

// sum of d^k over divisors d of n
Integer divisor_sigma(int k, long n);
QSeries eisenstein_qseries(int weight, int order);
QSeries eval_qseries(const QuasiModular& x, int order);
QSeries eval_qseries(const QMRat& x, int order);

}  // namespace wilc
