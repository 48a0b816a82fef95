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
#include "wilc/qseries.hpp"

#include <array>
#include <sstream>

namespace wilc {

QSeries::QSeries(int order, const Rational& c0)
    : order_(order), c_(static_cast<std::size_t>(order) + 1) {
  c_[0] = c0;
}

QSeries::QSeries(int order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(order) + 1);
}

bool QSeries::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

QSeries QSeries::truncate(int order) const {
  if (order >= order_) return *this;
  return QSeries(order, std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

QSeries QSeries::inverse() const {
  if (c_[0] == 0) fail(ErrorKind::DivisionByZero, "series with zero constant term");
  QSeries r(order_);
  Rational inv = 1 / c_[0];
  r.c_[0] = inv;
  for (int n = 1; n <= order_; ++n) {
    Rational s = 0;
    for (int i = 1; i <= n; ++i) s += c_[i] * r.c_[n - i];
    r.c_[n] = -inv * s;
  }
  return r;
}

QSeries QSeries::derive() const {
  QSeries r(order_);
  for (int n = 1; n <= order_; ++n) r.c_[n] = n * c_[n];
  return r;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= order_; ++n) {
    Rational c = c_[n];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (n == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "q";
    if (n > 1) os << "^" << n;
  }
  if (first) os << "0";
  os << " + O(q^" << order_ + 1 << ")";
  return os.str();
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  int n = std::min(a.order_, b.order_);
  QSeries r(n);
  for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int n = std::min(a.order_, b.order_);
  QSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries r = a;
  for (auto& x : r.c_) x *= c;
  return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
  int n = std::min(a.order_, b.order_);
  for (int i = 0; i <= n; ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Integer divisor_sigma(int k, long n) {
  Integer s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
      s += p;
    }
  return s;
}

QSeries eisenstein_qseries(int weight, int order) {
  long factor = 0;
  switch (weight) {
    case 2: factor = -24; break;
    case 4: factor = 240; break;
    case 6: factor = -504; break;
    default: fail(ErrorKind::WeightMismatch, "Eisenstein weight must be 2, 4 or 6");
  }
  QSeries s(order, 1);
  for (int n = 1; n <= order; ++n) s[n] = Rational(factor * divisor_sigma(weight - 1, n));
  return s;
}

QSeries eval_qseries(const QuasiModular& x, int order) {
  std::array<QSeries, 3> gens{eisenstein_qseries(2, order), eisenstein_qseries(4, order),
                              eisenstein_qseries(6, order)};
  return x.poly().evaluate<QSeries>(gens, QSeries(order, 1));
}

QSeries eval_qseries(const QMRat& x, int order) {
  return eval_qseries(QuasiModular(x.num()), order) *
         eval_qseries(QuasiModular(x.den()), order).inverse();
}

}  // namespace wilc
