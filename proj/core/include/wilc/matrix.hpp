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

#include <sstream>
#include <string>
#include <vector>

#include "wilc/error.hpp"
#include "wilc/rational.hpp"

namespace wilc {

// Square matrix over a commutative coefficient type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t r) : r_(r), e_(r * r) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : r_(rows.size()) {
    for (const auto& row : rows) {
      if (row.size() != r_) fail(ErrorKind::SizeMismatch, "matrix literal is not square");
      for (const auto& x : row) e_.push_back(x);
    }
  }
  static Matrix identity(std::size_t r) { return scalar(r, T(1)); }
  static Matrix scalar(std::size_t r, const T& c) {
    Matrix m(r);
    for (std::size_t i = 0; i < r; ++i) m(i, i) = c;
    return m;
  }

  std::size_t size() const { return r_; }
  T& operator()(std::size_t i, std::size_t j) { return e_[i * r_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * r_ + j]; }
  const std::vector<T>& entries() const { return e_; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  template <class F>
  Matrix map(F&& f) const {
    Matrix m(r_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = f(e_[i]);
    return m;
  }

  Matrix transpose() const {
    Matrix m(r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < r_; ++i) t = t + (*this)(i, i);
    return t;
  }

  Matrix operator-() const {
    return map([](const T& x) { return -x; });
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check(a, b);
    Matrix m(a.r_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check(a, b);
    Matrix m(a.r_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check(a, b);
    std::size_t r = a.r_;
    Matrix m(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < r; ++j)
          if (!b(k, j).is_zero()) m(i, j) = m(i, j) + x * b(k, j);
      }
    return m;
  }
  friend Matrix operator*(const Rational& c, const Matrix& a) {
    return a.map([&](const T& x) { return c * x; });
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.e_ == b.e_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
      if (i) os << ", ";
      os << "[";
      for (std::size_t j = 0; j < r_; ++j) {
        if (j) os << ", ";
        os << (*this)(i, j).to_string();
      }
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  static void check(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_)
      fail(ErrorKind::RingMismatch, "matrix sizes " + std::to_string(a.r_) + " and " +
                                        std::to_string(b.r_));
  }
  std::size_t r_ = 0;
  std::vector<T> e_;
};

template <class T>
Matrix<T> scale(const T& c, const Matrix<T>& a) {
  return a.map([&](const T& x) { return c * x; });
}

// Laplace expansion; valid over any commutative ring.
template <class T>
T det(const Matrix<T>& m) {
  std::size_t r = m.size();
  if (r == 1) return m(0, 0);
  if (r == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T acc{};
  for (std::size_t j = 0; j < r; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix<T> minor(r - 1);
    for (std::size_t i = 1; i < r; ++i)
      for (std::size_t k = 0, c = 0; k < r; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    T term = m(0, j) * det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Gauss-Jordan over a field; SingularMatrix when det vanishes.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  std::size_t r = m.size();
  Matrix<T> a = m, inv = Matrix<T>::identity(r);
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && a(piv, col).is_zero()) ++piv;
    if (piv == r) fail(ErrorKind::SingularMatrix, "determinant vanishes identically");
    if (piv != col)
      for (std::size_t j = 0; j < r; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    T p = a(col, col).inverse();
    for (std::size_t j = 0; j < r; ++j) {
      a(col, j) = p * a(col, j);
      inv(col, j) = p * inv(col, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      T f = a(i, col);
      for (std::size_t j = 0; j < r; ++j) {
        a(i, j) = a(i, j) - f * a(col, j);
        inv(i, j) = inv(i, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

template <class Base>
struct MatrixRing {
  using Entry = typename Base::Element;
  using Element = Matrix<Entry>;

  std::size_t r = 1;
  Base base{};

  Element zero() const { return Element(r); }
  Element one() const { return Element::identity(r); }
  Element scalar(const Rational& c) const { return Element::scalar(r, Entry(c)); }
  Element derive(const Element& x) const {
    return x.map([&](const Entry& e) { return base.derive(e); });
  }
  Element inverse(const Element& x) const { return wilc::inverse(x); }
  std::string render(const Element& x) const { return x.to_string(); }
};

}  // namespace wilc
