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
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wilc/elements.hpp"
#include "wilc/invariants.hpp"
#include "wilc/matrix.hpp"

namespace wilc {

// Z = [[tau1, tau2], [tau2, tau3]]; kappa stands for 1/(2 pi i).
inline MVRat tau(int i) { return MVRat::var(i - 1); }
inline MVRat kappa() { return MVRat::var(3); }
Matrix<MVRat> siegel_Z();

Matrix<MVRat> partial_Z(const MVRat& f);
// kappa * partial_Z
Matrix<MVRat> D_Z(const MVRat& f);

class SymplecticElement {
 public:
  using Block = std::array<std::array<Rational, 2>, 2>;
  using Full = std::array<std::array<Rational, 4>, 4>;

  explicit SymplecticElement(const Full& g);
  static SymplecticElement identity();
  static SymplecticElement inversion();
  static SymplecticElement translation(long b11, long b12, long b22);
  // [[U, 0], [0, U^-t]] for U in GL2(Z)
  static SymplecticElement embedding(long u11, long u12, long u21, long u22);

  const Full& matrix() const { return g_; }
  Block A() const { return block(0, 0); }
  Block B() const { return block(0, 2); }
  Block C() const { return block(2, 0); }
  Block D() const { return block(2, 2); }
  static bool is_symplectic(const Full& g);

  friend SymplecticElement operator*(const SymplecticElement& a, const SymplecticElement& b);
  friend bool operator==(const SymplecticElement& a, const SymplecticElement& b) {
    return a.g_ == b.g_;
  }
  std::string to_string() const;

 private:
  Block block(int i, int j) const;
  Full g_;
};

// Word of length 1..max_len in the standard generators.
SymplecticElement random_symplectic(std::mt19937_64& rng, int max_len = 4);

struct SiegelAction {
  Matrix<MVRat> z;     // gamma.Z
  Matrix<MVRat> J;     // CZ + D
  Matrix<MVRat> J_inv;
  MVRat det_J;
  Matrix<MVRat> JCt;   // J C^t, symmetric
  std::array<Poly, 3> nums;  // gamma.Z entries over the common denominator
  Poly den;
};

SiegelAction siegel_act(const SymplecticElement& g);
MVRat compose(const MVRat& f, const SiegelAction& act);

struct SiegelReport {
  std::string check;
  bool exact = false;
  std::string residual;
};

SiegelReport dz_transform_check(const SymplecticElement& g);
SiegelReport chain_rule_check(const MVRat& f, const SymplecticElement& g);

// Homogeneous polynomial of degree m in u1, u2 with Mat_r(MVRat)
// coefficients; coeff(a) multiplies u1^a u2^(m-a). r = 1 for scalars.
class SiegelElement {
 public:
  SiegelElement() : SiegelElement(0, 0, {Matrix<MVRat>(1)}) {}
  SiegelElement(int k, int m, std::vector<Matrix<MVRat>> coeffs);
  static SiegelElement zero(std::size_t r, int k = 0, int m = 0);
  static SiegelElement scalar(const MVRat& f, int k = 0);
  static SiegelElement matrix(const Matrix<MVRat>& f, int k = 0);
  static SiegelElement form(int k, const std::vector<MVRat>& coeffs);
  // c20 u1^2 + c11 u1 u2 + c02 u2^2
  static SiegelElement quadratic(const MVRat& c20, const MVRat& c11, const MVRat& c02, int k = 0);

  int k() const { return k_; }
  int m() const { return m_; }
  std::size_t r() const { return c_.front().size(); }
  const Matrix<MVRat>& coeff(int a) const { return c_[static_cast<std::size_t>(a)]; }
  const std::vector<Matrix<MVRat>>& coeffs() const { return c_; }
  bool is_zero() const;
  SiegelElement with_weight(int k) const { return SiegelElement(k, m_, c_); }
  SiegelElement inverse() const;
  // Symmetric matrix avatar of a quadratic form.
  Matrix<Matrix<MVRat>> avatar() const;

  SiegelElement operator-() const;
  friend SiegelElement operator+(const SiegelElement& a, const SiegelElement& b);
  friend SiegelElement operator-(const SiegelElement& a, const SiegelElement& b) { return a + (-b); }
  friend SiegelElement operator*(const SiegelElement& a, const SiegelElement& b);
  friend SiegelElement operator*(const Rational& c, const SiegelElement& a);
  friend SiegelElement operator*(const MVRat& c, const SiegelElement& a);
  friend bool operator==(const SiegelElement& a, const SiegelElement& b);

  std::string to_string() const;

 private:
  int k_;
  int m_;
  std::vector<Matrix<MVRat>> c_;
};

SiegelElement raw_raise(const SiegelElement& phi);
// Derivative of the partner at gamma.Z, written in the variables Z:
// sum_b (u^t J D(c_b) J^t u) u^b.
SiegelElement pulled_raise(const SiegelElement& t, const SiegelAction& act);
// det(J)^k phi(Z)[J^t u]; the weight of the result is phi.k().
SiegelElement transport(const SiegelElement& phi, const SiegelAction& act);
SiegelElement transport(const SiegelElement& phi, const SymplecticElement& g);
SiegelElement jct_form(const SiegelAction& act);

SiegelReport anomaly_check(const SiegelElement& phi, const SymplecticElement& g);

struct SiegelConnection {
  Rational e;
  SiegelElement A;
  SiegelConnection(const Rational& ecc, SiegelElement a);
};

// raw_raise(phi) - ((k+m)/2e) phi A
SiegelElement covariant_raise(const SiegelElement& phi, const SiegelConnection& conn);
SiegelConnection maurer_cartan_A(const SiegelElement& phi, long N, const Rational& e);
// G = (2 pi i / e) A
SiegelElement g_normalization(const SiegelConnection& conn);

// A at gamma.Z for the partner of a Maurer-Cartan source of weight N.
SiegelElement pulled_connection(const SiegelElement& phi0, long N, const Rational& e,
                                const SiegelAction& act);
SiegelReport connection_law_check(const SiegelElement& phi0, long N, const Rational& e,
                                  const SymplecticElement& g);
SiegelReport covariant_transport_check(const SiegelElement& phi, const SiegelElement& phi0,
                                       long N, const Rational& e, const SymplecticElement& g);

// (1/g!) sum sgn(s) sgn(t) (X1)_{s1 t1} ... (Xg)_{sg tg}, factor order kept.
template <class T>
T odet(const std::vector<Matrix<T>>& xs) {
  std::size_t g = xs.size();
  if (g < 1 || g > 3) fail(ErrorKind::SizeMismatch, "odet needs 1 to 3 arguments");
  for (const auto& x : xs)
    if (x.size() != g) fail(ErrorKind::SizeMismatch, "odet argument is not g x g");
  std::vector<std::size_t> perm(g);
  for (std::size_t i = 0; i < g; ++i) perm[i] = i;
  std::vector<std::vector<std::size_t>> perms;
  std::vector<int> signs;
  do {
    perms.push_back(perm);
    int inv = 0;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j)
        if (perm[i] > perm[j]) ++inv;
    signs.push_back(inv % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  Rational norm = 1 / factorial(static_cast<long>(g));
  std::optional<T> acc;
  for (std::size_t s = 0; s < perms.size(); ++s)
    for (std::size_t t = 0; t < perms.size(); ++t) {
      T term = xs[0](perms[s][0], perms[t][0]);
      for (std::size_t i = 1; i < g; ++i) term = term * xs[i](perms[s][i], perms[t][i]);
      term = Rational(signs[s] * signs[t]) * norm * term;
      acc = acc ? *acc + term : term;
    }
  return *acc;
}

SiegelElement det_bracket(const std::vector<SiegelElement>& fs, const SiegelConnection& conn);
SiegelReport det_bracket_check(const SiegelElement& f1, const SiegelElement& f2,
                               const SiegelElement& phi0, long N, const Rational& e,
                               const SymplecticElement& g);

// Bigraded algebra with the covariant raising operator as derivation.
struct SiegelRing {
  using Element = SiegelElement;
  std::size_t r = 1;
  SiegelConnection conn{1, SiegelElement::zero(1, 0, 2)};

  Element zero() const { return SiegelElement::zero(r); }
  Element one() const { return SiegelElement::matrix(Matrix<MVRat>::identity(r)); }
  Element scalar(const Rational& c) const {
    return SiegelElement::matrix(Matrix<MVRat>::scalar(r, MVRat(c)));
  }
  Element derive(const Element& x) const { return covariant_raise(x, conn); }
  Element inverse(const Element& x) const { return x.inverse(); }
  std::string render(const Element& x) const { return x.to_string(); }
};

// Closed formula; a_i must have bidegree (0, 2i).
SiegelElement siegel_Ik(const BinomialOperator<SiegelRing>& l, int k);
std::vector<SiegelElement> siegel_I_all(const BinomialOperator<SiegelRing>& l);

}  // namespace wilc
