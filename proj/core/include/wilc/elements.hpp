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
#include <span>
#include <string>

#include "wilc/error.hpp"
#include "wilc/frac.hpp"

namespace wilc {

// Variable z with d/dz.
struct ZTag {
  static std::span<const std::string> names();
  static std::span<const Poly> derivation();
};

// Variables E2, E4, E6 with the Ramanujan derivation.
struct QMTag {
  static std::span<const std::string> names();
  static std::span<const Poly> derivation();
};

// Variables tau1, tau2, tau3 and the central constant kappa.
struct SiegelTag {
  static std::span<const std::string> names();
  static std::span<const Poly> derivation();
};

template <class Tag>
class PolyElem {
 public:
  PolyElem() = default;
  PolyElem(const Poly& p) : p_(p) {}  // NOLINT
  PolyElem(const Rational& c) : p_(c) {}  // NOLINT
  PolyElem(long c) : p_(c) {}  // NOLINT
  static PolyElem var(int i, unsigned e = 1) { return PolyElem(Poly::var(i, e)); }

  const Poly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  PolyElem derive() const { return PolyElem(derive_poly(p_, Tag::derivation())); }
  std::string to_string() const { return p_.to_string(Tag::names()); }

  PolyElem operator-() const { return PolyElem(-p_); }
  friend PolyElem operator+(const PolyElem& a, const PolyElem& b) { return PolyElem(a.p_ + b.p_); }
  friend PolyElem operator-(const PolyElem& a, const PolyElem& b) { return PolyElem(a.p_ - b.p_); }
  friend PolyElem operator*(const PolyElem& a, const PolyElem& b) { return PolyElem(a.p_ * b.p_); }
  friend PolyElem operator*(const Rational& c, const PolyElem& a) { return PolyElem(c * a.p_); }
  friend bool operator==(const PolyElem& a, const PolyElem& b) { return a.p_ == b.p_; }

 private:
  Poly p_;
};

template <class Tag>
class FracElem {
 public:
  FracElem() = default;
  FracElem(const Frac& f) : f_(f) {}  // NOLINT
  FracElem(const Poly& p) : f_(p) {}  // NOLINT
  FracElem(const PolyElem<Tag>& p) : f_(p.poly()) {}  // NOLINT
  FracElem(const Rational& c) : f_(c) {}  // NOLINT
  FracElem(long c) : f_(c) {}  // NOLINT
  static FracElem var(int i, unsigned e = 1) { return FracElem(Poly::var(i, e)); }

  const Frac& frac() const { return f_; }
  const Poly& num() const { return f_.num(); }
  const Poly& den() const { return f_.den(); }
  bool is_zero() const { return f_.is_zero(); }
  bool is_constant() const { return f_.is_constant(); }
  FracElem inverse() const { return FracElem(f_.inverse()); }
  FracElem derive() const { return FracElem(f_.derive(Tag::derivation())); }
  FracElem partial(int var) const { return FracElem(f_.partial(var)); }
  std::string to_string() const { return f_.to_string(Tag::names()); }

  FracElem operator-() const { return FracElem(-f_); }
  friend FracElem operator+(const FracElem& a, const FracElem& b) { return FracElem(a.f_ + b.f_); }
  friend FracElem operator-(const FracElem& a, const FracElem& b) { return FracElem(a.f_ - b.f_); }
  friend FracElem operator*(const FracElem& a, const FracElem& b) { return FracElem(a.f_ * b.f_); }
  friend FracElem operator/(const FracElem& a, const FracElem& b) { return FracElem(a.f_ / b.f_); }
  friend FracElem operator*(const Rational& c, const FracElem& a) { return FracElem(c * a.f_); }
  friend bool operator==(const FracElem& a, const FracElem& b) { return a.f_ == b.f_; }

 private:
  Frac f_;
};

using RatFunc = FracElem<ZTag>;
using QuasiModular = PolyElem<QMTag>;
using QMRat = FracElem<QMTag>;
using MVRat = FracElem<SiegelTag>;

inline RatFunc z_var() { return RatFunc::var(0); }
inline QuasiModular E2() { return QuasiModular::var(0); }
inline QuasiModular E4() { return QuasiModular::var(1); }
inline QuasiModular E6() { return QuasiModular::var(2); }

// a(z) -> a(lambda(z))
RatFunc compose(const RatFunc& a, const RatFunc& lambda);

// Weight of a monomial E2^a E4^b E6^c is 2a + 4b + 6c.
struct Grading {
  std::map<int, QuasiModular> components;
  int depth = 0;
};
Grading grading(const QuasiModular& x);
bool is_modular(const QuasiModular& x);
// Weight of a homogeneous element; InhomogeneousForm otherwise. Zero has no
// weight and reports the requested fallback.
int homogeneous_weight(const QuasiModular& x, int fallback);
int homogeneous_weight(const QMRat& x, int fallback);
int depth(const QMRat& x);

// Ring descriptors used by the generic operator calculus.
template <class E>
struct ScalarRing {
  using Element = E;
  Element zero() const { return Element(); }
  Element one() const { return Element(1); }
  Element derive(const Element& x) const { return x.derive(); }
  Element inverse(const Element& x) const { return x.inverse(); }
  Element scalar(const Rational& c) const { return Element(c); }
  bool is_field() const { return true; }
  std::string render(const Element& x) const { return x.to_string(); }
};

struct RatFuncRing : ScalarRing<RatFunc> {};
struct QMRatRing : ScalarRing<QMRat> {};
struct QuasiModularRing : ScalarRing<QuasiModular> {
  Element inverse(const Element& x) const {
    if (x.poly().is_constant() && !x.is_zero()) return Element(1 / x.poly().leading().coeff);
    fail(ErrorKind::SingularMatrix, "quasimodular polynomial is not a unit");
  }
};

}  // namespace wilc
