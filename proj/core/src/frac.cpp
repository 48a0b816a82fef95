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
#include "wilc/frac.hpp"

#include <numeric>
#include <sstream>

#include "wilc/error.hpp"

namespace wilc {

namespace {

// Common denominator of the coefficients and the gcd of their numerators.
Rational coefficient_scale(const Poly& a, const Poly& b) {
  Integer l = 1, g = 0;
  for (const Poly* p : {&a, &b})
    for (const auto& t : p->terms()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
  Rational s(l, g);
  s.canonicalize();
  return s;
}

bool needs_parens(const Poly& p) { return p.size() > 1; }

}  // namespace

Frac::Frac(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den.is_constant()) {
    num_ = (1 / den.leading().coeff) * num;
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  Poly n = g.is_one() ? num : exact_quotient(num, g);
  Poly d = g.is_one() ? den : exact_quotient(den, g);
  Rational s = 1 / d.leading().coeff;
  num_ = s * n;
  den_ = s * d;
}

Frac Frac::inverse() const {
  if (num_.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  Rational s = 1 / num_.leading().coeff;
  return Frac(s * den_, s * num_, Reduced{});
}

Frac Frac::operator-() const { return Frac(-num_, den_, Reduced{}); }

Frac operator+(const Frac& a, const Frac& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return Frac(a.num_ + b.num_, a.den_, Frac::Reduced{});
    return Frac(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one()) return Frac(a.num_ * b.den_ + b.num_, b.den_, Frac::Reduced{});
  if (b.den_.is_one()) return Frac(a.num_ + b.num_ * a.den_, a.den_, Frac::Reduced{});
  Poly g = gcd(a.den_, b.den_);
  if (g.is_one())
    return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, Frac::Reduced{});
  Poly ad = exact_quotient(a.den_, g), bd = exact_quotient(b.den_, g);
  Poly n = a.num_ * bd + b.num_ * ad;
  if (n.is_zero()) return Frac();
  Poly g2 = gcd(n, g);
  if (g2.is_one()) return Frac(n, ad * b.den_, Frac::Reduced{});
  Poly d = ad * exact_quotient(b.den_, g2);
  n = exact_quotient(n, g2);
  Rational s = 1 / d.leading().coeff;
  return Frac(s * n, s * d, Frac::Reduced{});
}

Frac operator*(const Frac& a, const Frac& b) {
  if (a.is_zero() || b.is_zero()) return Frac();
  if (a.den_.is_one() && b.den_.is_one())
    return Frac(a.num_ * b.num_, a.den_, Frac::Reduced{});
  Poly g1 = a.num_.is_constant() || b.den_.is_one() ? Poly(1) : gcd(a.num_, b.den_);
  Poly g2 = b.num_.is_constant() || a.den_.is_one() ? Poly(1) : gcd(b.num_, a.den_);
  Poly an = g1.is_one() ? a.num_ : exact_quotient(a.num_, g1);
  Poly bd = g1.is_one() ? b.den_ : exact_quotient(b.den_, g1);
  Poly bn = g2.is_one() ? b.num_ : exact_quotient(b.num_, g2);
  Poly ad = g2.is_one() ? a.den_ : exact_quotient(a.den_, g2);
  Poly d = ad * bd;
  Rational s = 1 / d.leading().coeff;
  return Frac(s * (an * bn), s * d, Frac::Reduced{});
}

Frac operator*(const Rational& c, const Frac& a) {
  if (c == 0) return Frac();
  return Frac(c * a.num_, a.den_, Frac::Reduced{});
}

Poly derive_poly(const Poly& p, std::span<const Poly> images) {
  Poly out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].is_zero()) continue;
    Poly d = p.partial(static_cast<int>(i));
    if (!d.is_zero()) out += d * images[i];
  }
  return out;
}

Frac Frac::partial(int var) const {
  if (den_.is_one()) return Frac(num_.partial(var), den_, Reduced{});
  Poly dd = den_.partial(var);
  if (dd.is_zero()) return Frac(num_.partial(var), den_);
  // Only factors of den free of var can survive in the numerator.
  Poly g = gcd(den_, dd);
  Poly e = g.is_one() ? den_ : exact_quotient(den_, g);
  Poly d1 = g.is_one() ? dd : exact_quotient(dd, g);
  Poly n = num_.partial(var) * e - num_ * d1;
  Poly d = den_ * e;
  if (n.is_zero()) return Frac();
  Poly c = content_in(den_, var);
  if (!c.is_one()) {
    Poly h = gcd(n, c);
    if (!h.is_one()) {
      n = exact_quotient(n, h);
      d = exact_quotient(d, h);
    }
  }
  return Frac(std::move(n), std::move(d), Reduced{});
}

Frac Frac::derive(std::span<const Poly> images) const {
  if (den_.is_one()) return Frac(derive_poly(num_, images), den_, Reduced{});
  Poly dn = derive_poly(num_, images), dd = derive_poly(den_, images);
  return Frac(dn * den_ - num_ * dd, den_ * den_);
}

Poly substitute_poly(const Poly& p, unsigned mask, std::span<const Poly> nums,
                     const Poly& den, unsigned* out_degree) {
  unsigned deg = 0;
  for (const auto& t : p.terms()) {
    unsigned d = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (mask & (1u << i)) d += t.mono.exponent(i);
    deg = std::max(deg, d);
  }
  std::vector<std::vector<Poly>> npow(kMaxVars);
  std::vector<Poly> dpow{Poly(1)};
  auto power = [](std::vector<Poly>& cache, const Poly& base, unsigned e) -> const Poly& {
    if (cache.empty()) cache.push_back(Poly(1));
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  Poly out;
  for (const auto& t : p.terms()) {
    Poly prod(t.coeff);
    unsigned d = 0;
    std::uint64_t kept = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono.exponent(i);
      if (!e) continue;
      if (mask & (1u << i)) {
        prod = prod * power(npow[i], nums[i], e);
        d += e;
      } else {
        kept += Monomial::var(i, e).bits();
      }
    }
    if (kept) prod = Poly::term(Monomial(kept), 1) * prod;
    if (deg > d) prod = prod * power(dpow, den, deg - d);
    out += prod;
  }
  if (out_degree) *out_degree = deg;
  return out;
}

Frac Frac::substitute(unsigned mask, std::span<const Poly> nums, const Poly& den) const {
  unsigned dn = 0, dd = 0;
  Poly n = substitute_poly(num_, mask, nums, den, &dn);
  Poly d = substitute_poly(den_, mask, nums, den, &dd);
  if (dd > dn) n = n * den.pow(dd - dn);
  if (dn > dd) d = d * den.pow(dn - dd);
  if (d.is_zero()) fail(ErrorKind::DivisionByZero, "substitution makes denominator vanish");
  return Frac(n, d);
}

std::string Frac::to_string(std::span<const std::string> names) const {
  if (den_.is_one()) return num_.to_string(names);
  Rational s = coefficient_scale(num_, den_);
  Poly n = s * num_, d = s * den_;
  if (d.leading().coeff < 0) n = -n, d = -d;
  std::ostringstream os;
  if (needs_parens(n)) {
    os << "(" << n.to_string(names) << ")";
  } else {
    os << n.to_string(names);
  }
  os << "/";
  bool single_factor = d.size() == 1 && (d.leading().coeff == 1 || d.leading().mono.is_one());
  if (single_factor) {
    os << d.to_string(names);
  } else {
    os << "(" << d.to_string(names) << ")";
  }
  return os.str();
}

}  // namespace wilc
