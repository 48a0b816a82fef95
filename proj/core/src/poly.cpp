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
#include "wilc/poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <sstream>

#include "wilc/error.hpp"

namespace wilc {

namespace {

void sort_and_merge(std::vector<Term>& v) {
  std::sort(v.begin(), v.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    Rational c = v[i].coeff;
    while (j < v.size() && v[j].mono == v[i].mono) c += v[j++].coeff;
    if (c != 0) {
      v[out].mono = v[i].mono;
      v[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Poly Poly::var(int i, unsigned e) { return term(Monomial::var(i, e), 1); }

Poly Poly::term(Monomial m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  sort_and_merge(terms);
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

unsigned Poly::degree(int var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

unsigned Poly::var_mask() const {
  unsigned m = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.mono.exponent(i)) m |= 1u << i;
  return m;
}

Poly Poly::partial(int var) const {
  std::vector<Term> out;
  Monomial step = Monomial::var(var);
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(var);
    if (e) out.push_back({t.mono / step, t.coeff * e});
  }
  return from_terms(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero() || leading().coeff == 1) return *this;
  Rational inv = 1 / leading().coeff;
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= inv;
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::map<unsigned, Poly> Poly::coefficients(int var) const {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(var);
    buckets[e].push_back({t.mono / Monomial::var(var, e), t.coeff});
  }
  std::map<unsigned, Poly> out;
  for (auto& [e, v] : buckets) out[e] = from_terms(std::move(v));
  return out;
}

Poly Poly::coefficient(int var, unsigned e) const {
  std::vector<Term> v;
  for (const auto& t : terms_)
    if (t.mono.exponent(var) == e) v.push_back({t.mono / Monomial::var(var, e), t.coeff});
  Poly p;
  p.terms_ = std::move(v);  // order preserved by removing a fixed lane
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (&o == this) return *this *= Rational(2);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    if (i->mono > j->mono) {
      out.push_back(std::move(*i++));
    } else if (j->mono > i->mono) {
      out.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) out.push_back({i->mono, std::move(c)});
      ++i, ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != o.terms_.end(); ++j) out.push_back(*j);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return a.leading().coeff * b;
  if (b.is_constant()) return b.leading().coeff * a;
  std::vector<Term> v;
  v.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) v.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Poly::from_terms(std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (t.mono.is_one() || c != 1) {
      os << c.get_str();
      need_star = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono.exponent(i);
      if (!e) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return (1 / b.leading().coeff) * a;
  const Term& lb = b.leading();
  Rational inv = 1 / lb.coeff;
  unsigned deg_a[kMaxVars];
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned da = a.degree(i), db = b.degree(i);
    if (db > da) return std::nullopt;
    deg_a[i] = da - db;
  }
  std::vector<Term> q;
  Poly r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Term t{lr.mono / lb.mono, lr.coeff * inv};
    for (int i = 0; i < kMaxVars; ++i)
      if (t.mono.exponent(i) > deg_a[i]) return std::nullopt;
    r -= Poly::term(t.mono, t.coeff) * b;
    q.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(q));
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) fail(ErrorKind::NotPolynomial, "inexact polynomial division");
  return *q;
}

namespace {

Poly gcd_impl(Poly a, Poly b);

Poly content(const Poly& p, int var) {
  Poly g;
  for (auto& [e, c] : p.coefficients(var)) {
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly primitive(const Poly& p, int var) {
  Poly c = content(p, var);
  Poly q = c.is_one() ? p : exact_quotient(p, c);
  return q.monic();
}

Poly pseudo_remainder(Poly r, const Poly& b, int var) {
  unsigned db = b.degree(var);
  Poly lcb = b.coefficient(var, db);
  bool unit = lcb.is_constant();
  Rational lcb_inv = unit ? 1 / lcb.leading().coeff : Rational(0);
  while (!r.is_zero()) {
    unsigned dr = r.degree(var);
    if (dr < db) break;
    Poly lcr = r.coefficient(var, dr);
    Poly shift = Poly::var(var, dr - db);
    if (unit) {
      r -= (lcb_inv * lcr) * shift * b;
    } else {
      r = lcb * r - lcr * shift * b;
    }
  }
  return r;
}

// p with every variable except keep replaced by vals[i]
Poly specialize(const Poly& p, int keep, const std::array<long, kMaxVars>& vals) {
  std::map<unsigned, Rational> acc;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono.exponent(i);
      if (i != keep && e) c *= pow(Rational(vals[static_cast<std::size_t>(i)]), e);
    }
    acc[t.mono.exponent(keep)] += c;
  }
  Poly out;
  for (const auto& [e, c] : acc)
    if (c != 0) out += Poly::term(Monomial::var(keep, e), c);
  return out;
}

// True when a univariate image certifies gcd(a, b) = 1 in every variable.
bool coprime_by_evaluation(const Poly& a, const Poly& b, unsigned mask) {
  static const long primes[] = {3, -5, 7, 11, -13, 17, 19, -23, 29, 31, -37, 41};
  for (int v = 0; v < kMaxVars; ++v) {
    if (!(mask & (1u << v))) continue;
    bool certified = false;
    for (int attempt = 0; attempt < 3 && !certified; ++attempt) {
      std::array<long, kMaxVars> vals{};
      for (int i = 0; i < kMaxVars; ++i)
        vals[static_cast<std::size_t>(i)] = primes[(i * 3 + attempt * 5 + v) % 12] + attempt;
      Poly ea = specialize(a, v, vals), eb = specialize(b, v, vals);
      if (ea.degree(v) != a.degree(v) || eb.degree(v) != b.degree(v)) continue;
      if (gcd_impl(ea, eb).degree(v) == 0) certified = true;
      else return false;
    }
    if (!certified) return false;
  }
  return true;
}

// gcd(g, p) for g free of var: fold g through the coefficients of p.
Poly fold_gcd(Poly g, const Poly& p, int var) {
  for (auto& [e, c] : p.coefficients(var)) {
    g = gcd_impl(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g.monic();
}

// False when a univariate image shows that b cannot divide a.
bool may_divide(const Poly& a, const Poly& b) {
  unsigned mask = a.var_mask() | b.var_mask();
  if (std::popcount(mask) < 2) return true;
  static const std::array<long, kMaxVars> vals{7, -3, 5, 11};
  for (int v = 0; v < kMaxVars; ++v) {
    if (!(b.var_mask() & (1u << v))) continue;
    Poly ea = specialize(a, v, vals), eb = specialize(b, v, vals);
    if (eb.degree(v) != b.degree(v) || eb.is_zero()) continue;
    if (!divide_exact(ea, eb)) return false;
  }
  return true;
}

Poly gcd_impl(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  unsigned ma = a.var_mask(), mb = b.var_mask();
  for (int v = 0; v < kMaxVars; ++v) {
    unsigned bit = 1u << v;
    if ((ma & bit) && !(mb & bit)) return fold_gcd(b, a, v);
    if ((mb & bit) && !(ma & bit)) return fold_gcd(a, b, v);
  }
  if (a.size() <= b.size()) {
    if (may_divide(b, a) && divide_exact(b, a)) return a.monic();
  } else {
    if (may_divide(a, b) && divide_exact(a, b)) return b.monic();
  }
  if (std::popcount(ma) > 1 && coprime_by_evaluation(a, b, ma)) return Poly(1);
  int var = -1;
  unsigned best = ~0u;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!(ma & (1u << v))) continue;
    unsigned d = std::min(a.degree(v), b.degree(v));
    if (d < best) best = d, var = v;
  }
  Poly ca = content(a, var), cb = content(b, var);
  Poly c = gcd_impl(ca, cb);
  Poly pa = ca.is_one() ? a.monic() : exact_quotient(a, ca).monic();
  Poly pb = cb.is_one() ? b.monic() : exact_quotient(b, cb).monic();
  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
  Poly g;
  while (true) {
    Poly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree(var) == 0) {
      g = Poly(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive(r, var);
  }
  return (c * primitive(g, var)).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

Poly content_in(const Poly& p, int var) { return p.is_zero() ? Poly() : content(p, var); }

}  // namespace wilc
