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

#include <gmpxx.h>

#include "wilc/error.hpp"

#include <cstdint>
#include <string>

namespace wilc {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long p, long q = 1) {
  if (q == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

Rational binomial(long n, long k);
Rational factorial(long n);
// (x)_s = x (x+1) ... (x+s-1)
Rational rising(const Rational& x, long s);
Rational pow(const Rational& x, long e);

}  // namespace wilc
