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
#include "wilc/rational.hpp"

#include "wilc/error.hpp"

namespace wilc {

Rational binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(r);
  }
  // generalized binomial for negative n
  Rational r = 1;
  for (long i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

Rational factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational rising(const Rational& x, long s) {
  Rational r = 1;
  for (long i = 0; i < s; ++i) r *= x + i;
  return r;
}

Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
    return pow(Rational(1) / x, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::SingularLeading: return "SingularLeading";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonConstantCoefficients: return "NonConstantCoefficients";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::DegenerateWronskian: return "DegenerateWronskian";
    case ErrorKind::ConstantMap: return "ConstantMap";
    case ErrorKind::NotOperGauge: return "NotOperGauge";
    case ErrorKind::PochhammerZero: return "PochhammerZero";
    case ErrorKind::InhomogeneousForm: return "InhomogeneousForm";
    case ErrorKind::WeightMismatch: return "WeightMismatch";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::ZeroEccentricity: return "ZeroEccentricity";
    case ErrorKind::DegenerateJ: return "DegenerateJ";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::BidegreeMismatch: return "BidegreeMismatch";
  }
  return "MathError";
}

}  // namespace wilc
