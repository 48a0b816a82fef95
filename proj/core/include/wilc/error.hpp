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

#include <stdexcept>
#include <string>

namespace wilc {

enum class ErrorKind {
  RingMismatch,
  SingularMatrix,
  NotMonic,
  SingularLeading,
  IndexOutOfRange,
  NonConstantCoefficients,
  UnsupportedOrder,
  DegenerateWronskian,
  ConstantMap,
  NotOperGauge,
  PochhammerZero,
  InhomogeneousForm,
  WeightMismatch,
  SingularForm,
  ZeroWeight,
  ZeroEccentricity,
  DegenerateJ,
  SizeMismatch,
  NotSymplectic,
  DivisionByZero,
  NotPolynomial,
  BidegreeMismatch,
};

const char* error_name(ErrorKind kind);

// Raised by every algebraic failure; the CLI maps it to exit code 3.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw MathError(kind, what);
}

}  // namespace wilc
