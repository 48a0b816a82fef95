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
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wilc/elements.hpp"
#include "wilc/invariants.hpp"
#include "wilc/matrix.hpp"

namespace wilc::cli {

enum class ParseErrorKind { SyntaxError, UndeclaredRing, CoefficientOutOfRange };

const char* parse_error_name(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int col, const std::string& what);
  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int col_;
};

enum class RingKind { RatFunc, MatRF, QuasiModular, MatQM };

struct RingDecl {
  RingKind kind = RingKind::RatFunc;
  int r = 1;
  bool is_matrix() const { return kind == RingKind::MatRF || kind == RingKind::MatQM; }
  bool is_z_side() const { return kind == RingKind::RatFunc || kind == RingKind::MatRF; }
  std::string to_string() const;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op { Num, Var, Neg, Add, Sub, Mul, Div, Pow, Mat };
  Op op = Op::Num;
  Rational value;            // Num: nonnegative integer literal
  std::string name;          // Var
  int exponent = 0;          // Pow
  std::vector<ExprPtr> args; // operands, or matrix entries row by row
  std::size_t rows = 0;      // Mat
};

std::string render(const Expr& e);

// One expression in the given ring; col is 1-based within text.
ExprPtr parse_expr(const std::string& text, const RingDecl& ring, int line = 1);

struct OperatorSpec {
  RingDecl ring;
  int n = 0;
  std::map<int, ExprPtr> coeffs;  // index -> expression; missing ones are 0
};

OperatorSpec parse_spec(const std::string& text);
std::string render(const OperatorSpec& spec);

// Evaluated value: a scalar or an r x r matrix over T.
template <class T>
using Value = std::variant<T, Matrix<T>>;

Value<RatFunc> eval_z(const Expr& e, const RingDecl& ring);
Value<QMRat> eval_qm(const Expr& e, const RingDecl& ring);

RatFunc to_ratfunc(const Expr& e, const RingDecl& ring);
Matrix<RatFunc> to_matrf(const Expr& e, const RingDecl& ring);
QMRat to_qmrat(const Expr& e, const RingDecl& ring);
Matrix<QMRat> to_matqm(const Expr& e, const RingDecl& ring);

BinomialOperator<RatFuncRing> build_ratfunc(const OperatorSpec& spec);
BinomialOperator<MatrixRing<RatFuncRing>> build_matrf(const OperatorSpec& spec);
BinomialOperator<QMRatRing> build_quasimodular(const OperatorSpec& spec);
BinomialOperator<MatrixRing<QMRatRing>> build_matqm(const OperatorSpec& spec);

}  // namespace wilc::cli
