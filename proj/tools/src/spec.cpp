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


#include "wilc_cli/spec.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace wilc::cli {

const char* parse_error_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::SyntaxError: return "SyntaxError";
    case ParseErrorKind::UndeclaredRing: return "UndeclaredRing";
    case ParseErrorKind::CoefficientOutOfRange: return "CoefficientOutOfRange";
  }
  return "ParseError";
}

ParseError::ParseError(ParseErrorKind kind, int line, int col, const std::string& what)
    : std::runtime_error(std::string(parse_error_name(kind)) + " at " + std::to_string(line) +
                         ":" + std::to_string(col) + ": " + what),
      kind_(kind),
      line_(line),
      col_(col) {}

std::string RingDecl::to_string() const {
  switch (kind) {
    case RingKind::RatFunc: return "ratfunc";
    case RingKind::MatRF: return "matrf r=" + std::to_string(r);
    case RingKind::QuasiModular: return "quasimodular";
    case RingKind::MatQM: return "matqm r=" + std::to_string(r);
  }
  return "";
}

namespace {

struct Token {
  enum Kind { End, Number, Ident, Sym } kind = End;
  std::string text;
  int col = 0;
};

std::vector<Token> lex(const std::string& s, int line, int col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    int col = col0 + static_cast<int>(i);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i), col});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), col});
      i = j;
    } else if (std::string("+-*/^()[],=").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, static_cast<char>(c)), col});
      ++i;
    } else {
      throw ParseError(ParseErrorKind::SyntaxError, line, col,
                       std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::End, "", col0 + static_cast<int>(s.size())});
  return out;
}

ExprPtr node(Expr::Op op, std::vector<ExprPtr> args) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->args = std::move(args);
  return e;
}

bool contains_matrix(const Expr& e) {
  if (e.op == Expr::Op::Mat) return true;
  for (const auto& a : e.args)
    if (contains_matrix(*a)) return true;
  return false;
}

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::size_t pos, const RingDecl& ring, int line)
      : t_(toks), i_(pos), ring_(ring), line_(line) {}

  ExprPtr parse_all() {
    auto e = sum();
    if (peek().kind != Token::End) error(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return t_[i_]; }
  bool accept(const char* sym) {
    if (peek().kind == Token::Sym && peek().text == sym) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(const char* sym) {
    if (!accept(sym)) error(peek(), std::string("expected '") + sym + "'");
  }
  [[noreturn]] void error(const Token& t, const std::string& what) const {
    throw ParseError(ParseErrorKind::SyntaxError, line_, t.col,
                     t.kind == Token::End ? what + " at end of input" : what);
  }

  ExprPtr sum() {
    auto e = product();
    for (;;) {
      if (accept("+")) e = node(Expr::Op::Add, {e, product()});
      else if (accept("-")) e = node(Expr::Op::Sub, {e, product()});
      else return e;
    }
  }
  ExprPtr product() {
    auto e = factor();
    for (;;) {
      if (accept("*")) e = node(Expr::Op::Mul, {e, factor()});
      else if (accept("/")) e = node(Expr::Op::Div, {e, factor()});
      else return e;
    }
  }
  ExprPtr factor() {
    if (accept("-")) return node(Expr::Op::Neg, {factor()});
    return power();
  }
  int exponent() {
    bool paren = accept("(");
    bool neg = accept("-");
    const Token& t = peek();
    if (t.kind != Token::Number || t.text.size() > 6) error(t, "expected an integer exponent");
    ++i_;
    int v = std::stoi(t.text);
    if (paren) expect(")");
    return neg ? -v : v;
  }
  ExprPtr power() {
    auto base = atom();
    if (!accept("^")) return base;
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::Pow;
    e->exponent = exponent();
    e->args = {base};
    return e;
  }
  ExprPtr atom() {
    const Token& t = peek();
    if (t.kind == Token::Number) {
      ++i_;
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::Num;
      e->value = Rational(t.text);
      return e;
    }
    if (t.kind == Token::Ident) {
      bool ok = ring_.is_z_side() ? t.text == "z"
                                  : (t.text == "E2" || t.text == "E4" || t.text == "E6");
      if (!ok) error(t, "unknown symbol '" + t.text + "' in ring " + ring_.to_string());
      ++i_;
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::Var;
      e->name = t.text;
      return e;
    }
    if (accept("(")) {
      auto e = sum();
      expect(")");
      return e;
    }
    if (t.kind == Token::Sym && t.text == "[") return matrix();
    error(t, "expected an expression");
  }
  ExprPtr matrix() {
    const Token& start = peek();
    if (!ring_.is_matrix()) error(start, "matrix literal in scalar ring " + ring_.to_string());
    expect("[");
    std::vector<ExprPtr> entries;
    std::size_t rows = 0;
    do {
      const Token& row_start = peek();
      expect("[");
      std::size_t cols = 0;
      do {
        const Token& et = peek();
        auto x = sum();
        if (contains_matrix(*x)) error(et, "matrix entries must be scalars");
        entries.push_back(x);
        ++cols;
      } while (accept(","));
      expect("]");
      if (cols != static_cast<std::size_t>(ring_.r))
        error(row_start, "row has " + std::to_string(cols) + " entries, ring has r=" +
                             std::to_string(ring_.r));
      ++rows;
    } while (accept(","));
    expect("]");
    if (rows != static_cast<std::size_t>(ring_.r))
      error(start, "matrix has " + std::to_string(rows) + " rows, ring has r=" +
                       std::to_string(ring_.r));
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::Mat;
    e->rows = rows;
    e->args = std::move(entries);
    return e;
  }

  const std::vector<Token>& t_;
  std::size_t i_;
  const RingDecl& ring_;
  int line_;
};

int precedence(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Add:
    case Expr::Op::Sub: return 1;
    case Expr::Op::Mul:
    case Expr::Op::Div: return 2;
    case Expr::Op::Neg: return 3;
    case Expr::Op::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool paren) {
  return paren ? "(" + render(e) + ")" : render(e);
}

}  // namespace

std::string render(const Expr& e) {
  const auto& a = e.args;
  switch (e.op) {
    case Expr::Op::Num: return e.value.get_str();
    case Expr::Op::Var: return e.name;
    case Expr::Op::Neg: return "-" + wrap(*a[0], precedence(*a[0]) < 3);
    case Expr::Op::Add: return render(*a[0]) + " + " + wrap(*a[1], precedence(*a[1]) <= 1);
    case Expr::Op::Sub: return render(*a[0]) + " - " + wrap(*a[1], precedence(*a[1]) <= 1);
    case Expr::Op::Mul:
      return wrap(*a[0], precedence(*a[0]) < 2) + "*" + wrap(*a[1], precedence(*a[1]) <= 2);
    case Expr::Op::Div:
      return wrap(*a[0], precedence(*a[0]) < 2) + "/" + wrap(*a[1], precedence(*a[1]) <= 2);
    case Expr::Op::Pow: {
      std::string ex = e.exponent < 0 ? "(" + std::to_string(e.exponent) + ")"
                                      : std::to_string(e.exponent);
      return wrap(*a[0], precedence(*a[0]) < 5) + "^" + ex;
    }
    case Expr::Op::Mat: {
      std::size_t r = e.rows;
      std::string s = "[";
      for (std::size_t i = 0; i < r; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < r; ++j) s += (j ? ", " : "") + render(*a[i * r + j]);
        s += "]";
      }
      return s + "]";
    }
  }
  return "";
}

ExprPtr parse_expr(const std::string& text, const RingDecl& ring, int line) {
  auto toks = lex(text, line, 1);
  return ExprParser(toks, 0, ring, line).parse_all();
}

OperatorSpec parse_spec(const std::string& text) {
  OperatorSpec spec;
  std::optional<RingDecl> ring;
  int n_line = 0;
  struct Pending {
    int index, line, col;
  };
  std::vector<Pending> pending;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = raw.substr(0, raw.find('#'));
    if (!body.empty() && body.back() == '\r') body.pop_back();
    auto toks = lex(body, line, 1);
    if (toks.front().kind == Token::End) continue;
    const Token& head = toks.front();
    auto syntax = [&](const Token& t, const std::string& what) {
      throw ParseError(ParseErrorKind::SyntaxError, line, t.col, what);
    };
    if (head.kind != Token::Ident) syntax(head, "expected 'ring', 'n' or 'a<i>'");
    if (head.text == "ring") {
      if (ring) syntax(head, "ring declared twice");
      RingDecl d;
      const Token& kind = toks[1];
      if (kind.kind != Token::Ident) syntax(kind, "expected a ring kind");
      if (kind.text == "ratfunc") d.kind = RingKind::RatFunc;
      else if (kind.text == "matrf") d.kind = RingKind::MatRF;
      else if (kind.text == "quasimodular") d.kind = RingKind::QuasiModular;
      else if (kind.text == "matqm") d.kind = RingKind::MatQM;
      else syntax(kind, "unknown ring kind '" + kind.text + "'");
      std::size_t i = 2;
      if (toks[i].kind == Token::Ident && toks[i].text == "r") {
        if (!d.is_matrix()) syntax(toks[i], "r= is only allowed for matrix rings");
        if (toks[i + 1].text != "=") syntax(toks[i + 1], "expected '='");
        const Token& v = toks[i + 2];
        if (v.kind != Token::Number || v.text.size() > 3 || std::stoi(v.text) < 1)
          syntax(v, "expected a positive matrix size");
        d.r = std::stoi(v.text);
        i += 3;
      } else if (d.is_matrix()) {
        syntax(toks[i], "matrix ring needs r=<int>");
      }
      if (toks[i].kind != Token::End) syntax(toks[i], "unexpected '" + toks[i].text + "'");
      ring = d;
      spec.ring = d;
      continue;
    }
    bool is_n = head.text == "n";
    bool is_a = head.text.size() > 1 && head.text[0] == 'a' &&
                head.text.find_first_not_of("0123456789", 1) == std::string::npos;
    if (!is_n && !is_a) syntax(head, "expected 'ring', 'n' or 'a<i>'");
    if (toks[1].text != "=" || toks[1].kind != Token::Sym) syntax(toks[1], "expected '='");
    if (is_n) {
      if (n_line) syntax(head, "n declared twice");
      bool neg = toks[2].text == "-";
      const Token& v = toks[neg ? 3 : 2];
      if (v.kind != Token::Number) syntax(v, "expected an integer order");
      if (toks[neg ? 4 : 3].kind != Token::End) syntax(toks[neg ? 4 : 3], "unexpected token");
      long n = v.text.size() > 6 ? 1000000 : std::stol(v.text);
      if (neg) n = -n;
      if (n < 1 || n > 64)
        throw ParseError(ParseErrorKind::CoefficientOutOfRange, line, toks[2].col,
                         "order n = " + std::to_string(n) + " outside 1..64");
      spec.n = static_cast<int>(n);
      n_line = line;
      continue;
    }
    if (!ring)
      throw ParseError(ParseErrorKind::UndeclaredRing, line, head.col,
                       "'" + head.text + "' before the ring declaration");
    std::string digits = head.text.substr(1);
    int index = digits.size() > 6 ? 1000000 : std::stoi(digits);
    if (spec.coeffs.count(index)) syntax(head, head.text + " assigned twice");
    spec.coeffs[index] = ExprParser(toks, 2, *ring, line).parse_all();
    pending.push_back({index, line, head.col});
  }
  if (!ring) throw ParseError(ParseErrorKind::UndeclaredRing, 1, 1, "missing ring declaration");
  if (!n_line) throw ParseError(ParseErrorKind::SyntaxError, line + 1, 1, "missing 'n = <int>'");
  for (const auto& p : pending)
    if (p.index < 1 || p.index > spec.n)
      throw ParseError(ParseErrorKind::CoefficientOutOfRange, p.line, p.col,
                       "a" + std::to_string(p.index) + " outside a1..a" + std::to_string(spec.n));
  return spec;
}

std::string render(const OperatorSpec& spec) {
  std::string s = "ring " + spec.ring.to_string() + "\n";
  s += "n = " + std::to_string(spec.n) + "\n";
  for (const auto& [i, e] : spec.coeffs) s += "a" + std::to_string(i) + " = " + render(*e) + "\n";
  return s;
}

namespace {

template <class T>
T variable(const std::string& name) {
  if constexpr (std::is_same_v<T, RatFunc>) {
    return z_var();
  } else {
    if (name == "E2") return QMRat(E2());
    if (name == "E4") return QMRat(E4());
    return QMRat(E6());
  }
}

template <class T>
Matrix<T> promote(const Value<T>& v, std::size_t r) {
  if (auto* m = std::get_if<Matrix<T>>(&v)) return *m;
  return Matrix<T>::scalar(r, std::get<T>(v));
}

template <class T>
Value<T> invert(const Value<T>& v) {
  if (auto* m = std::get_if<Matrix<T>>(&v)) return inverse(*m);
  const T& x = std::get<T>(v);
  if (x.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  return x.inverse();
}

template <class T>
Value<T> combine(Expr::Op op, const Value<T>& a, const Value<T>& b, std::size_t r) {
  auto* x = std::get_if<T>(&a);
  auto* y = std::get_if<T>(&b);
  if (op == Expr::Op::Div) return combine(Expr::Op::Mul, a, invert(b), r);
  if (x && y) {
    if (op == Expr::Op::Add) return *x + *y;
    if (op == Expr::Op::Sub) return *x - *y;
    return *x * *y;
  }
  if (op == Expr::Op::Mul) {
    if (x) return scale(*x, std::get<Matrix<T>>(b));
    if (y) return std::get<Matrix<T>>(a) * Matrix<T>::scalar(r, *y);
    return std::get<Matrix<T>>(a) * std::get<Matrix<T>>(b);
  }
  Matrix<T> p = promote(a, r), q = promote(b, r);
  return op == Expr::Op::Add ? Value<T>(p + q) : Value<T>(p - q);
}

template <class T>
Value<T> evaluate(const Expr& e, std::size_t r) {
  switch (e.op) {
    case Expr::Op::Num: return T(e.value);
    case Expr::Op::Var: return variable<T>(e.name);
    case Expr::Op::Neg: {
      auto v = evaluate<T>(*e.args[0], r);
      if (auto* m = std::get_if<Matrix<T>>(&v)) return Rational(-1) * *m;
      return -std::get<T>(v);
    }
    case Expr::Op::Add:
    case Expr::Op::Sub:
    case Expr::Op::Mul:
    case Expr::Op::Div:
      return combine<T>(e.op, evaluate<T>(*e.args[0], r), evaluate<T>(*e.args[1], r), r);
    case Expr::Op::Pow: {
      auto base = evaluate<T>(*e.args[0], r);
      if (e.exponent < 0) base = invert(base);
      Value<T> acc = T(1);
      for (int i = 0; i < std::abs(e.exponent); ++i) acc = combine(Expr::Op::Mul, acc, base, r);
      return acc;
    }
    case Expr::Op::Mat: {
      Matrix<T> m(e.rows);
      for (std::size_t i = 0; i < e.rows; ++i)
        for (std::size_t j = 0; j < e.rows; ++j)
          m(i, j) = std::get<T>(evaluate<T>(*e.args[i * e.rows + j], r));
      return m;
    }
  }
  return T();
}

template <class T>
T scalar_value(const Value<T>& v) {
  if (auto* x = std::get_if<T>(&v)) return *x;
  fail(ErrorKind::RingMismatch, "expected a scalar, got a matrix");
}

template <class R, class F>
BinomialOperator<R> build(const OperatorSpec& spec, R ring, F convert) {
  std::vector<typename R::Element> a;
  for (int i = 1; i <= spec.n; ++i) {
    auto it = spec.coeffs.find(i);
    a.push_back(it == spec.coeffs.end() ? ring.zero() : convert(*it->second, spec.ring));
  }
  return BinomialOperator<R>(ring, std::move(a));
}

void require(const RingDecl& ring, RingKind kind) {
  if (ring.kind != kind)
    fail(ErrorKind::RingMismatch, "operator is declared over " + ring.to_string());
}

}  // namespace

Value<RatFunc> eval_z(const Expr& e, const RingDecl& ring) {
  return evaluate<RatFunc>(e, static_cast<std::size_t>(ring.r));
}
Value<QMRat> eval_qm(const Expr& e, const RingDecl& ring) {
  return evaluate<QMRat>(e, static_cast<std::size_t>(ring.r));
}

RatFunc to_ratfunc(const Expr& e, const RingDecl& ring) { return scalar_value(eval_z(e, ring)); }
Matrix<RatFunc> to_matrf(const Expr& e, const RingDecl& ring) {
  return promote(eval_z(e, ring), static_cast<std::size_t>(ring.r));
}
QMRat to_qmrat(const Expr& e, const RingDecl& ring) { return scalar_value(eval_qm(e, ring)); }
Matrix<QMRat> to_matqm(const Expr& e, const RingDecl& ring) {
  return promote(eval_qm(e, ring), static_cast<std::size_t>(ring.r));
}

BinomialOperator<RatFuncRing> build_ratfunc(const OperatorSpec& spec) {
  require(spec.ring, RingKind::RatFunc);
  return build(spec, RatFuncRing{}, to_ratfunc);
}
BinomialOperator<MatrixRing<RatFuncRing>> build_matrf(const OperatorSpec& spec) {
  require(spec.ring, RingKind::MatRF);
  MatrixRing<RatFuncRing> ring{static_cast<std::size_t>(spec.ring.r), {}};
  return build(spec, ring, to_matrf);
}
BinomialOperator<QMRatRing> build_quasimodular(const OperatorSpec& spec) {
  require(spec.ring, RingKind::QuasiModular);
  return build(spec, QMRatRing{}, to_qmrat);
}
BinomialOperator<MatrixRing<QMRatRing>> build_matqm(const OperatorSpec& spec) {
  require(spec.ring, RingKind::MatQM);
  MatrixRing<QMRatRing> ring{static_cast<std::size_t>(spec.ring.r), {}};
  return build(spec, ring, to_matqm);
}

}  // namespace wilc::cli
