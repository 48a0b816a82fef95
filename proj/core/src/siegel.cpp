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

#include "wilc/siegel.hpp"

#include <sstream>

namespace wilc {

namespace {

using Mat = Matrix<MVRat>;

MVRat mv_pow(const MVRat& x, long k) {
  MVRat base = k < 0 ? x.inverse() : x;
  MVRat acc(1);
  for (long i = 0; i < std::labs(k); ++i) acc = acc * base;
  return acc;
}

Mat block_matrix(const SymplecticElement::Block& b) {
  return Mat{{MVRat(b[0][0]), MVRat(b[0][1])}, {MVRat(b[1][0]), MVRat(b[1][1])}};
}

// x*y where a 1x1 factor acts as a scalar
Mat mul(const Mat& x, const Mat& y) {
  if (x.size() == y.size()) return x * y;
  if (x.size() == 1) return scale(x(0, 0), y);
  if (y.size() == 1) return scale(y(0, 0), x);
  fail(ErrorKind::RingMismatch, "coefficient sizes " + std::to_string(x.size()) + " and " +
                                    std::to_string(y.size()));
}

std::string residual_string(const SiegelElement& x) { return x.is_zero() ? "0" : x.to_string(); }

SiegelReport report(std::string check, const SiegelElement& residual) {
  return {std::move(check), residual.is_zero(), residual_string(residual)};
}

// Coefficients of w^e for w = p u1 + q u2, indexed by the u1 exponent.
std::vector<MVRat> linear_power(const MVRat& p, const MVRat& q, int e) {
  std::vector<MVRat> out(static_cast<std::size_t>(e) + 1);
  for (int i = 0; i <= e; ++i)
    out[static_cast<std::size_t>(i)] = binomial(e, i) * (mv_pow(p, i) * mv_pow(q, e - i));
  return out;
}

struct LinearForms {
  MVRat p1, q1, p2, q2;  // w1 = p1 u1 + q1 u2, w2 = p2 u1 + q2 u2
};

LinearForms jt_forms(const Mat& J) { return {J(0, 0), J(1, 0), J(0, 1), J(1, 1)}; }

SiegelElement raise_with(const SiegelElement& t, const LinearForms& w) {
  int m = t.m();
  std::size_t r = t.r();
  // quadratic forms w1^2, w1 w2, w2^2 indexed by the u1 exponent
  std::array<std::array<MVRat, 3>, 3> quad{{
      {w.q1 * w.q1, Rational(2) * (w.p1 * w.q1), w.p1 * w.p1},
      {w.q1 * w.q2, w.p1 * w.q2 + w.q1 * w.p2, w.p1 * w.p2},
      {w.q2 * w.q2, Rational(2) * (w.p2 * w.q2), w.p2 * w.p2},
  }};
  std::vector<Mat> out(static_cast<std::size_t>(m) + 3, Mat(r));
  MVRat kap = kappa();
  for (int b = 0; b <= m; ++b) {
    const Mat& c = t.coeff(b);
    if (c.is_zero()) continue;
    for (int v = 0; v < 3; ++v) {
      Mat d = c.map([&](const MVRat& x) { return kap * x.partial(v); });
      if (d.is_zero()) continue;
      for (int i = 0; i < 3; ++i) {
        const MVRat& s = quad[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
        if (s.is_zero()) continue;
        auto& slot = out[static_cast<std::size_t>(b + i)];
        slot = slot + scale(s, d);
      }
    }
  }
  return SiegelElement(t.k(), m + 2, std::move(out));
}

}  // namespace

Matrix<MVRat> siegel_Z() { return Mat{{tau(1), tau(2)}, {tau(2), tau(3)}}; }

Matrix<MVRat> partial_Z(const MVRat& f) {
  MVRat off = make_rational(1, 2) * f.partial(1);
  return Mat{{f.partial(0), off}, {off, f.partial(2)}};
}

Matrix<MVRat> D_Z(const MVRat& f) { return scale(kappa(), partial_Z(f)); }

// ---- symplectic group ----

SymplecticElement::SymplecticElement(const Full& g) : g_(g) {
  if (!is_symplectic(g)) fail(ErrorKind::NotSymplectic, "g^t J0 g != J0");
}

bool SymplecticElement::is_symplectic(const Full& g) {
  Full j0{};
  j0[0][2] = j0[1][3] = 1;
  j0[2][0] = j0[3][1] = -1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational acc = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) acc += g[a][i] * j0[a][b] * g[b][j];
      if (acc != j0[i][j]) return false;
    }
  return true;
}

SymplecticElement SymplecticElement::identity() {
  Full g{};
  for (int i = 0; i < 4; ++i) g[i][i] = 1;
  return SymplecticElement(g);
}

SymplecticElement SymplecticElement::inversion() {
  Full g{};
  g[0][2] = g[1][3] = 1;
  g[2][0] = g[3][1] = -1;
  return SymplecticElement(g);
}

SymplecticElement SymplecticElement::translation(long b11, long b12, long b22) {
  Full g{};
  for (int i = 0; i < 4; ++i) g[i][i] = 1;
  g[0][2] = b11;
  g[0][3] = g[1][2] = b12;
  g[1][3] = b22;
  return SymplecticElement(g);
}

SymplecticElement SymplecticElement::embedding(long u11, long u12, long u21, long u22) {
  long d = u11 * u22 - u12 * u21;
  if (d != 1 && d != -1) fail(ErrorKind::NotSymplectic, "U is not in GL2(Z)");
  Full g{};
  g[0][0] = u11;
  g[0][1] = u12;
  g[1][0] = u21;
  g[1][1] = u22;
  // U^-t = (1/d) [[u22, -u21], [-u12, u11]]
  g[2][2] = make_rational(u22 * d, 1);
  g[2][3] = make_rational(-u21 * d, 1);
  g[3][2] = make_rational(-u12 * d, 1);
  g[3][3] = make_rational(u11 * d, 1);
  return SymplecticElement(g);
}

SymplecticElement::Block SymplecticElement::block(int i, int j) const {
  Block b;
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) b[a][c] = g_[i + a][j + c];
  return b;
}

SymplecticElement operator*(const SymplecticElement& a, const SymplecticElement& b) {
  SymplecticElement::Full g{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) g[i][j] += a.g_[i][k] * b.g_[k][j];
  return SymplecticElement(g);
}

std::string SymplecticElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; ++i) {
    if (i) os << ", ";
    os << "[";
    for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << wilc::to_string(g_[i][j]);
    os << "]";
  }
  os << "]";
  return os.str();
}

SymplecticElement random_symplectic(std::mt19937_64& rng, int max_len) {
  static const std::array<std::array<long, 4>, 4> units{{
      {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 0}, {-1, 0, 0, 1}}};
  std::uniform_int_distribution<int> len(1, std::max(max_len, 1));
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<long> entry(-2, 2);
  std::uniform_int_distribution<std::size_t> unit(0, units.size() - 1);
  SymplecticElement g = SymplecticElement::identity();
  for (int n = len(rng); n > 0; --n) {
    switch (kind(rng)) {
      case 0: g = g * SymplecticElement::inversion(); break;
      case 1: {
        long b11 = entry(rng), b12 = entry(rng), b22 = entry(rng);
        g = g * SymplecticElement::translation(b11, b12, b22);
        break;
      }
      default: {
        const auto& u = units[unit(rng)];
        g = g * SymplecticElement::embedding(u[0], u[1], u[2], u[3]);
      }
    }
  }
  return g;
}

// ---- action ----

SiegelAction siegel_act(const SymplecticElement& g) {
  Mat z = siegel_Z();
  Mat a = block_matrix(g.A()), b = block_matrix(g.B()), c = block_matrix(g.C()),
      d = block_matrix(g.D());
  SiegelAction act;
  act.J = c * z + d;
  act.det_J = det(act.J);
  if (act.det_J.is_zero()) fail(ErrorKind::DegenerateJ, "det(CZ+D) vanishes");
  Mat adj{{act.J(1, 1), -act.J(0, 1)}, {-act.J(1, 0), act.J(0, 0)}};
  Mat num = (a * z + b) * adj;
  if (!(num(0, 1) == num(1, 0))) fail(ErrorKind::NotSymplectic, "gamma.Z is not symmetric");
  MVRat inv_det = act.det_J.inverse();
  act.z = scale(inv_det, num);
  act.J_inv = scale(inv_det, adj);
  act.JCt = act.J * c.transpose();
  // J has polynomial entries, so det J and num are polynomials
  act.den = act.det_J.num();
  act.nums = {num(0, 0).num(), num(0, 1).num(), num(1, 1).num()};
  return act;
}

MVRat compose(const MVRat& f, const SiegelAction& act) {
  return MVRat(f.frac().substitute(0b0111u, act.nums, act.den));
}

SiegelReport dz_transform_check(const SymplecticElement& g) {
  SiegelAction act = siegel_act(g);
  Mat jit = act.J_inv.transpose();
  std::array<Mat, 3> e{Mat{{MVRat(1), MVRat(0)}, {MVRat(0), MVRat(0)}},
                       Mat{{MVRat(0), MVRat(1)}, {MVRat(1), MVRat(0)}},
                       Mat{{MVRat(0), MVRat(0)}, {MVRat(0), MVRat(1)}}};
  for (int v = 0; v < 3; ++v) {
    Mat lhs = act.z.map([&](const MVRat& x) { return x.partial(v); });
    Mat res = lhs - jit * e[static_cast<std::size_t>(v)] * act.J_inv;
    if (!res.is_zero()) return {"dz_transform", false, res.to_string()};
  }
  return {"dz_transform", true, "0"};
}

SiegelReport chain_rule_check(const MVRat& f, const SymplecticElement& g) {
  SiegelAction act = siegel_act(g);
  Mat lhs = D_Z(compose(f, act));
  Mat pulled = D_Z(f).map([&](const MVRat& x) { return compose(x, act); });
  Mat res = lhs - act.J_inv * pulled * act.J_inv.transpose();
  return {"chain_rule", res.is_zero(), res.is_zero() ? "0" : res.to_string()};
}

// ---- bigraded elements ----

SiegelElement::SiegelElement(int k, int m, std::vector<Matrix<MVRat>> coeffs)
    : k_(k), m_(m), c_(std::move(coeffs)) {
  if (m < 0 || c_.size() != static_cast<std::size_t>(m) + 1)
    fail(ErrorKind::SizeMismatch, "a form of degree " + std::to_string(m) + " needs " +
                                      std::to_string(m + 1) + " coefficients");
  for (const auto& c : c_)
    if (c.size() != c_.front().size() || c.size() == 0)
      fail(ErrorKind::SizeMismatch, "coefficient sizes differ");
}

SiegelElement SiegelElement::zero(std::size_t r, int k, int m) {
  return SiegelElement(k, m, std::vector<Mat>(static_cast<std::size_t>(m) + 1, Mat(r)));
}

SiegelElement SiegelElement::scalar(const MVRat& f, int k) {
  return SiegelElement(k, 0, {Mat{{f}}});
}

SiegelElement SiegelElement::matrix(const Matrix<MVRat>& f, int k) {
  return SiegelElement(k, 0, {f});
}

SiegelElement SiegelElement::form(int k, const std::vector<MVRat>& coeffs) {
  std::vector<Mat> c;
  for (const auto& x : coeffs) c.push_back(Mat{{x}});
  return SiegelElement(k, static_cast<int>(coeffs.size()) - 1, std::move(c));
}

SiegelElement SiegelElement::quadratic(const MVRat& c20, const MVRat& c11, const MVRat& c02,
                                       int k) {
  return form(k, {c02, c11, c20});
}

bool SiegelElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Mat& c) { return c.is_zero(); });
}

SiegelElement SiegelElement::inverse() const {
  if (m_ != 0) fail(ErrorKind::BidegreeMismatch, "only Sym-degree 0 elements are invertible");
  if (is_zero()) fail(ErrorKind::SingularForm, "zero is not invertible");
  if (r() == 1) return scalar(c_[0](0, 0).inverse(), -k_);
  if (det(c_[0]).is_zero()) fail(ErrorKind::SingularForm, "determinant vanishes");
  return matrix(wilc::inverse(c_[0]), -k_);
}

Matrix<Matrix<MVRat>> SiegelElement::avatar() const {
  if (m_ != 2) fail(ErrorKind::BidegreeMismatch, "avatar needs a quadratic form");
  Matrix<Mat> x(2);
  Mat half = make_rational(1, 2) * c_[1];
  x(0, 0) = c_[2];
  x(0, 1) = half;
  x(1, 0) = half;
  x(1, 1) = c_[0];
  return x;
}

SiegelElement SiegelElement::operator-() const {
  std::vector<Mat> c;
  for (const auto& x : c_) c.push_back(-x);
  return SiegelElement(k_, m_, std::move(c));
}

SiegelElement operator+(const SiegelElement& a, const SiegelElement& b) {
  if (a.is_zero() && a.r() <= b.r()) return b;
  if (b.is_zero() && b.r() <= a.r()) return a;
  if (a.is_zero()) return SiegelElement::zero(a.r(), b.k(), b.m()) + b;
  if (b.is_zero()) return a + SiegelElement::zero(b.r(), a.k(), a.m());
  if (a.k_ != b.k_ || a.m_ != b.m_)
    fail(ErrorKind::BidegreeMismatch,
         "(" + std::to_string(a.k_) + "," + std::to_string(a.m_) + ") + (" +
             std::to_string(b.k_) + "," + std::to_string(b.m_) + ")");
  std::vector<Mat> c;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const Mat& x = a.c_[i];
    const Mat& y = b.c_[i];
    if (x.size() == y.size()) c.push_back(x + y);
    else if (x.size() == 1) c.push_back(Mat::scalar(y.size(), x(0, 0)) + y);
    else if (y.size() == 1) c.push_back(x + Mat::scalar(x.size(), y(0, 0)));
    else fail(ErrorKind::RingMismatch, "coefficient sizes differ");
  }
  return SiegelElement(a.k_, a.m_, std::move(c));
}

SiegelElement operator*(const SiegelElement& a, const SiegelElement& b) {
  std::size_t r = std::max(a.r(), b.r());
  if (a.r() != b.r() && a.r() != 1 && b.r() != 1)
    fail(ErrorKind::RingMismatch, "coefficient sizes differ");
  std::vector<Mat> c(static_cast<std::size_t>(a.m_ + b.m_) + 1, Mat(r));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] = c[i + j] + mul(a.c_[i], b.c_[j]);
    }
  }
  return SiegelElement(a.k_ + b.k_, a.m_ + b.m_, std::move(c));
}

SiegelElement operator*(const Rational& s, const SiegelElement& a) {
  std::vector<Mat> c;
  for (const auto& x : a.c_) c.push_back(s * x);
  return SiegelElement(a.k_, a.m_, std::move(c));
}

SiegelElement operator*(const MVRat& s, const SiegelElement& a) {
  std::vector<Mat> c;
  for (const auto& x : a.c_) c.push_back(scale(s, x));
  return SiegelElement(a.k_, a.m_, std::move(c));
}

bool operator==(const SiegelElement& a, const SiegelElement& b) {
  bool za = a.is_zero(), zb = b.is_zero();
  if (za || zb) return za && zb;
  return a.k_ == b.k_ && a.m_ == b.m_ && a.c_ == b.c_;
}

std::string SiegelElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int a = m_; a >= 0; --a) {
    const Mat& c = c_[static_cast<std::size_t>(a)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = r() == 1 ? c(0, 0).to_string() : c.to_string();
    std::string mono;
    auto put = [&](const char* name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    put("u1", a);
    put("u2", m_ - a);
    if (mono.empty()) os << cs;
    else if (r() == 1 && cs == "1") os << mono;
    else os << "(" << cs << ")*" << mono;
  }
  return os.str();
}

// ---- raising and transport ----

SiegelElement raw_raise(const SiegelElement& phi) {
  MVRat one(1), zero(0);
  return raise_with(phi, {one, zero, zero, one});
}

SiegelElement pulled_raise(const SiegelElement& t, const SiegelAction& act) {
  return raise_with(t, jt_forms(act.J));
}

SiegelElement transport(const SiegelElement& phi, const SiegelAction& act) {
  LinearForms w = jt_forms(act.J);
  int m = phi.m();
  std::size_t r = phi.r();
  std::vector<Mat> out(static_cast<std::size_t>(m) + 1, Mat(r));
  MVRat factor = mv_pow(act.det_J, phi.k());
  for (int a = 0; a <= m; ++a) {
    const Mat& c = phi.coeff(a);
    if (c.is_zero()) continue;
    auto x = linear_power(w.p1, w.q1, a);
    auto y = linear_power(w.p2, w.q2, m - a);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) {
        MVRat s = x[i] * y[j];
        if (s.is_zero()) continue;
        out[i + j] = out[i + j] + scale(factor * s, c);
      }
  }
  return SiegelElement(phi.k(), m, std::move(out));
}

SiegelElement transport(const SiegelElement& phi, const SymplecticElement& g) {
  return transport(phi, siegel_act(g));
}

SiegelElement jct_form(const SiegelAction& act) {
  const Mat& m = act.JCt;
  return SiegelElement::quadratic(m(0, 0), m(0, 1) + m(1, 0), m(1, 1));
}

SiegelReport anomaly_check(const SiegelElement& phi, const SymplecticElement& g) {
  SiegelAction act = siegel_act(g);
  SiegelElement t = transport(phi, act);
  SiegelElement lhs = pulled_raise(t, act);
  SiegelElement rhs = transport(raw_raise(phi), act) +
                      Rational(phi.k() + phi.m()) * (kappa() * (jct_form(act) * t));
  return report("anomaly", lhs - rhs);
}

// ---- connections ----

SiegelConnection::SiegelConnection(const Rational& ecc, SiegelElement a) : e(ecc), A(std::move(a)) {
  if (e == 0) fail(ErrorKind::ZeroEccentricity, "e = 0");
  if (!A.is_zero() && (A.k() != 0 || A.m() != 2))
    fail(ErrorKind::BidegreeMismatch, "a connection has bidegree (0,2)");
}

SiegelElement covariant_raise(const SiegelElement& phi, const SiegelConnection& conn) {
  if (conn.e == 0) fail(ErrorKind::ZeroEccentricity, "e = 0");
  SiegelElement raw = raw_raise(phi);
  int w = phi.k() + phi.m();
  if (w == 0 || conn.A.is_zero()) return raw;
  Rational c = Rational(w) / (2 * conn.e);
  return raw - c * (phi * conn.A);
}

SiegelConnection maurer_cartan_A(const SiegelElement& phi, long N, const Rational& e) {
  if (N == 0) fail(ErrorKind::ZeroWeight, "N = 0");
  if (e == 0) fail(ErrorKind::ZeroEccentricity, "e = 0");
  if (phi.m() != 0) fail(ErrorKind::BidegreeMismatch, "the source must have Sym-degree 0");
  SiegelElement a = (2 * e / Rational(N)) * (phi.inverse() * raw_raise(phi));
  return SiegelConnection(e, a.with_weight(0));
}

SiegelElement g_normalization(const SiegelConnection& conn) {
  return (MVRat(1 / conn.e) / kappa()) * conn.A;
}

SiegelElement pulled_connection(const SiegelElement& phi0, long N, const Rational& e,
                                const SiegelAction& act) {
  if (N == 0) fail(ErrorKind::ZeroWeight, "N = 0");
  SiegelElement t0 = transport(phi0.with_weight(static_cast<int>(N)), act);
  SiegelElement a = (2 * e / Rational(N)) * (t0.inverse() * pulled_raise(t0, act));
  return a.with_weight(0);
}

SiegelReport connection_law_check(const SiegelElement& phi0, long N, const Rational& e,
                                  const SymplecticElement& g) {
  SiegelAction act = siegel_act(g);
  SiegelConnection conn = maurer_cartan_A(phi0, N, e);
  SiegelElement lhs = pulled_connection(phi0, N, e, act);
  SiegelElement rhs = transport(conn.A, act) + (2 * e) * (kappa() * jct_form(act));
  return report("connection_law", lhs - rhs);
}

SiegelReport covariant_transport_check(const SiegelElement& phi, const SiegelElement& phi0,
                                       long N, const Rational& e, const SymplecticElement& g) {
  SiegelAction act = siegel_act(g);
  SiegelConnection conn = maurer_cartan_A(phi0, N, e);
  SiegelElement ag = pulled_connection(phi0, N, e, act);
  SiegelElement t = transport(phi, act);
  Rational c = Rational(phi.k() + phi.m()) / (2 * e);
  SiegelElement lhs = pulled_raise(t, act) - c * (t * ag);
  SiegelElement rhs = transport(covariant_raise(phi, conn), act);
  return report("covariant_transport", lhs - rhs);
}

// ---- determinant bracket ----

SiegelElement det_bracket(const std::vector<SiegelElement>& fs, const SiegelConnection& conn) {
  if (fs.empty() || fs.size() > 2) fail(ErrorKind::SizeMismatch, "genus 2 takes 1 or 2 forms");
  int weight = 0;
  for (const auto& f : fs) {
    if (f.m() != 0) fail(ErrorKind::BidegreeMismatch, "det_bracket inputs have Sym-degree 0");
    weight += f.k();
  }
  if (fs.size() == 1) return covariant_raise(fs[0], conn);
  std::vector<Matrix<Mat>> xs;
  for (const auto& f : fs) xs.push_back(covariant_raise(f, conn).avatar());
  return SiegelElement::matrix(odet(xs), weight + 2);
}

SiegelReport det_bracket_check(const SiegelElement& f1, const SiegelElement& f2,
                               const SiegelElement& phi0, long N, const Rational& e,
                               const SymplecticElement& g) {
  SiegelAction act = siegel_act(g);
  SiegelConnection conn = maurer_cartan_A(phi0, N, e);
  SiegelElement ag = pulled_connection(phi0, N, e, act);
  std::vector<Matrix<Mat>> ys;
  for (const auto* f : {&f1, &f2}) {
    SiegelElement t = transport(*f, act);
    Rational c = Rational(f->k()) / (2 * e);
    ys.push_back((pulled_raise(t, act) - c * (t * ag)).avatar());
  }
  SiegelElement lhs = SiegelElement::matrix(odet(ys), f1.k() + f2.k() + 2);
  SiegelElement rhs = transport(det_bracket({f1, f2}, conn), act);
  return report("det_bracket", lhs - rhs);
}

// ---- Wilczynski covariants ----

std::vector<SiegelElement> siegel_I_all(const BinomialOperator<SiegelRing>& l) {
  for (int i = 1; i <= l.n; ++i) {
    const auto& a = l.a[static_cast<std::size_t>(i)];
    if (!a.is_zero() && (a.k() != 0 || a.m() != 2 * i))
      fail(ErrorKind::BidegreeMismatch, "a_" + std::to_string(i) + " must have bidegree (0," +
                                            std::to_string(2 * i) + ")");
  }
  return closed_I_all(l);
}

SiegelElement siegel_Ik(const BinomialOperator<SiegelRing>& l, int k) {
  if (k < 2 || k > l.n) fail(ErrorKind::IndexOutOfRange, "I_" + std::to_string(k));
  return siegel_I_all(l)[static_cast<std::size_t>(k)];
}

}  // namespace wilc
