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


#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wilc/invariants.hpp"
#include "wilc/modular.hpp"
#include "wilc/qseries.hpp"
#include "wilc/random.hpp"
#include "wilc/reparam.hpp"
#include "wilc/siegel.hpp"
#include "wilc/verify.hpp"
#include "wilc_cli/cli.hpp"
#include "wilc_cli/spec.hpp"

namespace wilc::cli {

Section& Report::section(const std::string& name) {
  for (auto& s : sections)
    if (s.name == name) return s;
  sections.push_back({name, {}});
  return sections.back();
}

void Report::add_residual(std::string name, std::string value, std::string formula) {
  bool nonzero = value != "0";
  residuals.push_back({std::move(name), std::move(value), std::move(formula)});
  if (nonzero && status == "ok") status = "failed";
}

bool Report::failed() const { return status == "failed"; }

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command << "\n";
  for (const auto& [k, v] : r.echo) os << "  " << k << ": " << v << "\n";
  for (const auto& s : r.sections) {
    os << s.name << "\n";
    if (s.entries.empty()) os << "  (none)\n";
    for (const auto& [k, v] : s.entries) os << "  " << k << " = " << v << "\n";
  }
  if (!r.residuals.empty()) {
    os << "residuals\n";
    for (const auto& x : r.residuals)
      os << "  " << x.name << " = " << x.value << "  [" << x.formula << "]\n";
  }
  os << "status: " << r.status << "\n";
  return os.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  for (const auto& [k, v] : r.echo) {
    if (k == "n") j[k] = std::stoi(v);
    else j[k] = v;
  }
  for (const auto& s : r.sections) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.entries) obj[k] = v;
    j[s.name] = obj;
  }
  nlohmann::ordered_json res = nlohmann::ordered_json::object();
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& x : r.residuals) {
    res[x.name] = x.value;
    if (x.value != "0") failures.push_back({{"residual", x.name}, {"formula", x.formula}});
  }
  j["residuals"] = res;
  if (!failures.empty()) j["failures"] = failures;
  j["status"] = r.status;
  return j.dump(2) + "\n";
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string file;
  std::vector<int> w;
  std::vector<std::string> traces;
  bool det = false;
  std::string lambda;
  std::vector<int> check_w;
  std::string u;
  int k = 0;
  std::string alpha;
  int m = 0;
  std::uint64_t seed = 1;
  std::string suite;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <class T>
std::string str(const T& x) {
  return x.to_string();
}

template <class T>
std::string exact(const T& x) {
  return x.is_zero() ? "0" : x.to_string();
}

template <class R>
constexpr bool is_matrix_ring = false;
template <class B>
constexpr bool is_matrix_ring<MatrixRing<B>> = true;

template <class R>
void echo_operator(Report& rep, const OperatorSpec& spec, const BinomialOperator<R>& l) {
  rep.echo.push_back({"ring", spec.ring.to_string()});
  rep.echo.push_back({"n", std::to_string(l.n)});
  if (l.n >= 1) rep.echo.push_back({"a1", str(l.a[1])});
}

template <class R>
void invariants_for(Report& rep, const OperatorSpec& spec, const BinomialOperator<R>& l,
                    const Options& opt) {
  echo_operator(rep, spec, l);
  auto closed = closed_I_all(l);
  auto miura = miura_extract(l).I;
  auto& inv = rep.section("invariants");
  for (int k = 2; k <= l.n; ++k) inv.entries.push_back({"I" + std::to_string(k), str(closed[k])});
  auto& ws = rep.section("w");
  if (!opt.w.empty()) {
    int top = *std::max_element(opt.w.begin(), opt.w.end());
    auto cur = w_currents(l, top);
    for (int k : opt.w) ws.entries.push_back({"W" + std::to_string(k), str(cur.at(k))});
  }
  if (!opt.traces.empty() || opt.det) {
    if constexpr (is_matrix_ring<R>) {
      if (!opt.traces.empty()) {
        std::vector<TraceWord> words;
        for (const auto& t : opt.traces) {
          auto w = parse_word(t);
          if (!w || w->empty()) throw UsageError("bad trace word '" + t + "'");
          for (auto [k, m] : *w)
            if (k < 2 || k > l.n) throw UsageError("trace word '" + t + "' uses I" + std::to_string(k));
          words.push_back(*w);
        }
        auto vals = trace_invariants(l, words);
        auto& tr = rep.section("traces");
        for (std::size_t i = 0; i < words.size(); ++i)
          tr.entries.push_back({"tr(" + render_word(words[i]) + ")", str(vals[i])});
      }
      if (opt.det) {
        auto& ds = rep.section("det");
        for (int k = 2; k <= l.n; ++k)
          ds.entries.push_back({"det(I" + std::to_string(k) + ")", str(det(closed[k]))});
      }
    } else {
      throw UsageError("--trace and --det need a matrix ring");
    }
  }
  for (int k = 2; k <= l.n; ++k)
    rep.add_residual("I" + std::to_string(k), exact(closed[k] - miura[k]),
                     "closed Bell formula minus Miura expansion");
}

template <class R>
void reparam_for(Report& rep, const OperatorSpec& spec, const BinomialOperator<R>& l,
                 const RatFunc& lambda, const Options& opt) {
  echo_operator(rep, spec, l);
  ReparamJet jet(lambda, std::max(8, l.n + 3));
  rep.section("schwarzian").entries.push_back({"S", str(jet.S())});
  auto pulled = pullback_operator(l, jet);
  auto& pc = rep.section("pullback");
  for (int i = 1; i <= l.n; ++i) pc.entries.push_back({"a" + std::to_string(i), str(pulled.a[i])});
  auto inv = miura_extract(pulled).I;
  auto& is = rep.section("invariants");
  for (int k = 2; k <= l.n; ++k) is.entries.push_back({"I" + std::to_string(k), str(inv[k])});
  if (l.n >= 1 && l.a[1].is_zero()) {
    auto law = reparam_Ik_closed(l, jet);
    for (int k = 2; k <= l.n; ++k)
      rep.add_residual("I" + std::to_string(k), exact(law[k] - inv[k]),
                       "triangular law: vacuum cocycle plus C_kj (I_j o lambda)");
  }
  for (int k : opt.check_w) {
    auto t = verify_w_tensoriality(l, jet, k);
    std::string f = "W" + std::to_string(k) + "(pullback) - lambda'^" + std::to_string(k) + " W" +
                    std::to_string(k) + " o lambda";
    if (k == 2) f += " - (n+1)/6 S";
    rep.add_residual("W" + std::to_string(k), exact(t.residual), f);
  }
}

template <class R, class U>
void star_for(Report& rep, const OperatorSpec& spec, const BinomialOperator<R>& l, const U& u) {
  echo_operator(rep, spec, l);
  rep.echo.push_back({"u", str(u)});
  if (l.n < 1) throw UsageError("star needs n >= 1");
  auto s = star_action(u, l);
  auto& ss = rep.section("star");
  for (int i = 1; i <= l.n; ++i) ss.entries.push_back({"a" + std::to_string(i), str(s.a[i])});
  auto before = closed_I_all(l), after = closed_I_all(s);
  auto& is = rep.section("invariants");
  for (int k = 2; k <= l.n; ++k) is.entries.push_back({"I" + std::to_string(k), str(after[k])});
  rep.add_residual("a1", exact(s.a[1] - (l.a[1] - u)), "a1* - (a1 - u)");
  for (int k = 2; k <= l.n; ++k)
    rep.add_residual("I" + std::to_string(k), exact(after[k] - before[k]), "I_k(u*L) - I_k(L)");
}

template <class F>
void with_operator(const OperatorSpec& spec, F&& f) {
  switch (spec.ring.kind) {
    case RingKind::RatFunc: return f(build_ratfunc(spec));
    case RingKind::MatRF: return f(build_matrf(spec));
    case RingKind::QuasiModular: return f(build_quasimodular(spec));
    case RingKind::MatQM: return f(build_matqm(spec));
  }
}

Report cmd_invariants(const Options& opt) {
  Report rep{"invariants"};
  auto spec = parse_spec(read_file(opt.file));
  with_operator(spec, [&](const auto& l) { invariants_for(rep, spec, l, opt); });
  return rep;
}

Report cmd_reparam(const Options& opt) {
  Report rep{"reparam"};
  auto spec = parse_spec(read_file(opt.file));
  RingDecl zr{RingKind::RatFunc, 1};
  auto lexpr = parse_expr(opt.lambda, zr);
  RatFunc lambda = to_ratfunc(*lexpr, zr);
  rep.echo.push_back({"lambda", render(*lexpr)});
  if (lambda.derive().is_zero()) {
    rep.status = "refused";
    rep.echo.push_back({"reason", "lambda is constant"});
    return rep;
  }
  if (spec.ring.kind == RingKind::RatFunc) {
    reparam_for(rep, spec, build_ratfunc(spec), lambda, opt);
  } else if (spec.ring.kind == RingKind::MatRF) {
    reparam_for(rep, spec, build_matrf(spec), lambda, opt);
  } else {
    throw UsageError("reparam needs a ratfunc or matrf operator");
  }
  return rep;
}

Report cmd_star(const Options& opt) {
  Report rep{"star"};
  auto spec = parse_spec(read_file(opt.file));
  auto uexpr = parse_expr(opt.u, spec.ring);
  switch (spec.ring.kind) {
    case RingKind::RatFunc: star_for(rep, spec, build_ratfunc(spec), to_ratfunc(*uexpr, spec.ring)); break;
    case RingKind::MatRF: star_for(rep, spec, build_matrf(spec), to_matrf(*uexpr, spec.ring)); break;
    case RingKind::QuasiModular:
      star_for(rep, spec, build_quasimodular(spec), to_qmrat(*uexpr, spec.ring));
      break;
    case RingKind::MatQM: star_for(rep, spec, build_matqm(spec), to_matqm(*uexpr, spec.ring)); break;
  }
  return rep;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw UsageError("bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

Report cmd_mlde(const Options& opt) {
  Report rep{"modular mlde"};
  Rational alpha = parse_rational(opt.alpha);
  rep.echo.push_back({"k", std::to_string(opt.k)});
  rep.echo.push_back({"alpha", alpha.get_str()});
  auto l = mldo_second_order(opt.k, alpha);
  auto& cs = rep.section("coefficients");
  for (int i = 1; i <= l.n; ++i) cs.entries.push_back({"a" + std::to_string(i), str(l.a[i])});
  auto inv = closed_I_all(l);
  rep.section("invariants").entries.push_back({"I2", str(inv[2])});
  QuasiModular expect = (alpha - make_rational(1, 144)) * E4();
  rep.add_residual("I2", exact(inv[2] - expect), "I2 - (alpha - 1/144) E4");
  return rep;
}

Report cmd_nsz() {
  Report rep{"modular nsz"};
  auto l = nsz_example_operator();
  rep.echo.push_back({"n", std::to_string(l.n)});
  auto& cs = rep.section("coefficients");
  for (int i = 1; i <= l.n; ++i) cs.entries.push_back({"a" + std::to_string(i), str(l.a[i])});
  auto inv = closed_I_all(l);
  auto& is = rep.section("invariants");
  for (int k = 2; k <= l.n; ++k) is.entries.push_back({"I" + std::to_string(k), str(inv[k])});
  auto w = w_currents(l, 3);
  auto& ws = rep.section("w");
  ws.entries.push_back({"W2", str(w.at(2))});
  ws.entries.push_back({"W3", str(w.at(3))});
  auto cur = discriminant_current({w.at(2), 4}, {w.at(3), 6});
  auto& ds = rep.section("discriminant");
  ds.entries.push_back({"-27(4W2^3+W3^2)", str(cur.value)});
  ds.entries.push_back({"weight", std::to_string(cur.weight)});
  ds.entries.push_back({"depth", std::to_string(grading(cur.value).depth)});
  if (auto c = e4e6_coordinates(cur.value))
    ds.entries.push_back({"E4^3, E6^2", c->first.get_str() + ", " + c->second.get_str()});
  Rational c0 = eval_qseries(cur.value, 2)[0];
  ds.entries.push_back({"q^0", c0.get_str()});
  rep.add_residual("q^0", c0.get_str(), "constant q-coefficient of -27(4W2^3+W3^2)");
  return rep;
}

Report cmd_hm(const Options& opt) {
  Report rep{"modular hm"};
  rep.echo.push_back({"m", std::to_string(opt.m)});
  auto h = nsz_hm(nsz_example_coefficients(), opt.m);
  auto& hs = rep.section("hm");
  hs.entries.push_back({"h" + std::to_string(opt.m), str(h.value)});
  hs.entries.push_back({"weight", std::to_string(h.weight)});
  hs.entries.push_back({"depth", std::to_string(grading(h.value).depth)});
  return rep;
}

MVRat det_Z() { return tau(1) * tau(3) - tau(2) * tau(2); }

Report cmd_siegel(const std::string& which, const Options& opt) {
  Report rep{"siegel " + which};
  rep.echo.push_back({"seed", std::to_string(opt.seed)});
  Sampler s(opt.seed);
  auto& rng = s.engine();
  auto& cases = rep.section("cases");
  auto label = [](const char* p, int i) { return std::string(p) + "[" + std::to_string(i) + "]"; };
  if (which == "chain") {
    for (int i = 1; i <= 10; ++i) {
      MVRat f = s.mv_poly(3);
      auto g = random_symplectic(rng);
      cases.entries.push_back({label("f", i), str(f)});
      cases.entries.push_back({label("gamma", i), g.to_string()});
      auto r = chain_rule_check(f, g);
      rep.add_residual(label("chain", i), r.residual, "D_Z(f o gamma) against J^-t (D_Z f) o gamma J^-1");
    }
  } else if (which == "anomaly") {
    static const int ks[4] = {0, 1, 2, 4};
    for (int i = 1; i <= 8; ++i) {
      int k = ks[i % 4], m = 2 * (i % 2);
      std::vector<MVRat> c;
      for (int a = 0; a <= m; ++a) c.push_back(s.mv_poly(2));
      auto phi = SiegelElement::form(k, c);
      auto g = random_symplectic(rng);
      cases.entries.push_back({label("phi", i), str(phi)});
      cases.entries.push_back({label("gamma", i), g.to_string()});
      auto r = anomaly_check(phi, g);
      rep.add_residual(label("anomaly", i), r.residual, "raw raise of the transport minus transport of the raise, against the JC^t anomaly");
    }
  } else if (which == "odet") {
    for (int i = 1; i <= 5; ++i) {
      Matrix<MVRat> m(2);
      do {
        for (std::size_t a = 0; a < 2; ++a)
          for (std::size_t b = 0; b < 2; ++b) m(a, b) = MVRat(s.rational());
      } while (det(m).is_zero());
      std::vector<Matrix<MVRat>> xs, ys;
      for (int j = 0; j < 2; ++j) {
        Matrix<MVRat> x(2);
        x(0, 0) = s.mv_poly(1);
        x(0, 1) = x(1, 0) = s.mv_poly(1);
        x(1, 1) = s.mv_poly(1);
        Matrix<MVRat> mt(2);
        for (std::size_t a = 0; a < 2; ++a)
          for (std::size_t b = 0; b < 2; ++b) mt(a, b) = m(b, a);
        xs.push_back(x);
        ys.push_back(m * x * mt);
      }
      MVRat lhs = odet(ys), base = odet(xs), dm = det(m);
      cases.entries.push_back({label("M", i), str(m)});
      cases.entries.push_back({label("det(M)^2", i), str(dm * dm)});
      if (!base.is_zero()) cases.entries.push_back({label("factor", i), str(lhs / base)});
      rep.add_residual(label("odet", i), exact(lhs - dm * dm * base),
                       "odet(M X1 M^t, M X2 M^t) - det(M)^2 odet(X1, X2)");
    }
  } else {
    for (int i = 1; i <= 3; ++i) {
      auto f1 = SiegelElement::scalar(s.mv_poly(2), 1 + i % 2);
      auto f2 = SiegelElement::scalar(s.mv_poly(2), 2 + i % 3);
      auto g = random_symplectic(rng);
      cases.entries.push_back({label("f", i), str(f1) + " ; " + str(f2)});
      cases.entries.push_back({label("gamma", i), g.to_string()});
      auto r = det_bracket_check(f1, f2, SiegelElement::scalar(det_Z()), 2, Rational(1), g);
      rep.add_residual(label("bracket", i), r.residual,
                       "det bracket of transported pair minus transport of the bracket");
    }
  }
  return rep;
}

Report cmd_verify(const Options& opt) {
  Report rep{"verify"};
  rep.echo.push_back({"suite", opt.suite});
  rep.echo.push_back({"seed", std::to_string(opt.seed)});
  std::vector<std::string> names;
  if (opt.suite == "all") names = suite_names();
  else names.push_back(opt.suite);
  for (const auto& name : names) {
    auto r = run_suite(name, opt.seed);
    if (!r) throw UsageError("unknown suite '" + name + "'");
    auto& sec = rep.section(name);
    for (const auto& p : r->properties) {
      sec.entries.push_back({p.name, std::string(p.passed ? "pass" : "FAIL") + " (" +
                                         std::to_string(p.cases) + " cases)"});
      rep.add_residual(name + "/" + p.name, p.passed ? "0" : (p.detail.empty() ? "failed" : p.detail), "property " + p.name);
    }
  }
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of linear differential operators", "wilc"};
  app.require_subcommand(1);
  Options opt;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* inv = app.add_subcommand("invariants", "I_k, W_k and trace invariants of an operator");
  inv->add_option("FILE", opt.file, "Operator spec file")->required();
  inv->add_option("--w", opt.w, "W current to emit")->check(CLI::Range(2, 6));
  inv->add_option("--trace", opt.traces, "Trace word such as I2*I3 or DI2");
  inv->add_flag("--det", opt.det, "Determinants of the I_k");
  add_format(inv);

  auto* rep = app.add_subcommand("reparam", "Pull back along z -> lambda(z)");
  rep->add_option("FILE", opt.file, "Operator spec file")->required();
  rep->add_option("--lambda", opt.lambda, "Rational function of z")->required();
  rep->add_option("--check-w", opt.check_w, "Tensoriality check for W_k")->check(CLI::Range(2, 6));
  add_format(rep);

  auto* star = app.add_subcommand("star", "u-star action on the coefficients");
  star->add_option("FILE", opt.file, "Operator spec file")->required();
  star->add_option("--u", opt.u, "Element of the coefficient ring")->required();
  add_format(star);

  auto* mod = app.add_subcommand("modular", "Quasimodular examples");
  mod->require_subcommand(1);
  auto* mlde = mod->add_subcommand("mlde", "D_{k+2} o D_k + alpha E4");
  mlde->add_option("--k", opt.k, "Weight")->required();
  mlde->add_option("--alpha", opt.alpha, "Rational p/q")->required();
  add_format(mlde);
  auto* nsz = mod->add_subcommand("nsz", "Third-order example operator");
  add_format(nsz);
  auto* hm = mod->add_subcommand("hm", "Covariant h_m of the third-order example");
  hm->add_option("--m", opt.m, "Index")->required();
  add_format(hm);

  auto* sg = app.add_subcommand("siegel", "Genus-2 checks on seeded data");
  sg->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> siegel_subs;
  for (const char* name : {"chain", "anomaly", "odet", "bracket"}) {
    auto* sub = sg->add_subcommand(name);
    sub->add_option("--seed", opt.seed, "Seed");
    add_format(sub);
    siegel_subs.push_back({name, sub});
  }

  auto* ver = app.add_subcommand("verify", "Run property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("SUITE", opt.suite, "Suite name or all")->required()->check(CLI::IsMember(suites));
  ver->add_option("--seed", opt.seed, "Seed");
  add_format(ver);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Report r;
    if (inv->parsed()) r = cmd_invariants(opt);
    else if (rep->parsed()) r = cmd_reparam(opt);
    else if (star->parsed()) r = cmd_star(opt);
    else if (mlde->parsed()) r = cmd_mlde(opt);
    else if (nsz->parsed()) r = cmd_nsz();
    else if (hm->parsed()) r = cmd_hm(opt);
    else if (ver->parsed()) r = cmd_verify(opt);
    else
      for (auto& [name, sub] : siegel_subs)
        if (sub->parsed()) r = cmd_siegel(name, opt);
    out << (opt.format == "json" ? render_json(r) : render_text(r));
    if (r.status == "refused") return kParse;
    return r.failed() ? kMath : kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kParse;
  } catch (const MathError& e) {
    err << e.what() << "\n";
    return kMath;
  }
}

}  // namespace wilc::cli
