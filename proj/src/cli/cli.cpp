// Copyright 2026 The Bianchi Quintic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bianchi/cli/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <locale>
#include <numeric>
#include <sstream>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bianchi/congruence/congruence.hpp"
#include "bianchi/curve/curve.hpp"
#include "bianchi/curve/weierstrass.hpp"
#include "bianchi/errors.hpp"
#include "bianchi/exact/series_json.hpp"
#include "bianchi/identities/identities.hpp"
#include "bianchi/modular/modular.hpp"
#include "bianchi/theta/theta.hpp"

namespace bianchi::cli {

using Complex = std::complex<double>;
using nlohmann::json;

namespace {

// Locale-independent: '.' is always the decimal separator.
double parse_real(const std::string& s) {
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double v;
  in >> v;
  if (in.fail() || !in.eof()) throw ParseError("bad number: " + s);
  return v;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json point_json(const curve::NumericPoint& p) {
  json a = json::array();
  for (const auto& c : p.x) a.push_back(complex_json(c));
  return a;
}

curve::NumericPoint parse_point(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("point is not JSON: ") + e.what());
  }
  if (!j.is_array() || j.size() != 5) throw ParseError("point must be an array of 5 complex numbers");
  curve::NumericPoint p;
  for (int k = 0; k < 5; ++k) {
    const auto& c = j[static_cast<std::size_t>(k)];
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
      throw ParseError("each coordinate must be [re, im]");
    }
    p[k] = Complex(c[0].get<double>(), c[1].get<double>());
  }
  if (curve::max_magnitude(p) == 0) throw ParseError("point has all coordinates zero");
  return p;
}

exact::BigRational default_order(exact::BigRational fallback) {
  if (const char* env = std::getenv(kOrderEnv); env && *env) return exact::parse_rational(env);
  return fallback;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  static const std::regex pat(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?\s*$)");
  static const std::regex pure_im(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i\s*$)");
  std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, pure_im)) {
    double v = m[2].matched ? parse_real(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -v : v};
  }
  if (!s.empty() && std::regex_match(s, m, pat) && (m[1].matched || m[2].matched)) {
    double re = m[1].matched ? parse_real(m[1]) : 0.0;
    double im = 0.0;
    if (m[2].matched) {
      im = m[3].matched ? parse_real(m[3]) : 1.0;
      if (m[2] == "-") im = -im;
    }
    return {re, im};
  }
  throw ParseError("bad complex literal: " + s);
}

namespace {

int cmd_expand(const std::string& name, const std::string& order_text, const std::string& format, std::ostream& out) {
  exact::BigRational order = order_text.empty() ? default_order(exact::make_rational(10)) : exact::parse_rational(order_text);
  auto s = modular::named_series(name, order);
  if (format == "json") {
    out << exact::to_json(s).dump() << "\n";
  } else {
    out << exact::to_text(s);
  }
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> names;
  bool all = false;
  std::string order;
  double tol = 1e-9;
  int samples = 20;
  std::uint64_t seed = 7;
  unsigned threads = 0;
  bool timing = false;
  std::string format = "json";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  identities::VerifyConfig cfg;
  cfg.series_order = a.order.empty() ? default_order(exact::make_rational(30)) : exact::parse_rational(a.order);
  cfg.tol = a.tol;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  if (!a.all && a.names.empty()) throw InvalidConfig("give identity names or --all");
  auto report = identities::run_checks(a.all ? std::vector<std::string>{} : a.names, cfg);
  if (a.format == "text") {
    for (const auto& c : report.checks) {
      out << std::left << std::setw(36) << c.name << std::setw(14) << identities::to_string(c.kind)
          << identities::to_string(c.status);
      if (c.worst_residual) out << "  " << std::setprecision(3) << std::scientific << *c.worst_residual << std::defaultfloat;
      if (c.first_failing_exponent) out << "  first failing exponent " << exact::to_string(*c.first_failing_exponent);
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
    }
    out << "passed " << report.passed << ", failed " << report.failed << "\n";
  } else {
    out << identities::to_json(report, a.timing).dump(2) << "\n";
  }
  err << "elapsed_ms " << std::fixed << std::setprecision(1) << report.elapsed_ms << "\n";
  return report.all_passed() ? kOk : kFailed;
}

struct PointArgs {
  std::string op;
  std::string tau, phi;
  std::string p, q;
};

json describe(const curve::NumericPoint& p, Complex phi) {
  return {{"point", point_json(curve::normalized(p))}, {"quadric_residual", curve::quadric_residual_rel(p, phi)}};
}

int cmd_point(const PointArgs& a, std::ostream& out) {
  if (a.tau.empty() == a.phi.empty()) throw InvalidConfig("give exactly one of --tau and --phi");
  Complex phi;
  if (!a.tau.empty()) {
    Complex tau = parse_complex(a.tau);
    if (!(tau.imag() > 0)) throw InvalidConfig("--tau must have positive imaginary part");
    phi = theta::phi_numeric(tau);
  } else {
    phi = parse_complex(a.phi);
  }
  json res{{"phi", complex_json(phi)}, {"op", a.op}};
  auto need = [](const std::string& s, const char* flag) {
    if (s.empty()) throw InvalidConfig(std::string("missing ") + flag);
    return parse_point(s);
  };
  if (a.op == "add") {
    auto r = curve::add_with_formula(need(a.p, "--P"), need(a.q, "--Q"));
    res["result"] = describe(r.point, phi);
    res["formula"] = r.formula == curve::AddFormula::A1 ? "A1" : "A2";
  } else if (a.op == "double") {
    res["result"] = describe(curve::duplicate(need(a.p, "--P")), phi);
  } else if (a.op == "neg") {
    res["result"] = describe(curve::negate(need(a.p, "--P")), phi);
  } else if (a.op == "on-curve") {
    auto p = need(a.p, "--P");
    res["quadric_residual"] = curve::quadric_residual_rel(p, phi);
  } else if (a.op == "two-torsion") {
    json pts = json::array();
    auto o = curve::neutral(phi);
    for (const auto& t : curve::two_torsion_points(phi)) {
      json d = describe(t, phi);
      d["double_distance_to_O"] = curve::projective_distance(curve::duplicate(t), o);
      pts.push_back(std::move(d));
    }
    res["points"] = std::move(pts);
  } else if (a.op == "five-torsion") {
    json pts = json::array();
    for (const auto& t : curve::five_torsion_points(phi)) pts.push_back(describe(t, phi));
    res["points"] = std::move(pts);
  } else {
    throw InvalidConfig("unknown point operation: " + a.op);
  }
  out << res.dump(2) << "\n";
  return kOk;
}

int cmd_group(const std::string& name, const std::string& in, int modulus, bool dot, std::ostream& out) {
  if (dot) {
    out << congruence::lattice_dot();
    return kOk;
  }
  if (name.empty()) throw InvalidConfig("give a group name or --dot");
  auto spec = congruence::spec_by_name(name);
  int n = modulus ? modulus : std::lcm(spec.level, 10) <= congruence::kMaxModulus ? std::lcm(spec.level, 10) : spec.level;
  json res{{"group", spec.name}, {"modulus", n}};
  res["order_mod_n"] = congruence::image_of(spec, n)->order();
  res["genus_data"] = congruence::to_json(congruence::genus_data(spec, n));
  json containing = json::array();
  std::vector<congruence::SubgroupSpec> outers;
  if (!in.empty()) {
    outers.push_back(congruence::spec_by_name(in));
  } else if (n == 10) {
    for (const auto& e : congruence::lattice_edges()) {
      if (e.inner == spec.name) outers.push_back(congruence::spec_by_name(e.outer == "Gamma(1)" ? "SL2(Z)" : e.outer));
    }
  }
  for (const auto& o : outers) {
    json r = congruence::to_json(congruence::subgroup_report(spec, o, n));
    r["outer"] = o.name;
    containing.push_back(std::move(r));
  }
  res["contained_in"] = std::move(containing);
  out << res.dump(2) << "\n";
  return kOk;
}

int cmd_list(std::ostream& out) {
  for (const auto& c : identities::registry()) {
    out << std::left << std::setw(36) << c.name << std::setw(14) << identities::to_string(c.kind) << c.summary << "\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification kernel for the Bianchi quintic, its torsion and the level-10 modular functions"};
  app.require_subcommand(1);
  app.footer(std::string("Environment: ") + kOrderEnv + " sets the default series order (flags win).");

  std::string ex_name, ex_order, ex_format = "text";
  auto* expand = app.add_subcommand("expand", "Print the q-expansion of a named series");
  expand->add_option("name", ex_name, "phi, phi5, g1, g2, g3, delta, eta, j, j5, j10, neg_g2_2tau")->required();
  expand->add_option("--order", ex_order, "Truncation order in q (rational; default 10)");
  expand->add_option("--format", ex_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("names", va.names, "Identity names (see `list`)");
  verify->add_flag("--all", va.all, "Run every check");
  verify->add_option("--order", va.order, "Series order (default 30)");
  verify->add_option("--tol", va.tol, "Numeric tolerance (default 1e-9)");
  verify->add_option("--samples", va.samples, "Samples per numeric check (default 20)");
  verify->add_option("--seed", va.seed, "Seed (default 7)");
  verify->add_option("--threads", va.threads, "Worker threads (0 = all cores)");
  verify->add_flag("--timing", va.timing, "Include elapsed_ms in the JSON report");
  verify->add_option("--format", va.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  PointArgs pa;
  auto* point = app.add_subcommand("point", "Curve arithmetic over C");
  point->add_option("op", pa.op, "add, double, neg, on-curve, two-torsion, five-torsion")
      ->required()
      ->check(CLI::IsMember({"add", "double", "neg", "on-curve", "two-torsion", "five-torsion"}));
  point->add_option("--tau", pa.tau, "tau in the upper half plane, e.g. 1.1i or 0.3+1.4i");
  point->add_option("--phi", pa.phi, "phi directly");
  point->add_option("--P", pa.p, "Point as JSON [[re,im] x 5]");
  point->add_option("--Q", pa.q, "Second point for add");

  std::string gr_name, gr_in;
  int gr_mod = 0;
  bool gr_dot = false;
  auto* group = app.add_subcommand("group", "Congruence subgroup data");
  group->add_option("name", gr_name, "Gamma(N), Gamma0(N), Gamma1(N), G1..G4, G2-literal, A&B");
  group->add_option("--in", gr_in, "Report index and normality inside this group");
  group->add_option("--modulus", gr_mod, "Work in SL2(Z/N)");
  group->add_flag("--dot", gr_dot, "Print the subgroup lattice as DOT");

  auto* list = app.add_subcommand("list", "List identity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (expand->parsed()) return cmd_expand(ex_name, ex_order, ex_format, out);
    if (verify->parsed()) return cmd_verify(va, out, err);
    if (point->parsed()) return cmd_point(pa, out);
    if (group->parsed()) return cmd_group(gr_name, gr_in, gr_mod, gr_dot, out);
    if (list->parsed()) return cmd_list(out);
  } catch (const UnknownName& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "failed: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace bianchi::cli
