// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "nsdiv/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "nsdiv/bounds.hpp"
#include "nsdiv/criteria.hpp"
#include "nsdiv/doublecover.hpp"
#include "nsdiv/error.hpp"
#include "nsdiv/io.hpp"
#include "nsdiv/selfcheck.hpp"
#include "nsdiv/tables.hpp"
#include "nsdiv/zeta.hpp"

namespace nsdiv::cli {

namespace {

using io::json;
using zeta::BigInt;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string file;
  int max_degree = 0;
  std::string property = "both";
  long long q = 0;
  long long g = 0;
  long long n1 = 0;
  long long n = 0;
  std::string source;
  int count = 1000;
};

bool as_json(const Options& o) { return o.format == "json"; }

std::string list(const std::vector<BigInt>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

std::string list(const std::vector<long long>& v) {
  std::vector<BigInt> b(v.begin(), v.end());
  return list(b);
}

std::string sign_word(int s) { return s < 0 ? "< 0" : (s > 0 ? "> 0" : "= 0"); }

std::string signed_text(const zeta::SignedValue& s) { return s.value.to_string() + " (" + sign_word(s.sign) + ")"; }

json signed_json(const zeta::SignedValue& s) {
  return json{{"u", io::to_json(s.value.u())},
              {"v", io::to_json(s.value.v())},
              {"radicand", s.value.radicand()},
              {"text", s.value.to_string()},
              {"sign", s.sign}};
}

json real_weil_json(const zeta::RealWeilPoly& H) {
  return json{{"coeffs", io::to_json(H.coeffs)}, {"text", H.to_string()}};
}

void print_verdict_text(std::ostream& out, const criteria::Verdict& v) {
  out << "E_" << (v.property == criteria::Property::Eg ? "g" : "{g-1}") << ": " << criteria::to_string(v.status) << "\n";
  if (v.exception) {
    out << "  matches a listed exceptional field: " << v.exception->equation << " ["
        << criteria::to_string(v.exception->source) << "]\n";
  }
  for (const auto& r : v.rules) out << "  " << r.id << ": " << r.cite << "\n";
  for (const auto& a : v.alarms) out << "  ALARM: " << a << "\n";
}

int zeta_counts_to_lpoly(const Options& o, std::ostream& out) {
  const zeta::PlaceCounts pc = io::counts_from_json(io::read_json_file(o.file));
  const auto report = zeta::admissibility(pc);
  const zeta::LPolynomial L = zeta::lpoly_from_counts(pc);
  std::vector<BigInt> A;
  for (int m = 0; m <= 2 * pc.g; ++m) A.push_back(zeta::effective_count(L, m));
  const zeta::RealWeilPoly H = zeta::real_weil(L);
  const auto hp = zeta::sqrt_sign_eval(H, pc.q);
  const auto hm = zeta::sqrt_sign_eval(H, pc.q, true);
  if (as_json(o)) {
    out << json{{"lpoly", io::to_json(L)},
                {"h", io::to_json(L.class_number())},
                {"A", io::to_json(A)},
                {"real_weil", real_weil_json(H)},
                {"H_at_plus", signed_json(hp)},
                {"H_at_minus", signed_json(hm)},
                {"admissibility",
                 json{{"admissible", report.admissible}, {"violated", report.violated}, {"diagnostics", report.diagnostics}}}}
                .dump(2)
        << "\n";
  } else {
    const std::string r = "√" + std::to_string(pc.q);
    out << "L(t) = " << L.to_string() << "\n"
        << "h = " << L.class_number() << "\n"
        << "A_0..A_" << 2 * pc.g << " = " << list(A) << "\n"
        << "H(T) = " << H.to_string() << "\n"
        << "H(2" << r << ") = " << signed_text(hp) << "\n"
        << "H(-2" << r << ") = " << signed_text(hm) << "\n"
        << "admissible: " << (report.admissible ? "yes" : "no") << "\n";
    for (const auto& v : report.violated) out << "  violated: " << v << "\n";
    for (const auto& d : report.diagnostics) out << "  note: " << d << "\n";
  }
  return report.admissible ? kOk : kFailed;
}

int zeta_lpoly_info(const Options& o, std::ostream& out) {
  const zeta::LPolynomial L = io::lpoly_from_json(io::read_json_file(o.file));
  const auto N = zeta::counts_from_lpoly(L, 2 * L.g());
  const zeta::RealWeilPoly H = zeta::real_weil(L);
  const auto hp = zeta::sqrt_sign_eval(H, L.q());
  const auto hm = zeta::sqrt_sign_eval(H, L.q(), true);
  if (as_json(o)) {
    out << json{{"h", io::to_json(L.class_number())},
                {"N", io::to_json(N)},
                {"real_weil", real_weil_json(H)},
                {"H_at_plus", signed_json(hp)},
                {"H_at_minus", signed_json(hm)}}
                .dump(2)
        << "\n";
  } else {
    const std::string r = "√" + std::to_string(L.q());
    out << "h = " << L.class_number() << "\n"
        << "N_1..N_" << 2 * L.g() << " = " << list(N) << "\n"
        << "H(T) = " << H.to_string() << "\n"
        << "H(2" << r << ") = " << signed_text(hp) << "\n"
        << "H(-2" << r << ") = " << signed_text(hm) << "\n";
  }
  return kOk;
}

int curve_count(const Options& o, std::ostream& out) {
  const cover::DoubleCover dc = io::curve_from_json(io::read_json_file(o.file));
  const int k = o.max_degree > 0 ? o.max_degree : std::clamp(dc.genus(), 1, 8);
  const auto N = cover::count_places(dc, k);
  if (as_json(o)) {
    out << json{{"N", N}, {"genus", dc.genus()}, {"equation", dc.equation()}}.dump(2) << "\n";
  } else {
    out << dc.equation() << "\n"
        << "genus = " << dc.genus() << "\n"
        << "N_1..N_" << k << " = " << list(N) << "\n";
  }
  return kOk;
}

int criteria_check(const Options& o, std::ostream& out) {
  const zeta::PlaceCounts pc = io::counts_from_json(io::read_json_file(o.file));
  pc.validate();
  const auto fd = criteria::FieldData::from_counts(pc);
  std::vector<criteria::Verdict> verdicts;
  if (o.property != "egm1") verdicts.push_back(criteria::evaluate_Eg(fd));
  if (o.property != "eg") verdicts.push_back(criteria::evaluate_Egm1(fd));
  if (as_json(o)) {
    json arr = json::array();
    for (const auto& v : verdicts) arr.push_back(io::to_json(v));
    out << json{{"h", io::to_json(fd.h)}, {"verdicts", arr}}.dump(2) << "\n";
  } else {
    out << "h = " << fd.h << "\n";
    for (const auto& v : verdicts) print_verdict_text(out, v);
  }
  const bool alarmed = std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return !v.alarms.empty(); });
  return alarmed ? kFailed : kOk;
}

int tower_certify(const Options& o, std::ostream& out) {
  const auto v = criteria::certify_tower_step(o.q, o.g, o.n1);
  if (as_json(o)) {
    out << io::to_json(v).dump(2) << "\n";
  } else {
    print_verdict_text(out, v);
  }
  return kOk;
}

json bound_json(const bounds::BoundResult& b) {
  return json{{"bound", bounds::exact(b.bound)},
              {"bound_decimal", bounds::decimal(b.bound)},
              {"coefficient", bounds::exact(b.coefficient)},
              {"formula", b.formula}};
}

int bounds_mu(const Options& o, std::ostream& out) {
  const auto a = bounds::mu_bound_new(o.q, o.n);
  const auto b = bounds::mu_bound_gap2003(o.q, o.n);
  const auto c = bounds::mu_bound_remark22(o.q, o.n);
  if (as_json(o)) {
    out << json{{"q", o.q}, {"n", o.n}, {"new", bound_json(a)}, {"prior", bound_json(b)}, {"p_form", bound_json(c)}}.dump(2)
        << "\n";
  } else {
    auto line = [&](const char* name, const bounds::BoundResult& r) {
      out << name << ": " << bounds::exact(r.bound) << " (~" << bounds::decimal(r.bound) << ")  " << r.formula << "\n";
    };
    line("new", a);
    line("prior", b);
    line("p-form", c);
  }
  return kOk;
}

json checks_json(const std::vector<tables::Check>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return arr;
}

int tables_verify(const Options& o, std::ostream& out) {
  const auto report = tables::verify_tables(tables::embedded_dataset(), o.source);
  const auto passed = std::count_if(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.pass(); });
  if (as_json(o)) {
    json rows = json::array();
    for (const auto& r : report.rows) {
      rows.push_back(json{{"id", r.id}, {"source", r.source}, {"pass", r.pass()}, {"checks", checks_json(r.checks)}});
    }
    out << json{{"pass", report.pass()}, {"rows", rows}, {"global", checks_json(report.global)}}.dump(2) << "\n";
  } else {
    for (const auto& r : report.rows) {
      out << (r.pass() ? "PASS " : "FAIL ") << r.id << " [" << r.source << "]\n";
      for (const auto& c : r.checks) {
        if (!c.pass) out << "  " << c.name << ": " << c.detail << "\n";
      }
    }
    for (const auto& c : report.global) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    out << passed << "/" << report.rows.size() << " rows pass\n";
  }
  return report.pass() ? kOk : kFailed;
}

int run_selfcheck(const Options& o, std::ostream& out) {
  const std::vector<selfcheck::SuiteResult> suites{selfcheck::identity_suite(o.seed, o.count),
                                                   selfcheck::genus4_quartic_suite(o.seed, std::max(1, o.count / 10))};
  bool ok = true;
  json arr = json::array();
  for (const auto& s : suites) {
    ok = ok && s.pass();
    if (as_json(o)) {
      arr.push_back(json{{"name", s.name}, {"instances", s.instances}, {"failures", s.failures}, {"details", s.details}});
    } else {
      out << (s.pass() ? "PASS " : "FAIL ") << s.name << ": " << s.instances << " instances, " << s.failures
          << " failures\n";
      for (const auto& d : s.details) out << "  " << d << "\n";
    }
  }
  if (as_json(o)) out << json{{"seed", o.seed}, {"suites", arr}}.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Zeta invariants and non-special divisor criteria for function fields over small finite fields", "nsdiv"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized suites");

  int (*action)(const Options&, std::ostream&) = nullptr;

  auto* zeta_cmd = app.add_subcommand("zeta", "L-polynomial computations");
  zeta_cmd->require_subcommand(1);
  auto* c2l = zeta_cmd->add_subcommand("counts-to-lpoly", "L-polynomial, h, A_m, H(T) and admissibility from place counts");
  c2l->add_option("file", o.file, "counts JSON")->required();
  c2l->callback([&] { action = zeta_counts_to_lpoly; });
  auto* info = zeta_cmd->add_subcommand("lpoly-info", "h, place counts and H(T) from an L-polynomial");
  info->add_option("file", o.file, "L-polynomial JSON")->required();
  info->callback([&] { action = zeta_lpoly_info; });

  auto* curve_cmd = app.add_subcommand("curve", "Double covers of the projective line");
  curve_cmd->require_subcommand(1);
  auto* count = curve_cmd->add_subcommand("count", "Count places by degree");
  count->add_option("file", o.file, "curve JSON")->required();
  count->add_option("--max-degree", o.max_degree, "Largest degree counted")->check(CLI::Range(1, 8));
  count->callback([&] { action = curve_count; });

  auto* crit_cmd = app.add_subcommand("criteria", "Existence criteria for non-special divisors");
  crit_cmd->require_subcommand(1);
  auto* check = crit_cmd->add_subcommand("check", "Evaluate the criteria on place counts");
  check->add_option("file", o.file, "counts JSON")->required();
  check->add_option("--property", o.property, "Which property")->check(CLI::IsMember({"eg", "egm1", "both"}));
  check->callback([&] { action = criteria_check; });

  auto* tower_cmd = app.add_subcommand("tower", "Tower steps in characteristic 2");
  tower_cmd->require_subcommand(1);
  auto* certify = tower_cmd->add_subcommand("certify", "Degree g - 1 certificate for one step");
  certify->add_option("--q", o.q, "Field size")->required();
  certify->add_option("--g", o.g, "Genus")->required();
  certify->add_option("--n1", o.n1, "Rational places")->required();
  certify->callback([&] { action = tower_certify; });

  auto* bounds_cmd = app.add_subcommand("bounds", "Bilinear complexity bounds");
  bounds_cmd->require_subcommand(1);
  auto* mu = bounds_cmd->add_subcommand("mu", "Upper bounds on mu_q(n)");
  mu->add_option("--q", o.q, "Field size")->required();
  mu->add_option("--n", o.n, "Extension degree")->required();
  mu->callback([&] { action = bounds_mu; });

  auto* tables_cmd = app.add_subcommand("tables", "Embedded dataset");
  tables_cmd->require_subcommand(1);
  auto* verify = tables_cmd->add_subcommand("verify", "Verify every dataset row");
  verify->add_option("--source", o.source, "Restrict to one source");
  verify->callback([&] { action = tables_verify; });

  auto* self = app.add_subcommand("selfcheck", "Randomized identity suites (uses --seed)");
  self->add_option("--count", o.count, "Random instances")->check(CLI::PositiveNumber);
  self->callback([&] { action = run_selfcheck; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (action == nullptr) {
    err << "no command\n";
    return kInputError;
  }
  try {
    return action(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InadmissibleError& e) {
    err << "not admissible: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace nsdiv::cli
