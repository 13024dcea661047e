// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "nsdiv/tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nsdiv/doublecover.hpp"
#include "nsdiv/error.hpp"
#include "nsdiv/zeta.hpp"

namespace nsdiv::tables {

// Defined in the generated resource file.
const char* embedded_tables_json();

namespace {

using zeta::BigInt;

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

Check check(std::string name, bool pass, std::string detail = {}) {
  return Check{std::move(name), pass, std::move(detail)};
}

}  // namespace

bool RowReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool Report::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowReport& r) { return r.pass(); }) &&
         std::all_of(global.begin(), global.end(), [](const Check& c) { return c.pass; });
}

Dataset parse_dataset(const io::json& j) {
  Dataset ds;
  ds.version = j.at("version").get<int>();
  for (const auto& r : j.at("rows")) {
    TableRow row;
    row.id = r.at("id").get<std::string>();
    row.source = r.at("source").get<std::string>();
    row.q = r.at("q").get<int>();
    row.g = r.at("g").get<int>();
    row.equation = r.at("equation").get<std::string>();
    row.N = r.at("N").get<std::vector<long long>>();
    row.h = r.at("h").get<long long>();
    const std::string kind = r.at("kind").get<std::string>();
    if (kind == "double-cover-countable") {
      row.kind = RowKind::DoubleCoverCountable;
    } else if (kind == "zeta-consistency-only") {
      row.kind = RowKind::ZetaConsistencyOnly;
    } else {
      throw InputError("unknown row kind " + kind);
    }
    if (r.contains("curve")) row.curve = r.at("curve");
    if ((row.kind == RowKind::DoubleCoverCountable) != row.curve.has_value()) {
      throw InputError("row " + row.id + ": countable rows carry a curve record and only those");
    }
    for (const auto& e : r.at("exceptions")) {
      const std::string p = e.get<std::string>();
      if (p == "Eg") {
        row.exceptions.push_back(criteria::Property::Eg);
      } else if (p == "Egm1") {
        row.exceptions.push_back(criteria::Property::Egm1);
      } else {
        throw InputError("unknown property " + p);
      }
    }
    row.provenance = r.at("provenance").get<std::string>();
    ds.rows.push_back(std::move(row));
  }
  return ds;
}

const Dataset& embedded_dataset() {
  static const Dataset ds = parse_dataset(io::json::parse(embedded_tables_json()));
  return ds;
}

std::vector<std::string> sources(const Dataset& ds) {
  std::vector<std::string> out;
  for (const auto& r : ds.rows) {
    if (std::find(out.begin(), out.end(), r.source) == out.end()) out.push_back(r.source);
  }
  return out;
}

namespace {

RowReport verify_row(const TableRow& row) {
  RowReport rep{row.id, row.source, {}};
  zeta::PlaceCounts pc{row.q, row.g, {}};
  for (long long n : row.N) pc.N.emplace_back(n);

  if (row.kind == RowKind::DoubleCoverCountable) {
    try {
      const cover::DoubleCover dc = io::curve_from_json(*row.curve);
      const auto counted = cover::count_places(dc, row.g);
      rep.checks.push_back(check("counted-places", counted == row.N, "counted " + join(counted) + ", table " + join(row.N)));
      rep.checks.push_back(check("genus", dc.genus() == row.g,
                                 "Riemann-Hurwitz " + std::to_string(dc.genus()) + ", table " + std::to_string(row.g)));
      const int k = std::min(2 * row.g, 8);
      const auto direct = cover::count_places(dc, k);
      std::vector<long long> predicted;
      try {
        for (const auto& n : zeta::counts_from_lpoly(zeta::lpoly_from_counts(pc), k)) {
          predicted.push_back(static_cast<long long>(n));
        }
      } catch (const std::exception&) {
      }
      rep.checks.push_back(check("degree-bookkeeping", predicted == direct,
                                 "direct " + join(direct) + ", predicted " + join(predicted)));
    } catch (const std::exception& e) {
      rep.checks.push_back(check("counted-places", false, e.what()));
    }
  }

  std::optional<criteria::FieldData> fd;
  try {
    const zeta::LPolynomial L = zeta::lpoly_from_counts(pc);
    rep.checks.push_back(check("class-number", L.class_number() == row.h,
                               "h = " + L.class_number().str() + ", table " + std::to_string(row.h)));
    const auto adm = zeta::admissibility(pc);
    std::string detail = adm.admissible ? "admissible" : join(adm.violated);
    for (const auto& d : adm.diagnostics) detail += "; " + d;
    rep.checks.push_back(check("admissibility", adm.admissible, detail));
    fd = criteria::FieldData::from_counts(pc);
  } catch (const std::exception& e) {
    rep.checks.push_back(check("class-number", false, e.what()));
  }

  if (fd) {
    for (auto prop : {criteria::Property::Eg, criteria::Property::Egm1}) {
      const auto v = prop == criteria::Property::Eg ? criteria::evaluate_Eg(*fd) : criteria::evaluate_Egm1(*fd);
      const bool claimed = std::find(row.exceptions.begin(), row.exceptions.end(), prop) != row.exceptions.end();
      const bool listed = v.status == criteria::Status::ExceptionListed;
      rep.checks.push_back(check(std::string("exception-") + criteria::to_string(prop),
                                 claimed == listed && v.alarms.empty(),
                                 std::string(criteria::to_string(v.status)) + (claimed ? ", listed" : ", not listed")));
    }
    if (row.q == 2 && row.g == 4) {
      const BigInt n1 = fd->n(1), n2 = fd->n(2), n3 = fd->n(3), n4 = fd->n(4);
      const BigInt a2 = zeta::effective_count(fd->L, 2);
      const BigInt a4 = zeta::effective_count(fd->L, 4);
      rep.checks.push_back(check("h-from-A4-A2", a4 - 2 * a2 == fd->h,
                                 "A4 - 2A2 = " + BigInt(a4 - 2 * a2).str()));
      rep.checks.push_back(check("A2-closed-form", a2 == n1 * (n1 + 1) / 2 + n2, "A2 = " + a2.str()));
      if (n1 == 1) {
        rep.checks.push_back(check("h-closed-form", fd->h == n4 + n3 + (n2 * n2 - n2) / 2 - 1, "N1 = 1 case"));
      } else if (n1 == 0) {
        rep.checks.push_back(check("h-closed-form", fd->h == n4 + (n2 * n2 - 3 * n2) / 2, "N1 = 0 case"));
      }
    }
  }
  return rep;
}

}  // namespace

Report verify_tables(const Dataset& ds, const std::string& source) {
  Report rep;
  if (!source.empty()) {
    auto all = sources(ds);
    if (std::find(all.begin(), all.end(), source) == all.end()) throw InputError("unknown table source \"" + source + "\"");
  }
  for (const auto& row : ds.rows) {
    if (!source.empty() && row.source != source) continue;
    rep.rows.push_back(verify_row(row));
  }
  if (source.empty()) {
    std::map<std::string, int> per_source;
    std::set<std::string> ids;
    for (const auto& row : ds.rows) {
      ++per_source[row.source];
      ids.insert(row.id);
    }
    rep.global.push_back(check("row-count", ds.rows.size() == 29, std::to_string(ds.rows.size()) + " rows"));
    rep.global.push_back(check("unique-ids", ids.size() == ds.rows.size()));
    const std::map<std::string, int> expected{
        {"genus-1", 3}, {"class-number-1", 4}, {"class-number-2", 15}, {"genus-3-exceptions", 7}};
    rep.global.push_back(check("rows-per-source", per_source == expected));
    for (const auto& c : genus4_elimination()) rep.global.push_back(c);
  }
  return rep;
}

std::vector<Check> genus4_elimination() {
  std::vector<Check> out;
  for (int n4 = 0; n4 <= 3; ++n4) {
    zeta::PlaceCounts pc{2, 4, {1, 2, 3 - n4, n4}};
    const std::string tag = "genus4-elimination-N4=" + std::to_string(n4);
    try {
      const zeta::LPolynomial L = zeta::lpoly_from_counts(pc);
      const zeta::RealWeilPoly H = zeta::real_weil(L);
      const zeta::RealWeilPoly expected{{3 * n4 - 3, 11 - n4, -6, -2, 1}};
      const auto s = zeta::sqrt_sign_eval(H, 2);
      const zeta::SqrtInt closed(13 + 3 * n4, -10 - 2 * n4, 2);
      const bool ok = H == expected && s.value == closed && s.sign == -1;
      out.push_back(check(tag, ok, "H = " + H.to_string() + ", H(2√2) = " + s.value.to_string()));
    } catch (const std::exception& e) {
      out.push_back(check(tag, false, e.what()));
    }
  }
  return out;
}

}  // namespace nsdiv::tables
