// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "nsdiv/io.hpp"

#include <fstream>
#include <limits>

#include "nsdiv/error.hpp"

namespace nsdiv::io {

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return json(static_cast<long long>(v));
  }
  return json(v.str());
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError("not an integer: " + j.dump());
    }
  }
  throw InputError("expected an integer, got " + j.dump());
}

json to_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

namespace {

const json& field_of(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field_of(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<BigInt> int_array(const json& j, const char* key) {
  const json& v = field_of(j, key);
  if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  std::vector<BigInt> out;
  for (const auto& x : v) out.push_back(big_from_json(x));
  return out;
}

}  // namespace

zeta::PlaceCounts counts_from_json(const json& j) {
  zeta::PlaceCounts pc;
  pc.q = int_field(j, "q");
  pc.g = int_field(j, "g");
  pc.N = int_array(j, "N");
  return pc;
}

json to_json(const zeta::PlaceCounts& pc) { return json{{"q", pc.q}, {"g", pc.g}, {"N", to_json(pc.N)}}; }

zeta::LPolynomial lpoly_from_json(const json& j) {
  return zeta::LPolynomial(int_field(j, "q"), int_field(j, "g"), int_array(j, "a"));
}

json to_json(const zeta::LPolynomial& L) { return json{{"q", L.q()}, {"g", L.g()}, {"a", to_json(L.a())}}; }

const gf::Field& base_field_for(int q) {
  for (int p : {2, 3}) {
    int r = 0;
    long long v = 1;
    while (v < q) {
      v *= p;
      ++r;
    }
    if (v == q && r >= 1) return gf::Field::make(p, r);
  }
  throw InputError("curves are supported over F_q with q a power of 2 or 3, got q = " + std::to_string(q));
}

gf::Element coefficient_from_json(const gf::Field& field, const json& j) {
  if (j.is_number_integer()) return field.constant(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (static_cast<int>(s.size()) != field.degree()) {
      throw InputError("coefficient \"" + s + "\" must have " + std::to_string(field.degree()) + " digits");
    }
    std::vector<int> coords(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      int d = s[i] - '0';
      if (d < 0 || d >= field.characteristic()) throw InputError("bad digit in coefficient \"" + s + "\"");
      coords[s.size() - 1 - i] = d;
    }
    return field.from_coordinates(coords);
  }
  throw InputError("coefficient must be an integer or a digit string, got " + j.dump());
}

cover::DoubleCover curve_from_json(const json& j) {
  const gf::Field& field = base_field_for(int_field(j, "q"));
  const json& kind_j = field_of(j, "kind");
  if (!kind_j.is_string()) throw InputError("field \"kind\" must be a string");
  const std::string kind_s = kind_j.get<std::string>();
  cover::CoverKind kind;
  if (kind_s == "artin-schreier") {
    kind = cover::CoverKind::ArtinSchreier2;
  } else if (kind_s == "kummer") {
    kind = cover::CoverKind::Kummer2;
  } else {
    throw InputError("unknown curve kind \"" + kind_s + "\"");
  }
  auto poly = [&](const char* key, bool optional) {
    if (optional && !j.contains(key)) return gf::UniPoly::constant(field.one());
    const json& arr = field_of(j, key);
    if (!arr.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
    std::vector<gf::Element> coeffs;
    for (const auto& c : arr) coeffs.push_back(coefficient_from_json(field, c));
    return gf::UniPoly(field, coeffs);
  };
  return cover::DoubleCover(kind, cover::RationalFunction(poly("num", false), poly("den", true)));
}

json to_json(const criteria::ExceptionRecord& rec) {
  return json{{"q", rec.q},
              {"g", rec.g},
              {"N", rec.N},
              {"h", rec.h},
              {"equation", rec.equation},
              {"source", criteria::to_string(rec.source)},
              {"property", criteria::to_string(rec.failed)},
              {"provenance", rec.provenance},
              {"note", "matches a listed exceptional field"}};
}

json to_json(const criteria::Verdict& v) {
  json rules = json::array();
  for (const auto& r : v.rules) rules.push_back(json{{"id", r.id}, {"cite", r.cite}});
  json out{{"property", criteria::to_string(v.property)},
           {"status", criteria::to_string(v.status)},
           {"rules", rules},
           {"exception", v.exception ? to_json(*v.exception) : json(nullptr)}};
  if (!v.alarms.empty()) out["alarms"] = v.alarms;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace nsdiv::io
