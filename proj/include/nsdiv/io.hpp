// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "nsdiv/criteria.hpp"
#include "nsdiv/doublecover.hpp"
#include "nsdiv/zeta.hpp"

namespace nsdiv::io {

using nlohmann::json;
using zeta::BigInt;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json to_json(const BigInt& v);
BigInt big_from_json(const json& j);

json to_json(const std::vector<BigInt>& v);

/// { "q": int, "g": int, "N": [ints] }
zeta::PlaceCounts counts_from_json(const json& j);
json to_json(const zeta::PlaceCounts& pc);

/// { "q": int, "g": int, "a": [ints] }
zeta::LPolynomial lpoly_from_json(const json& j);
json to_json(const zeta::LPolynomial& L);

/// { "q": int, "kind": "artin-schreier" | "kummer", "num": [...], "den": [...] }.
/// Coefficients are prime-field integers or, for q = p^r with r > 1, strings
/// of r base-p digits written most significant first ("10" is the generator
/// of F_4).
cover::DoubleCover curve_from_json(const json& j);

/// Parses a coefficient of F_q.
gf::Element coefficient_from_json(const gf::Field& field, const json& j);

/// F_q for q a power of 2 or 3.
const gf::Field& base_field_for(int q);

json to_json(const criteria::Verdict& v);
json to_json(const criteria::ExceptionRecord& rec);

json read_json_file(const std::string& path);

}  // namespace nsdiv::io
