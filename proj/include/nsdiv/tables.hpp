// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsdiv/criteria.hpp"
#include "nsdiv/io.hpp"

namespace nsdiv::tables {

enum class RowKind { DoubleCoverCountable, ZetaConsistencyOnly };

struct TableRow {
  std::string id;
  std::string source;
  int q = 0;
  int g = 0;
  std::string equation;
  std::vector<long long> N;
  long long h = 0;
  RowKind kind = RowKind::ZetaConsistencyOnly;
  std::optional<io::json> curve;
  std::vector<criteria::Property> exceptions;
  std::string provenance;
};

struct Dataset {
  int version = 0;
  std::vector<TableRow> rows;
};

/// The dataset compiled into the library.
const Dataset& embedded_dataset();
Dataset parse_dataset(const io::json& j);

/// Row sources in the dataset.
std::vector<std::string> sources(const Dataset& ds);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RowReport {
  std::string id;
  std::string source;
  std::vector<Check> checks;
  bool pass() const;
};

struct Report {
  std::vector<RowReport> rows;
  std::vector<Check> global;
  bool pass() const;
};

/// Per row: place counting and genus for double covers, class number and
/// admissibility from the counts, exception flags from the criteria engine,
/// and the genus-4 class number identities for q = 2. An empty `source`
/// selects every row.
Report verify_tables(const Dataset& ds, const std::string& source = "");

/// The q = 2, N = (1, 2, 3 - N4, N4) elimination at genus 4.
std::vector<Check> genus4_elimination();

}  // namespace nsdiv::tables
