// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsdiv/zeta.hpp"

namespace nsdiv::criteria {

using zeta::BigInt;

enum class Property { Eg, Egm1 };
enum class Status { Guaranteed, ExceptionListed, Undetermined };

const char* to_string(Property p);
const char* to_string(Status s);

/// Where an exceptional field is listed.
enum class ExceptionSource { GenusOneList, EgGenusTwo, Egm1GenusTwo, Egm1GenusThree };

const char* to_string(ExceptionSource s);

struct ExceptionRecord {
  int q = 0;
  int g = 0;
  std::vector<long long> N;
  long long h = 0;
  std::string equation;
  ExceptionSource source = ExceptionSource::GenusOneList;
  Property failed = Property::Egm1;
  std::string provenance;
};

/// The 14 embedded exception records.
const std::vector<ExceptionRecord>& exception_records();

/// Every record whose fingerprint (q, g, N_1..N_g, h) matches exactly.
std::vector<ExceptionRecord> lookup_exception(int q, int g, const std::vector<BigInt>& N, const BigInt& h);

/// Invariants of one field, all derived from its place counts.
struct FieldData {
  zeta::PlaceCounts counts;
  zeta::LPolynomial L;
  BigInt h;
  std::vector<BigInt> A;  // A_0..A_g
  std::vector<BigInt> N;  // N_1..N_{2g}, extended through L

  static FieldData from_counts(const zeta::PlaceCounts& pc);

  int q() const { return counts.q; }
  int g() const { return counts.g; }
  const BigInt& n(int d) const { return N.at(static_cast<std::size_t>(d) - 1); }
  const BigInt& a(int m) const { return A.at(static_cast<std::size_t>(m)); }
};

struct FiredRule {
  std::string id;
  std::string cite;
};

struct Verdict {
  Property property = Property::Eg;
  Status status = Status::Undetermined;
  std::vector<FiredRule> rules;
  std::optional<ExceptionRecord> exception;
  /// Set when a rule fires on a listed exception, which the underlying
  /// results say cannot happen.
  std::vector<std::string> alarms;
};

/// Effective non-special divisor of degree g.
Verdict evaluate_Eg(const FieldData& fd);
/// Non-special divisor of degree g - 1.
Verdict evaluate_Egm1(const FieldData& fd);

/// Degree g - 1 certificate for a step of the char-2 tower over F_q with
/// genus g and N1 rational places.
Verdict certify_tower_step(long long q, long long g, long long n1);

}  // namespace nsdiv::criteria
