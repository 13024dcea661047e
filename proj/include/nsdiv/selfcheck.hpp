// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nsdiv/zeta.hpp"

namespace nsdiv::selfcheck {

struct SuiteResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::vector<std::string> details;  // first few failures
  bool pass() const { return failures == 0 && instances > 0; }
};

/// Place counts of a random admissible instance: L is a product of
/// (1 - b t + q t^2) with |b| <= 2 sqrt(q), resampled until the derived
/// counts and the exact admissibility conditions hold.
zeta::PlaceCounts random_admissible(std::mt19937_64& rng, int q, int g);

/// Functional-equation identity for A_n, A_g = h + q A_{g-2}, the closed
/// form for A_{g-1}, the A_g / A_{g-2} equivalence, the Euler-product
/// oracle for m <= 2g and the counts/L round trip, over `count` instances
/// with q in {2, 3, 4, 5} and 1 <= g <= 6.
SuiteResult identity_suite(std::uint64_t seed, int count = 1000);

/// real_weil against the explicit quartic on random genus-4 L-polynomials.
SuiteResult genus4_quartic_suite(std::uint64_t seed, int count = 100);

}  // namespace nsdiv::selfcheck
