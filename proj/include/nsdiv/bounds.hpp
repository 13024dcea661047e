// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nsdiv::bounds {

using Rational = boost::multiprecision::cpp_rational;

/// An upper bound on the bilinear complexity mu_q(n) of multiplication in
/// F_{q^n} over F_q.
struct BoundResult {
  long long q = 0;
  long long n = 0;
  Rational bound;        // coefficient * n
  Rational coefficient;  // asymptotic constant bound / n
  std::string formula;
};

/// 3 (1 + 4/(q - 3)) n, q = 2^r >= 16.
BoundResult mu_bound_new(long long q, long long n);
/// 3 (1 + 4p/(q - 5)) n with p = 2.
BoundResult mu_bound_gap2003(long long q, long long n);
/// 3 (1 + 2p/(q - 3)) n with p = 2.
BoundResult mu_bound_remark22(long long q, long long n);

/// Rational as "p/q" (or "p" when integral).
std::string exact(const Rational& r);
/// Decimal rendering with `digits` significant digits.
std::string decimal(const Rational& r, int digits = 6);

}  // namespace nsdiv::bounds
