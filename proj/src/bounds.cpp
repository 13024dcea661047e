// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "nsdiv/bounds.hpp"

#include <cstdio>
#include <sstream>

#include "nsdiv/error.hpp"

namespace nsdiv::bounds {

namespace {

void check(long long q, long long n) {
  if (q < 16 || (q & (q - 1)) != 0) {
    throw InputError("bounds need q = 2^r >= 16, got " + std::to_string(q));
  }
  if (n < 1) throw InputError("n must be positive");
}

BoundResult make(long long q, long long n, Rational coefficient, std::string formula) {
  BoundResult r;
  r.q = q;
  r.n = n;
  r.coefficient = std::move(coefficient);
  r.bound = r.coefficient * n;
  r.formula = std::move(formula);
  return r;
}

constexpr long long kCharacteristic = 2;

}  // namespace

BoundResult mu_bound_new(long long q, long long n) {
  check(q, n);
  return make(q, n, 3 * (1 + Rational(4, q - 3)), "3(1 + 4/(q-3))n");
}

BoundResult mu_bound_gap2003(long long q, long long n) {
  check(q, n);
  return make(q, n, 3 * (1 + Rational(4 * kCharacteristic, q - 5)), "3(1 + 4p/(q-5))n");
}

BoundResult mu_bound_remark22(long long q, long long n) {
  check(q, n);
  return make(q, n, 3 * (1 + Rational(2 * kCharacteristic, q - 3)), "3(1 + 2p/(q-3))n");
}

std::string exact(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string decimal(const Rational& r, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, r.convert_to<double>());
  return buf;
}

}  // namespace nsdiv::bounds
