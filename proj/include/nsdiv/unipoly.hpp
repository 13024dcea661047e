// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nsdiv/gf.hpp"

namespace nsdiv::gf {

/// Univariate polynomial over a finite field, coefficients stored low to high
/// with no trailing zeros (the zero polynomial has no coefficients).
class UniPoly {
 public:
  explicit UniPoly(const Field& field) : field_(&field) {}
  UniPoly(const Field& field, std::vector<std::uint32_t> codes);
  UniPoly(const Field& field, const std::vector<Element>& coeffs);

  /// Coefficients given as prime-field integers, low to high.
  static UniPoly from_ints(const Field& field, const std::vector<long long>& coeffs);
  static UniPoly constant(const Element& c);
  static UniPoly monomial(const Element& c, int degree);
  static UniPoly x(const Field& field) { return monomial(field.one(), 1); }

  const Field& field() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  Element coeff(int i) const;
  Element leading() const { return coeff(degree()); }
  const std::vector<std::uint32_t>& codes() const { return c_; }

  UniPoly operator+(const UniPoly& rhs) const;
  UniPoly operator-(const UniPoly& rhs) const;
  UniPoly operator*(const UniPoly& rhs) const;
  UniPoly operator*(const Element& c) const;
  /// Euclidean quotient and remainder.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly operator/(const UniPoly& rhs) const { return divmod(rhs).first; }
  UniPoly operator%(const UniPoly& rhs) const { return divmod(rhs).second; }
  bool operator==(const UniPoly& rhs) const { return field_ == rhs.field_ && c_ == rhs.c_; }

  UniPoly make_monic() const;

  /// Evaluates at `x`, which may lie in an extension of the coefficient field.
  Element evaluate(const Element& x) const;
  /// The same polynomial with coefficients embedded into `target`.
  UniPoly mapped_to(const Field& target) const;
  /// p(alpha + s) as a polynomial in s over alpha's field.
  UniPoly taylor_shift(const Element& alpha) const;
  /// t^deg * p(1/t).
  UniPoly reversed() const;
  /// Number of leading zero coefficients (order of vanishing at 0).
  int low_order() const;
  UniPoly shifted_down(int k) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();

  const Field* field_;
  std::vector<std::uint32_t> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Irreducibility by trial division with all monic irreducibles of degree at
/// most deg/2.
bool is_irreducible(const UniPoly& f);

/// All monic irreducibles of degree d over `field`, ordered by coefficient
/// sequence compared from the constant term. Requires |field|^d <= 2^16.
const std::vector<UniPoly>& monic_irreducibles(const Field& field, int d);

/// Number of monic irreducibles of degree d over F_q, (1/d) sum mu(d/e) q^e.
long long count_monic_irreducibles(long long q, int d);

/// Moebius function.
int moebius(long long n);

/// Factorisation into monic irreducibles with multiplicities; the unit part is
/// discarded.
std::vector<std::pair<UniPoly, int>> factor(const UniPoly& f);

/// Largest k such that p^k divides f (f nonzero, p nonconstant).
int multiplicity(const UniPoly& p, const UniPoly& f);

}  // namespace nsdiv::gf
