// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nsdiv::zeta {

using BigInt = boost::multiprecision::cpp_int;

/// (q, g, N_1..N_g): place counts of a function field by degree.
struct PlaceCounts {
  int q = 0;
  int g = 0;
  std::vector<BigInt> N;  // N[0] = N_1

  /// Structural validation plus the Hasse-Weil bound; throws InputError or
  /// InadmissibleError.
  void validate() const;
  const BigInt& count(int degree) const { return N.at(static_cast<std::size_t>(degree) - 1); }
};

/// Numerator L(t) = a_0 + a_1 t + ... + a_{2g} t^{2g} of the zeta function.
class LPolynomial {
 public:
  /// Validates a_0 = 1, the functional equation and h >= 1.
  LPolynomial(int q, int g, std::vector<BigInt> a);

  int q() const { return q_; }
  int g() const { return g_; }
  const std::vector<BigInt>& a() const { return a_; }
  /// a_i with a_i = 0 outside 0..2g.
  BigInt coeff(int i) const;
  const BigInt& class_number() const { return h_; }

  /// Power sums S_k of the reciprocal roots, k >= 1.
  BigInt power_sum(int k) const;

  bool operator==(const LPolynomial& rhs) const { return q_ == rhs.q_ && g_ == rhs.g_ && a_ == rhs.a_; }

  std::string to_string() const;

 private:
  int q_;
  int g_;
  std::vector<BigInt> a_;
  BigInt h_;
};

/// Monic integer polynomial of degree g, coefficients low to high.
struct RealWeilPoly {
  std::vector<BigInt> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string to_string(const std::string& var = "T") const;
  bool operator==(const RealWeilPoly&) const = default;
};

/// u + v sqrt(d) for a square-free d >= 1 (d = 1 means plain integers).
class SqrtInt {
 public:
  SqrtInt() = default;
  SqrtInt(BigInt u, BigInt v, long long radicand);
  static SqrtInt integer(BigInt u, long long radicand) { return SqrtInt(std::move(u), 0, radicand); }
  /// sqrt(q) = s sqrt(q') with q' square-free.
  static SqrtInt sqrt_of(long long q);

  const BigInt& u() const { return u_; }
  const BigInt& v() const { return v_; }
  long long radicand() const { return d_; }

  SqrtInt operator+(const SqrtInt& rhs) const;
  SqrtInt operator-(const SqrtInt& rhs) const;
  SqrtInt operator*(const SqrtInt& rhs) const;
  SqrtInt operator-() const { return SqrtInt(-u_, -v_, d_); }
  SqrtInt pow(unsigned e) const;
  bool operator==(const SqrtInt& rhs) const { return u_ == rhs.u_ && v_ == rhs.v_ && d_ == rhs.d_; }

  /// Exact sign of u + v sqrt(d).
  int sign() const;

  /// e.g. "13 - 10√2".
  std::string to_string() const;

 private:
  BigInt u_ = 0;
  BigInt v_ = 0;
  long long d_ = 1;
};

/// Writes q = s^2 q' with q' square-free; returns {s, q'}.
std::pair<long long, long long> split_square(long long q);

/// S_k = q^k + 1 - sum_{d | k} d N_d for k = 1..g.
std::vector<BigInt> power_sums_from_counts(const PlaceCounts& pc);

/// Newton recursion for a_1..a_g, functional equation for the rest.
LPolynomial lpoly_from_counts(const PlaceCounts& pc);

/// N_1..N_k recovered from L via power sums and Moebius inversion.
std::vector<BigInt> counts_from_lpoly(const LPolynomial& L, int max_degree);

inline BigInt class_number(const LPolynomial& L) { return L.class_number(); }

/// A_m = sum_{i <= m} (q^{m-i+1} - 1)/(q - 1) a_i.
BigInt effective_count(const LPolynomial& L, int m);

/// A_m = [t^m] prod_{d <= m} (1 - t^d)^{-N_d}; `counts` holds N_1..N_m.
BigInt effective_count_euler(const std::vector<BigInt>& counts, int m);

/// A_{g-1} = (h - (a_g + 2 sum_{i<g} a_i)) / (q - 1).
BigInt a_gminus1_closed(const LPolynomial& L);

/// a_g + 2 sum_{i<g} a_i.
BigInt gminus1_sign_quantity(const LPolynomial& L);

/// Writes L(t)/t^g = M(1/t + q t) and returns H = M, whose roots are the
/// 2 sqrt(q) cos(theta_j) of the reciprocal roots of L. A function field has
/// H(2 sqrt q) >= 0 and (-1)^g H(-2 sqrt q) >= 0.
RealWeilPoly real_weil(const LPolynomial& L);

/// The explicit genus-4 quartic
/// T^4 + a1 T^3 + (a2 - 4q) T^2 + (a3 - 3q a1) T + (a4 - 2q a2 + 2q^2).
RealWeilPoly real_weil_genus4(const LPolynomial& L);

struct SignedValue {
  SqrtInt value;
  int sign = 0;
};

/// H(2 sqrt q) exactly (or H(-2 sqrt q) when `negative`).
SignedValue sqrt_sign_eval(const RealWeilPoly& H, int q, bool negative = false);

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<std::string> violated;      // exact necessary conditions that fail
  std::vector<std::string> diagnostics;   // numeric screening notes
};

/// Exact necessary conditions for (q, g, N) to be the counts of a function
/// field: structure, Hasse-Weil, H(2 sqrt q) >= 0, (-1)^g H(-2 sqrt q) >= 0,
/// the effective-divisor inequality, h >= 1, and integral nonnegative N_d and
/// A_m for d, m <= 2g. A numeric root-modulus screen is reported separately.
AdmissibilityReport admissibility(const PlaceCounts& pc);

/// Margin h - (sqrt q - 1)^2 (2 sum_{n<=g-2} q^{(g-1-n)/2} A_n + A_{g-1});
/// nonnegative for every function field.
SqrtInt effective_inequality_margin(const LPolynomial& L);

/// Largest deviation | |root| - q^{-1/2} | over the roots of the square-free
/// part of L, computed numerically.
double root_modulus_deviation(const LPolynomial& L);

/// L(t) = (1 + q t^2)^g.
LPolynomial maximal_restriction_lpoly(int q, int g);

BigInt ipow(long long base, int exp);

bool is_prime_power(long long q);

}  // namespace nsdiv::zeta
