// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "nsdiv/selfcheck.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace nsdiv::selfcheck {

namespace {

using zeta::BigInt;
using Rational = boost::multiprecision::cpp_rational;

constexpr int kMaxDetails = 5;

void record(SuiteResult& r, bool ok, const std::string& what) {
  if (ok) return;
  ++r.failures;
  if (static_cast<int>(r.details.size()) < kMaxDetails) r.details.push_back(what);
}

std::string describe(const zeta::PlaceCounts& pc) {
  std::string s = "q=" + std::to_string(pc.q) + " g=" + std::to_string(pc.g) + " N=(";
  for (std::size_t i = 0; i < pc.N.size(); ++i) s += (i ? "," : "") + pc.N[i].str();
  return s + ")";
}

Rational qpow(int q, int e) {
  Rational r = zeta::ipow(q, std::abs(e));
  return e >= 0 ? r : Rational(1) / r;
}

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

zeta::PlaceCounts random_admissible(std::mt19937_64& rng, int q, int g) {
  const int bmax = static_cast<int>(std::floor(2.0 * std::sqrt(static_cast<double>(q)) + 1e-9));
  std::uniform_int_distribution<int> pick(-bmax, bmax);
  for (;;) {
    std::vector<BigInt> a{1};
    for (int j = 0; j < g; ++j) a = multiply(a, {1, -pick(rng), q});
    try {
      const zeta::LPolynomial L(q, g, a);
      const auto all = zeta::counts_from_lpoly(L, 2 * g);
      zeta::PlaceCounts pc{q, g, std::vector<BigInt>(all.begin(), all.begin() + g)};
      if (zeta::admissibility(pc).admissible) return pc;
    } catch (const std::exception&) {
    }
  }
}

SuiteResult identity_suite(std::uint64_t seed, int count) {
  SuiteResult r{"identity-suite", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_q(2, 5);
  std::uniform_int_distribution<int> pick_g(1, 6);
  for (int i = 0; i < count; ++i) {
    const int q = pick_q(rng);
    const int g = pick_g(rng);
    const zeta::PlaceCounts pc = random_admissible(rng, q, g);
    ++r.instances;
    const std::string tag = describe(pc);
    const zeta::LPolynomial L = zeta::lpoly_from_counts(pc);
    const BigInt& h = L.class_number();
    std::vector<BigInt> A;
    for (int m = 0; m <= 2 * g; ++m) A.push_back(zeta::effective_count(L, m));

    for (int n = 0; n <= 2 * g - 2; ++n) {
      const int e = n + 1 - g;
      const Rational rhs = qpow(q, e) * Rational(A[2 * g - 2 - n]) + Rational(h) * (qpow(q, e) - 1) / (q - 1);
      record(r, Rational(A[n]) == rhs, tag + ": A_n functional equation fails at n=" + std::to_string(n));
    }
    if (g >= 2) {
      record(r, A[g] == h + q * A[g - 2], tag + ": A_g != h + q A_{g-2}");
      record(r, (A[g] < h * (q + 1)) == (A[g - 2] < h), tag + ": A_g < (q+1)h and A_{g-2} < h disagree");
    }
    record(r, zeta::a_gminus1_closed(L) == A[g - 1], tag + ": closed form for A_{g-1} disagrees");

    const auto N = zeta::counts_from_lpoly(L, 2 * g);
    for (int m = 0; m <= 2 * g; ++m) {
      const std::vector<BigInt> prefix(N.begin(), N.begin() + m);
      record(r, zeta::effective_count_euler(prefix, m) == A[m],
             tag + ": Euler product disagrees at m=" + std::to_string(m));
    }
    const zeta::PlaceCounts back{q, g, std::vector<BigInt>(N.begin(), N.begin() + g)};
    record(r, back.N == pc.N && zeta::lpoly_from_counts(back) == L, tag + ": counts/L round trip fails");
  }
  return r;
}

SuiteResult genus4_quartic_suite(std::uint64_t seed, int count) {
  SuiteResult r{"genus4-quartic", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_q(2, 5);
  std::uniform_int_distribution<int> pick_a(-40, 40);
  while (r.instances < count) {
    const int q = pick_q(rng);
    std::vector<BigInt> a(9);
    a[0] = 1;
    for (int j = 1; j <= 4; ++j) a[j] = pick_a(rng);
    for (int j = 0; j < 4; ++j) a[8 - j] = zeta::ipow(q, 4 - j) * a[j];
    try {
      const zeta::LPolynomial L(q, 4, a);
      ++r.instances;
      record(r, zeta::real_weil(L) == zeta::real_weil_genus4(L), "q=" + std::to_string(q) + " L=" + L.to_string());
    } catch (const std::exception&) {
    }
  }
  return r;
}

}  // namespace nsdiv::selfcheck
