// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"

#include "nsdiv/error.hpp"
#include "nsdiv/selfcheck.hpp"
#include "nsdiv/zeta.hpp"

using namespace nsdiv;
using namespace nsdiv::zeta;
using Rational = boost::multiprecision::cpp_rational;

namespace {

PlaceCounts pc(int q, int g, std::vector<long long> n) { return PlaceCounts{q, g, std::vector<BigInt>(n.begin(), n.end())}; }

std::vector<BigInt> B(std::vector<long long> v) { return std::vector<BigInt>(v.begin(), v.end()); }

RealWeilPoly H(std::vector<long long> c) { return RealWeilPoly{B(std::move(c))}; }

// (-1)^g H(-T): the polynomial whose roots are the negated roots of H.
RealWeilPoly reflect(const RealWeilPoly& h) {
  RealWeilPoly out = h;
  const int g = h.degree();
  for (int k = 0; k <= g; ++k) {
    if ((g - k) % 2) out.coeffs[k] = -out.coeffs[k];
  }
  return out;
}

}  // namespace

TEST_CASE("power sums") {
  CHECK(power_sums_from_counts(pc(2, 2, {1, 2})) == B({2, 0}));
  CHECK(power_sums_from_counts(pc(2, 1, {3})) == B({0}));
  for (int q : {2, 3, 4, 5, 7}) CHECK(power_sums_from_counts(pc(q, 1, {q + 1}))[0] == 0);
}

TEST_CASE("L-polynomials from counts") {
  const LPolynomial L = lpoly_from_counts(pc(2, 2, {1, 2}));
  CHECK(L.a() == B({1, -2, 2, -4, 4}));
  CHECK(L.class_number() == 1);
  CHECK(L.to_string() == "1 - 2*t + 2*t^2 - 4*t^3 + 4*t^4");
  const LPolynomial L3 = lpoly_from_counts(pc(2, 3, {0, 0, 1}));
  CHECK(L3.a() == B({1, -3, 2, 1, 4, -12, 8}));
  CHECK(L3.class_number() == 1);
  CHECK(lpoly_from_counts(pc(2, 3, {1, 2, 2})).class_number() == 3);
  CHECK(lpoly_from_counts(pc(2, 4, {0, 0, 4, 2})).class_number() == 2);
  CHECK(lpoly_from_counts(pc(2, 1, {3})).class_number() == 3);
  CHECK(lpoly_from_counts(pc(2, 4, {0, 1, 3, 3})).class_number() == 2);
}

TEST_CASE("explicit coefficient formulas agree with the recursion") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int q = 2 + static_cast<int>(rng() % 4);
    const int g = 4 + static_cast<int>(rng() % 2);
    const PlaceCounts c = selfcheck::random_admissible(rng, q, g);
    const LPolynomial L = lpoly_from_counts(c);
    const Rational n1(c.N[0]), n2(c.N[1]), n3(c.N[2]), n4(c.N[3]), Q(q);
    const Rational a1 = n1 - (Q + 1);
    const Rational a2 = (n1 * n1 - (2 * Q + 1) * n1) / 2 + n2 + Q;
    const Rational a3 = (n1 * n1 * n1 - 3 * Q * n1 * n1 + (3 * Q - 1) * n1) / 6 - (Q + 1) * n2 + n1 * n2 + n3;
    const Rational a4 = (n1 * n1 * n1 * n1 + (2 - 4 * Q) * n1 * n1 * n1 - n1 * n1 - (2 - 4 * Q) * n1) / 24 + n1 * n3 + n4 +
                        ((1 + 2 * Q) * n2 + n2 * n2 - (1 + 2 * Q) * n1 * n2 + n1 * n1 * n2) / 2 - (Q + 1) * n3;
    CHECK(Rational(L.coeff(1)) == a1);
    CHECK(Rational(L.coeff(2)) == a2);
    CHECK(Rational(L.coeff(3)) == a3);
    CHECK(Rational(L.coeff(4)) == a4);
  }
}

TEST_CASE("LPolynomial validation") {
  CHECK_THROWS_AS(LPolynomial(2, 1, B({1, 0})), InputError);
  CHECK_THROWS_AS(LPolynomial(2, 1, B({2, 0, 2})), InputError);
  CHECK_THROWS_AS(LPolynomial(2, 1, B({1, 0, 3})), InputError);
  CHECK_THROWS_AS(LPolynomial(6, 1, B({1, 0, 6})), InputError);
  CHECK_THROWS_AS(LPolynomial(2, 1, B({1, -4, 2})), InadmissibleError);
  CHECK_THROWS_AS(lpoly_from_counts(pc(2, 1, {7})), InadmissibleError);
  CHECK_THROWS_AS(lpoly_from_counts(pc(2, 2, {1})), InputError);
  CHECK_THROWS_AS(lpoly_from_counts(pc(2, 1, {-1})), InputError);
  CHECK_THROWS_AS(lpoly_from_counts(pc(6, 1, {1})), InputError);
  CHECK_THROWS_AS(lpoly_from_counts(pc(2, 0, {})), InputError);
}

TEST_CASE("counts from L") {
  const LPolynomial L(2, 1, B({1, 0, 2}));
  CHECK(counts_from_lpoly(L, 2) == B({3, 3}));
  CHECK(counts_from_lpoly(maximal_restriction_lpoly(2, 3), 1) == B({3}));
  for (int q : {2, 3, 4, 5}) {
    for (int g = 1; g <= 4; ++g) CHECK(counts_from_lpoly(maximal_restriction_lpoly(q, g), 1)[0] == q + 1);
  }
  const auto c = pc(2, 2, {1, 2});
  CHECK(counts_from_lpoly(lpoly_from_counts(c), 2) == c.N);
  CHECK_THROWS_AS(counts_from_lpoly(L, 0), InputError);
}

TEST_CASE("effective divisor counts") {
  const LPolynomial L = lpoly_from_counts(pc(2, 2, {1, 2}));
  CHECK(effective_count(L, 2) == 3);
  CHECK(effective_count(L, 0) == 1);
  CHECK(effective_count(L, 1) == 1);
  const LPolynomial L3 = lpoly_from_counts(pc(2, 3, {0, 0, 1}));
  CHECK(effective_count(L3, 2) == 0);
  CHECK(effective_count_euler(B({1, 2}), 2) == 3);
  CHECK(effective_count_euler(B({0, 0, 0}), 3) == 0);
  CHECK(effective_count_euler(B({3}), 1) == 3);
  CHECK(effective_count_euler(B({}), 0) == 1);
  CHECK_THROWS_AS(effective_count_euler(B({1}), 2), InputError);
}

TEST_CASE("closed form for A_{g-1}") {
  CHECK(a_gminus1_closed(lpoly_from_counts(pc(2, 2, {1, 2}))) == 1);
  CHECK(a_gminus1_closed(lpoly_from_counts(pc(2, 1, {3}))) == 1);
  CHECK(a_gminus1_closed(lpoly_from_counts(pc(2, 3, {0, 0, 1}))) == 0);
}

TEST_CASE("real Weil polynomial") {
  CHECK(real_weil(lpoly_from_counts(pc(2, 4, {1, 2, 3, 0}))) == H({-3, 11, -6, -2, 1}));
  const RealWeilPoly h2 = real_weil(lpoly_from_counts(pc(2, 2, {1, 2})));
  CHECK(h2 == H({-2, -2, 1}));
  CHECK(reflect(h2) == H({-2, 2, 1}));
  const RealWeilPoly h1 = real_weil(lpoly_from_counts(pc(2, 1, {1})));
  CHECK(h1 == H({-2, 1}));
  CHECK(reflect(h1) == H({2, 1}));
  CHECK(h2.to_string() == "T^2 - 2T - 2");
  CHECK_THROWS_AS(real_weil_genus4(lpoly_from_counts(pc(2, 2, {1, 2}))), InputError);
}

TEST_CASE("real Weil polynomial roots are the traces 2 sqrt(q) cos theta") {
  // L = (1 - b1 t + q t^2)(1 - b2 t + q t^2) has H = (T - b1)(T - b2).
  for (int q : {2, 3, 5}) {
    for (int b1 = -2; b1 <= 2; ++b1) {
      for (int b2 = -2; b2 <= 2; ++b2) {
        const std::vector<BigInt> a = {1, -(b1 + b2), 2 * q + b1 * b2, BigInt(-q) * (b1 + b2), BigInt(q) * q};
        const LPolynomial L(q, 2, a);
        CHECK(real_weil(L) == H({b1 * b2, -(b1 + b2), 1}));
      }
    }
  }
}

TEST_CASE("exact evaluation at 2 sqrt q") {
  auto s = sqrt_sign_eval(H({-3, 11, -6, -2, 1}), 2);
  CHECK(s.value == SqrtInt(13, -10, 2));
  CHECK(s.sign == -1);
  CHECK(s.value.to_string() == "13 - 10√2");
  s = sqrt_sign_eval(H({2, 1}), 2);
  CHECK(s.value == SqrtInt(2, 2, 2));
  CHECK(s.sign == 1);
  s = sqrt_sign_eval(H({-8, 0, 1}), 2);
  CHECK(s.value == SqrtInt(0, 0, 2));
  CHECK(s.sign == 0);
  s = sqrt_sign_eval(H({-5, 1}), 4);
  CHECK(s.value == SqrtInt::integer(-1, 1));
  CHECK(s.sign == -1);
  s = sqrt_sign_eval(H({0, 1}), 8, true);
  CHECK(s.value == SqrtInt(0, -4, 2));
  for (int n4 = 0; n4 <= 3; ++n4) {
    const auto v = sqrt_sign_eval(H({3 * n4 - 3, 11 - n4, -6, -2, 1}), 2);
    CHECK(v.value == SqrtInt(13 + 3 * n4, -10 - 2 * n4, 2));
    CHECK(v.sign == -1);
  }
}

TEST_CASE("SqrtInt arithmetic") {
  CHECK(split_square(12) == std::pair<long long, long long>{2, 3});
  CHECK(split_square(16) == std::pair<long long, long long>{4, 1});
  CHECK(SqrtInt::sqrt_of(8) == SqrtInt(0, 2, 2));
  const SqrtInt r = SqrtInt::sqrt_of(2);
  CHECK(r * r == SqrtInt::integer(2, 2));
  CHECK((r - SqrtInt::integer(1, 2)).pow(2) == SqrtInt(3, -2, 2));
  CHECK(SqrtInt(3, -2, 2).sign() == 1);
  CHECK(SqrtInt(-3, 2, 2).sign() == -1);
  CHECK(SqrtInt(7, -5, 2).sign() == -1);
  CHECK(SqrtInt(99, -70, 2).sign() == 1);
  CHECK(SqrtInt(0, -1, 3).to_string() == "-√3");
}

TEST_CASE("admissibility") {
  auto rep = admissibility(pc(2, 4, {1, 2, 3, 0}));
  CHECK_FALSE(rep.admissible);
  CHECK(std::find(rep.violated.begin(), rep.violated.end(), "real-weil-upper") != rep.violated.end());
  rep = admissibility(pc(2, 2, {1, 2}));
  CHECK(rep.admissible);
  CHECK(rep.violated.empty());
  rep = admissibility(pc(2, 1, {7}));
  CHECK_FALSE(rep.admissible);
  REQUIRE_FALSE(rep.violated.empty());
  CHECK(rep.violated.front() == "hasse-weil");
  CHECK_THROWS_AS(admissibility(pc(2, 2, {1})), InputError);
  // N_2 = -1 is structurally invalid; N = (0, 0) at q = 2, g = 2 gives a negative N_3.
  rep = admissibility(pc(2, 2, {0, 0}));
  CHECK_FALSE(rep.admissible);
}

TEST_CASE("effective inequality margin and root moduli on real curves") {
  for (const auto& c : {pc(2, 2, {1, 2}), pc(2, 3, {0, 0, 1}), pc(3, 2, {0, 5}), pc(2, 4, {0, 1, 3, 3}),
                        pc(2, 1, {3})}) {
    const LPolynomial L = lpoly_from_counts(c);
    CHECK(effective_inequality_margin(L).sign() >= 0);
    CHECK(root_modulus_deviation(L) < 1e-6);
  }
  CHECK(root_modulus_deviation(maximal_restriction_lpoly(2, 4)) < 1e-6);
}

TEST_CASE("Euler product oracle on random instances") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const PlaceCounts c = selfcheck::random_admissible(rng, 2 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 6));
    const LPolynomial L = lpoly_from_counts(c);
    const auto N = counts_from_lpoly(L, 2 * c.g);
    for (int m = 0; m <= 2 * c.g; ++m) {
      CHECK(effective_count(L, m) == effective_count_euler(std::vector<BigInt>(N.begin(), N.begin() + m), m));
    }
  }
}

TEST_CASE("randomized suites") {
  const auto a = selfcheck::identity_suite(2024, 200);
  CHECK(a.instances == 200);
  CHECK(a.failures == 0);
  const auto b = selfcheck::genus4_quartic_suite(2024, 50);
  CHECK(b.instances == 50);
  CHECK(b.failures == 0);
  CHECK(selfcheck::identity_suite(9, 20).details == selfcheck::identity_suite(9, 20).details);
}

TEST_CASE("prime powers") {
  CHECK(is_prime_power(2));
  CHECK(is_prime_power(64));
  CHECK(is_prime_power(49));
  CHECK_FALSE(is_prime_power(6));
  CHECK_FALSE(is_prime_power(1));
  CHECK(ipow(2, 10) == 1024);
}
