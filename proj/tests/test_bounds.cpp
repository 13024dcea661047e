// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "nsdiv/bounds.hpp"
#include "nsdiv/error.hpp"

using namespace nsdiv;
using namespace nsdiv::bounds;

TEST_CASE("exact values") {
  CHECK(exact(mu_bound_new(16, 1).bound) == "51/13");
  CHECK(exact(mu_bound_new(16, 13).bound) == "51");
  CHECK(exact(mu_bound_new(32, 1).bound) == "99/29");
  CHECK(exact(mu_bound_gap2003(16, 1).bound) == "57/11");
  CHECK(exact(mu_bound_gap2003(16, 11).bound) == "57");
  CHECK(exact(mu_bound_gap2003(16, 13).bound) == "741/11");
  CHECK(mu_bound_gap2003(64, 1).bound == Rational(3 * 67, 59));
  CHECK(exact(mu_bound_remark22(16, 1).bound) == "51/13");
  CHECK(mu_bound_remark22(1024, 1).bound == Rational(3 * 1025, 1021));
  CHECK(decimal(mu_bound_new(16, 1).bound) == "3.92308");
  CHECK(decimal(mu_bound_gap2003(16, 1).bound) == "5.18182");
}

TEST_CASE("structure") {
  for (long long q = 16; q <= 1024; q *= 2) {
    for (long long n : {1, 2, 7, 100}) {
      const auto a = mu_bound_new(q, n);
      const auto b = mu_bound_gap2003(q, n);
      CHECK(a.bound < b.bound);
      CHECK(a.bound == a.coefficient * n);
      CHECK(a.coefficient == Rational(3 * (q + 1), q - 3));
      CHECK(mu_bound_remark22(q, n).bound == a.bound);
    }
    if (q < 1024) {
      CHECK(mu_bound_new(2 * q, 1).coefficient < mu_bound_new(q, 1).coefficient);
      CHECK(mu_bound_gap2003(2 * q, 1).coefficient < mu_bound_gap2003(q, 1).coefficient);
    }
    CHECK(mu_bound_new(q, 1).coefficient > 3);
  }
}

TEST_CASE("domain") {
  CHECK_THROWS_AS(mu_bound_new(8, 1), InputError);
  CHECK_THROWS_AS(mu_bound_new(24, 1), InputError);
  CHECK_THROWS_AS(mu_bound_gap2003(16, 0), InputError);
  CHECK_THROWS_AS(mu_bound_remark22(17, 1), InputError);
}
