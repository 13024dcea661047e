// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "nsdiv/error.hpp"
#include "nsdiv/unipoly.hpp"

using namespace nsdiv;
using namespace nsdiv::gf;

TEST_CASE("normalization and arithmetic") {
  const Field& f2 = field_make(2, 1);
  const UniPoly a = UniPoly::from_ints(f2, {1, 1, 0, 0});
  CHECK(a.degree() == 1);
  CHECK((a + a).is_zero());
  CHECK((a * a) == UniPoly::from_ints(f2, {1, 0, 1}));
  const UniPoly f = UniPoly::from_ints(f2, {1, 1, 0, 1});
  auto [qt, r] = f.divmod(a);
  CHECK(qt * a + r == f);
  CHECK(r.degree() < a.degree());
  CHECK(f.to_string() == "x^3 + x + 1");
  CHECK_THROWS_AS(f.divmod(UniPoly(f2)), InputError);
}

TEST_CASE("evaluation embeds into the point's field") {
  const Field& f2 = field_make(2, 1);
  const Field& f8 = field_make(2, 3);
  const UniPoly f = UniPoly::from_ints(f2, {1, 1, 0, 1});
  int roots = 0;
  for (std::uint32_t a = 0; a < f8.order(); ++a) roots += f.evaluate(f8.element(a)).is_zero();
  CHECK(roots == 3);
}

TEST_CASE("gcd and factorization") {
  const Field& f3 = field_make(3, 1);
  const UniPoly x = UniPoly::x(f3);
  const UniPoly p1 = x + UniPoly::constant(f3.one());
  const UniPoly p2 = x * x + UniPoly::constant(f3.one());
  const UniPoly f = p1 * p1 * p2;
  CHECK(gcd(f, p1 * p2 * x) == (p1 * p2).make_monic());
  const auto fac = factor(f * UniPoly::constant(f3.constant(2)));
  REQUIRE(fac.size() == 2);
  CHECK(multiplicity(p1, f) == 2);
  CHECK(multiplicity(p2, f) == 1);
}

TEST_CASE("monic irreducibles") {
  const Field& f2 = field_make(2, 1);
  const auto& d2 = monic_irreducibles(f2, 2);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0] == UniPoly::from_ints(f2, {1, 1, 1}));
  const auto& d3 = monic_irreducibles(f2, 3);
  REQUIRE(d3.size() == 2);
  // Constant-first lexicographic order.
  CHECK(d3[0] == UniPoly::from_ints(f2, {1, 0, 1, 1}));
  CHECK(d3[1] == UniPoly::from_ints(f2, {1, 1, 0, 1}));
  const Field& f3 = field_make(3, 1);
  const auto& lin = monic_irreducibles(f3, 1);
  REQUIRE(lin.size() == 3);
  CHECK(lin[0] == UniPoly::from_ints(f3, {0, 1}));
  CHECK(lin[1] == UniPoly::from_ints(f3, {1, 1}));
  CHECK(lin[2] == UniPoly::from_ints(f3, {2, 1}));
}

TEST_CASE("irreducible counts match the Moebius formula") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(30) == -1);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    const Field& f = field_make(p, m);
    for (int d = 1; d <= 4; ++d) {
      const auto& list = monic_irreducibles(f, d);
      CHECK(static_cast<long long>(list.size()) == count_monic_irreducibles(f.order(), d));
      for (const auto& poly : list) {
        CHECK(poly.is_monic());
        CHECK(poly.degree() == d);
        CHECK(is_irreducible(poly));
      }
    }
  }
  CHECK(count_monic_irreducibles(2, 2) == 1);
  CHECK(count_monic_irreducibles(2, 3) == 2);
  CHECK(count_monic_irreducibles(4, 2) == 6);
}

TEST_CASE("taylor shift and reversal") {
  const Field& f4 = field_make(2, 2);
  const Element w = f4.generator();
  const UniPoly f(f4, std::vector<Element>{w, f4.one(), f4.zero(), w});
  const UniPoly g = f.taylor_shift(w);
  for (std::uint32_t a = 0; a < 4; ++a) CHECK(g.evaluate(f4.element(a)) == f.evaluate(f4.element(a) + w));
  CHECK(f.reversed().degree() == 3);
  CHECK(f.reversed().coeff(0) == w);
  CHECK(UniPoly::monomial(w, 3).low_order() == 3);
}
