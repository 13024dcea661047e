// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "nsdiv/criteria.hpp"

#include "nsdiv/error.hpp"

namespace nsdiv::criteria {

const char* to_string(Property p) { return p == Property::Eg ? "Eg" : "Egm1"; }

const char* to_string(Status s) {
  switch (s) {
    case Status::Guaranteed:
      return "Guaranteed";
    case Status::ExceptionListed:
      return "ExceptionListed";
    case Status::Undetermined:
      return "Undetermined";
  }
  return "?";
}

const char* to_string(ExceptionSource s) {
  switch (s) {
    case ExceptionSource::GenusOneList:
      return "genus-1-class-number-one";
    case ExceptionSource::EgGenusTwo:
      return "genus-2-degree-g";
    case ExceptionSource::Egm1GenusTwo:
      return "genus-2-degree-g-minus-1";
    case ExceptionSource::Egm1GenusThree:
      return "genus-3-degree-g-minus-1";
  }
  return "?";
}

const std::vector<ExceptionRecord>& exception_records() {
  using S = ExceptionSource;
  using P = Property;
  static const std::string kGenusOne =
      "elliptic class number one fields; no non-special divisor of degree 0";
  static const std::string kEgTwo =
      "the two genus-2 fields with h = 1; every degree-2 divisor is special";
  static const std::string kEgm1Two =
      "genus-2 fields with N1 = h in {1, 2} whose degree-1 effective divisors cover every class";
  static const std::string kEgm1Three =
      "complete list of q = 2, g = 3 fields without a non-special divisor of degree 2 (stated without proof)";
  static const std::vector<ExceptionRecord> records = {
      {2, 1, {1}, 1, "y^2 + y + (x^3 + x + 1) = 0", S::GenusOneList, P::Egm1, kGenusOne},
      {3, 1, {1}, 1, "y^2 - (x^3 + 2x + 2) = 0", S::GenusOneList, P::Egm1, kGenusOne},
      {4, 1, {1}, 1, "y^2 + y + (x^3 + a) = 0, F_4 = F_2(a)", S::GenusOneList, P::Egm1, kGenusOne},
      {2, 2, {1, 2}, 1, "y^2 + y + (x^5 + x^3 + 1) = 0", S::EgGenusTwo, P::Eg, kEgTwo},
      {2, 2, {0, 3}, 1, "y^2 + y + (x^3 + x^2 + 1)/(x^3 + x + 1) = 0", S::EgGenusTwo, P::Eg, kEgTwo},
      {2, 2, {1, 2}, 1, "y^2 + y = x^5 + x^3 + 1", S::Egm1GenusTwo, P::Egm1, kEgm1Two},
      {2, 2, {2, 1}, 2, "y^2 + y = (x^4 + x + 1)/x", S::Egm1GenusTwo, P::Egm1, kEgm1Two},
      {2, 3, {0, 1, 1}, 1, "y^4 + xy^3 + (x + 1)y + (x^4 + x + 1) = 0", S::Egm1GenusThree, P::Egm1, kEgm1Three},
      {2, 3, {0, 4, 2}, 2, "y^2 + y + (x^6 + x + 1)/(x^2 + x + 1)^3 = 0", S::Egm1GenusThree, P::Egm1, kEgm1Three},
      {2, 3, {0, 2, 2}, 2, "y^4 + xy^3 + (x + 1)y + (x^4 + x^2 + 1) = 0", S::Egm1GenusThree, P::Egm1, kEgm1Three},
      {2, 3, {1, 1, 2}, 2, "y^3 + y + (x^4 + x^3 + 1) = 0", S::Egm1GenusThree, P::Egm1, kEgm1Three},
      {2, 3, {1, 2, 2}, 3, "y^3 + x^2y^2 + (x^3 + 1)y + (x^4 + x^3 + 1) = 0", S::Egm1GenusThree, P::Egm1, kEgm1Three},
      {2, 3, {2, 0, 3}, 3, "y^3 + x^2y + (x^4 + x^3 + x) = 0", S::Egm1GenusThree, P::Egm1, kEgm1Three},
      {2, 3, {1, 3, 2}, 4, "y^3 + (x^2 + x + 1)y + (x^4 + x + 1) = 0", S::Egm1GenusThree, P::Egm1, kEgm1Three},
  };
  return records;
}

std::vector<ExceptionRecord> lookup_exception(int q, int g, const std::vector<BigInt>& N, const BigInt& h) {
  std::vector<ExceptionRecord> out;
  for (const auto& rec : exception_records()) {
    if (rec.q != q || rec.g != g || BigInt(rec.h) != h || rec.N.size() != N.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < N.size(); ++i) same = same && BigInt(rec.N[i]) == N[i];
    if (same) out.push_back(rec);
  }
  return out;
}

FieldData FieldData::from_counts(const zeta::PlaceCounts& pc) {
  zeta::LPolynomial L = zeta::lpoly_from_counts(pc);
  std::vector<BigInt> A;
  for (int m = 0; m <= pc.g; ++m) A.push_back(zeta::effective_count(L, m));
  std::vector<BigInt> N = zeta::counts_from_lpoly(L, 2 * pc.g);
  BigInt h = L.class_number();
  return FieldData{pc, std::move(L), std::move(h), std::move(A), std::move(N)};
}

namespace {

// Citation texts state the sufficient condition each rule applies.
const FiredRule kR1{"R1", "g = 1: every divisor of degree g > 2g - 2 is non-special"};
const FiredRule kR2{"R2", "N1 >= g: a non-special effective divisor of degree g supported on rational places exists"};
const FiredRule kR3{"R3", "g >= 2 and A_{g-2} < h imply E_g (A_g = h + q A_{g-2} < (q+1) h)"};
const FiredRule kR4{"R4", "g >= 2 and N2 >= q + 2 imply E_g"};
const FiredRule kR5{"R5", "g >= 2, N2 = q + 1 and N_d >= 1 for some d != 2 dividing g imply E_g"};
const FiredRule kR6{"R6", "g >= 2 and q >= 3 imply E_g"};
const FiredRule kR7{"R7", "q = 2 and g in {3, 4} imply E_g"};
const FiredRule kR8{"R8", "q = 2, g >= 5 and N1 >= 2 imply E_g"};

const FiredRule kS1{"S1", "g = 1: a non-special divisor of degree 0 exists iff h > 1"};
const FiredRule kS2{"S2", "g > 1 and A_{g-1} = 0: every divisor of degree g - 1 is non-special"};
const FiredRule kS3{"S3", "A_{g-1} < h: some divisor of degree g - 1 is not equivalent to an effective one"};
const FiredRule kS4{"S4", "N1 >= g + 1: a non-special divisor of degree g - 1 supported on rational places exists"};
const FiredRule kS5{"S5", "g >= 2 and q >= 4 imply E_{g-1}"};
const FiredRule kS6{"S6", "q in {2, 3}, g >= 3 and N1 >= q + 1 imply E_{g-1}"};
const FiredRule kS7{"S7", "a_g + 2 sum_{i<g} a_i >= 0 for q >= 3 (> 0 for q = 2) forces A_{g-1} < h"};
const FiredRule kS8{"S8", "L(t) = (1 + q t^2)^g: constant field restriction of a maximal field has E_{g-1}"};

const FiredRule kT0{"T0", "g = 0: every divisor of nonnegative degree on the rational field is non-special"};

Verdict finish(Property prop, std::vector<FiredRule> rules, const FieldData& fd) {
  Verdict v;
  v.property = prop;
  v.rules = std::move(rules);
  for (const auto& rec : lookup_exception(fd.q(), fd.g(), fd.counts.N, fd.h)) {
    if (rec.failed != prop) continue;
    v.exception = rec;
    break;
  }
  if (v.exception) {
    v.status = Status::ExceptionListed;
    for (const auto& r : v.rules) {
      v.alarms.push_back("rule " + r.id + " fires on a listed exception: " + v.exception->equation);
    }
  } else {
    v.status = v.rules.empty() ? Status::Undetermined : Status::Guaranteed;
  }
  return v;
}

}  // namespace

Verdict evaluate_Eg(const FieldData& fd) {
  const int q = fd.q();
  const int g = fd.g();
  std::vector<FiredRule> rules;
  if (g == 1) rules.push_back(kR1);
  if (fd.n(1) >= g) rules.push_back(kR2);
  if (g >= 2) {
    if (fd.a(g - 2) < fd.h) rules.push_back(kR3);
    if (fd.n(2) >= q + 2) rules.push_back(kR4);
    if (fd.n(2) == q + 1) {
      for (int d = 1; d <= g; ++d) {
        if (d != 2 && g % d == 0 && fd.n(d) >= 1) {
          rules.push_back(kR5);
          break;
        }
      }
    }
    if (q >= 3) rules.push_back(kR6);
    if (q == 2 && (g == 3 || g == 4)) rules.push_back(kR7);
    if (q == 2 && g >= 5 && fd.n(1) >= 2) rules.push_back(kR8);
  }
  return finish(Property::Eg, std::move(rules), fd);
}

Verdict evaluate_Egm1(const FieldData& fd) {
  const int q = fd.q();
  const int g = fd.g();
  std::vector<FiredRule> rules;
  if (g == 1 && fd.h >= 2) rules.push_back(kS1);
  if (g > 1 && fd.a(g - 1) == 0) rules.push_back(kS2);
  if (fd.a(g - 1) < fd.h) rules.push_back(kS3);
  if (fd.n(1) >= g + 1) rules.push_back(kS4);
  if (g >= 2 && q >= 4) rules.push_back(kS5);
  if ((q == 2 || q == 3) && g >= 3 && fd.n(1) >= q + 1) rules.push_back(kS6);
  const BigInt x = zeta::gminus1_sign_quantity(fd.L);
  if ((q >= 3 && x >= 0) || (q == 2 && x > 0)) rules.push_back(kS7);
  if (fd.L == zeta::maximal_restriction_lpoly(q, g)) rules.push_back(kS8);
  return finish(Property::Egm1, std::move(rules), fd);
}

Verdict certify_tower_step(long long q, long long g, long long n1) {
  if (q < 2 || (q & (q - 1)) != 0) throw InputError("tower certificates need q a power of 2");
  if (g < 0 || n1 < 0) throw InputError("genus and N1 must be nonnegative");
  Verdict v;
  v.property = Property::Egm1;
  if (g == 0) {
    v.rules.push_back(kT0);
  } else {
    if (g == 1 && n1 >= 2) v.rules.push_back(kS1);
    if (n1 >= g + 1) v.rules.push_back(kS4);
    if (g >= 2 && q >= 4) v.rules.push_back(kS5);
    if (q == 2 && g >= 3 && n1 >= 3) v.rules.push_back(kS6);
  }
  v.status = v.rules.empty() ? Status::Undetermined : Status::Guaranteed;
  return v;
}

}  // namespace nsdiv::criteria
