// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsdiv/gf.hpp"
#include "nsdiv/unipoly.hpp"

namespace nsdiv::cover {

using gf::Element;
using gf::Field;
using gf::UniPoly;

/// A reduced quotient num/den over F_q with monic denominator.
class RationalFunction {
 public:
  RationalFunction(UniPoly num, UniPoly den);
  explicit RationalFunction(UniPoly num);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;

  /// f(1/x).
  RationalFunction inverted_variable() const;

  std::string to_string() const;

 private:
  UniPoly num_;
  UniPoly den_;
};

/// A place of the rational function field F_q(x).
class BasePlace {
 public:
  static BasePlace infinity(const Field& base);
  /// `poly` must be monic irreducible over the base field.
  static BasePlace finite(UniPoly poly);
  /// Finite place given by a root of its polynomial in F_{q^d}.
  static BasePlace from_root(const Field& base, const Element& root, int degree);

  bool is_infinity() const { return infinite_; }
  int degree() const { return degree_; }
  const Field& base() const { return *base_; }
  /// The defining polynomial (finite places only).
  const UniPoly& poly() const;
  /// A root of the place polynomial in the residue field F_{q^d}; for the
  /// infinite place this is 0 in F_q, the place (x) after x -> 1/x.
  const Element& root() const;
  const Field& residue_field() const;

  std::string to_string() const;

 private:
  BasePlace() = default;
  const Field* base_ = nullptr;
  int degree_ = 1;
  std::optional<UniPoly> poly_;
  std::optional<Element> root_;
  bool infinite_ = false;
};

enum class SplittingType { Split, Inert, Ramified };

const char* to_string(SplittingType t);

enum class CoverKind { ArtinSchreier2, Kummer2 };

struct LaurentSeries {
  int start = 0;                  // exponent of coeffs[0]
  std::vector<Element> coeffs;    // in the residue field
};

struct ReducedPole {
  int pole_order = 0;             // 0 or odd
  std::optional<Element> residue; // set when pole_order == 0
  int steps = 0;                  // substitutions performed
};

/// The residue field of `place` over a base field F_q, i.e. F_{q^deg}.
const Field& residue_field_of(const Field& base, int degree);

/// v_P(f).
int valuation_at(const RationalFunction& f, const BasePlace& place);

/// First `terms` Laurent coefficients of f at the place with respect to the
/// uniformizer x - alpha (alpha a fixed root of the place polynomial in the
/// residue field) or 1/x at infinity.
LaurentSeries local_laurent(const RationalFunction& f, const BasePlace& place, int terms);

/// Artin-Schreier local reduction: strips even pole orders with the
/// substitution y -> y + s t^{-m/2}.
ReducedPole as_reduce_char2(const RationalFunction& f, const BasePlace& place);

/// y^2 + y = f (characteristic 2) or y^2 = f (odd characteristic) over F_q(x).
class DoubleCover {
 public:
  /// Throws InputError for a wrong-characteristic kind or a degenerate f.
  DoubleCover(CoverKind kind, RationalFunction f);

  CoverKind kind() const { return kind_; }
  const RationalFunction& f() const { return f_; }
  const Field& base() const { return f_.field(); }
  int genus() const { return genus_; }

  std::string equation() const;

 private:
  CoverKind kind_;
  RationalFunction f_;
  int genus_ = 0;
};

SplittingType splitting(const DoubleCover& cover, const BasePlace& place);

/// N_1..N_k of the cover, 1 <= k <= 8.
std::vector<long long> count_places(const DoubleCover& cover, int max_degree);

/// Genus by Riemann-Hurwitz; throws InternalError on inconsistent data.
int genus_rh(CoverKind kind, const RationalFunction& f);
inline int genus_rh(const DoubleCover& cover) { return genus_rh(cover.kind(), cover.f()); }

}  // namespace nsdiv::cover
