// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "nsdiv/doublecover.hpp"

#include <sstream>

#include "nsdiv/error.hpp"

namespace nsdiv::cover {

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (&num_.field() != &den_.field()) throw InputError("numerator and denominator over different fields");
  if (den_.is_zero()) throw InputError("zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly::constant(num_.field().one());
    return;
  }
  UniPoly g = gf::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Element lc_inv = den_.leading().inverse();
  num_ = num_ * lc_inv;
  den_ = den_ * lc_inv;
}

RationalFunction::RationalFunction(UniPoly num)
    : RationalFunction(num, UniPoly::constant(num.field().one())) {}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::inverted_variable() const {
  if (is_zero()) return *this;
  UniPoly n = num_.reversed();
  UniPoly d = den_.reversed();
  const int shift = den_.degree() - num_.degree();
  const Element one = field().one();
  if (shift > 0) n = n * UniPoly::monomial(one, shift);
  if (shift < 0) d = d * UniPoly::monomial(one, -shift);
  return RationalFunction(std::move(n), std::move(d));
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// BasePlace

const Field& residue_field_of(const Field& base, int degree) {
  return Field::make(base.characteristic(), base.degree() * degree);
}

BasePlace BasePlace::infinity(const Field& base) {
  BasePlace p;
  p.base_ = &base;
  p.degree_ = 1;
  p.infinite_ = true;
  p.root_ = base.zero();
  return p;
}

BasePlace BasePlace::finite(UniPoly poly) {
  if (!poly.is_monic() || !gf::is_irreducible(poly)) {
    throw InputError("place polynomial must be monic irreducible: " + poly.to_string());
  }
  BasePlace p;
  p.base_ = &poly.field();
  p.degree_ = poly.degree();
  const Field& residue = residue_field_of(*p.base_, p.degree_);
  for (std::uint32_t lex = 0; lex < residue.order(); ++lex) {
    Element x = residue.element(residue.lex_to_code(lex));
    if (poly.evaluate(x).is_zero()) {
      p.root_ = x;
      break;
    }
  }
  if (!p.root_) throw InternalError("irreducible polynomial without a root in its residue field");
  p.poly_ = std::move(poly);
  return p;
}

BasePlace BasePlace::from_root(const Field& base, const Element& root, int degree) {
  const Field& residue = root.field();
  if (&residue != &residue_field_of(base, degree)) throw InputError("root lies in the wrong residue field");
  // Minimal polynomial: product of (x - root^{q^i}) over the Frobenius orbit.
  UniPoly minpoly = UniPoly::constant(residue.one());
  Element conj = root;
  for (int i = 0; i < degree; ++i) {
    minpoly = minpoly * UniPoly(residue, std::vector<Element>{-conj, residue.one()});
    conj = gf::frobenius_power(conj, base.degree());
  }
  if (!(conj == root)) throw InputError("root has the wrong degree over the base field");
  std::vector<Element> coeffs;
  for (int i = 0; i <= minpoly.degree(); ++i) {
    auto c = gf::restrict_to_subfield(minpoly.coeff(i), base);
    if (!c) throw InputError("root has the wrong degree over the base field");
    coeffs.push_back(*c);
  }
  BasePlace p;
  p.base_ = &base;
  p.degree_ = degree;
  p.root_ = root;
  p.poly_ = UniPoly(base, coeffs);
  return p;
}

const UniPoly& BasePlace::poly() const {
  if (infinite_) throw InputError("the infinite place has no polynomial");
  return *poly_;
}

const Element& BasePlace::root() const { return *root_; }

const Field& BasePlace::residue_field() const { return root_->field(); }

std::string BasePlace::to_string() const {
  if (infinite_) return "Infinity";
  return "(" + poly_->to_string() + ")";
}

const char* to_string(SplittingType t) {
  switch (t) {
    case SplittingType::Split:
      return "split";
    case SplittingType::Inert:
      return "inert";
    case SplittingType::Ramified:
      return "ramified";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Local analysis

namespace {

// Expansion of N(s)/D(s) at s = 0 where N, D are the shifted numerator and
// denominator over the residue field.
LaurentSeries expand_shifted(const UniPoly& n, const UniPoly& d, int terms) {
  const Field& f = n.field();
  LaurentSeries out;
  if (n.is_zero()) throw InputError("Laurent expansion of the zero function");
  const int a = n.low_order();
  const int b = d.low_order();
  out.start = a - b;
  const UniPoly nu = n.shifted_down(a);
  const UniPoly du = d.shifted_down(b);
  const Element d0_inv = du.coeff(0).inverse();
  out.coeffs.reserve(static_cast<std::size_t>(terms));
  for (int k = 0; k < terms; ++k) {
    Element acc = nu.coeff(k);
    for (int j = 1; j <= k; ++j) acc -= du.coeff(j) * out.coeffs[static_cast<std::size_t>(k - j)];
    out.coeffs.push_back(acc * d0_inv);
  }
  (void)f;
  return out;
}

// Reduction on a window of coefficients at exponents -v0..0.
ReducedPole reduce_window(std::vector<Element> w, int v0) {
  ReducedPole out;
  int m = v0;
  while (true) {
    while (m > 0 && w[static_cast<std::size_t>(v0 - m)].is_zero()) --m;
    if (m == 0) {
      out.pole_order = 0;
      out.residue = w[static_cast<std::size_t>(v0)];
      return out;
    }
    if (m % 2 == 1) {
      out.pole_order = m;
      return out;
    }
    const Element c = w[static_cast<std::size_t>(v0 - m)];
    const Element s = gf::square_root_char2(c);
    w[static_cast<std::size_t>(v0 - m)] -= s * s;
    w[static_cast<std::size_t>(v0 - m / 2)] -= s;
    ++out.steps;
  }
}

struct LocalFunction {
  UniPoly num;
  UniPoly den;
  Element alpha;
};

LocalFunction localize(const RationalFunction& f, const BasePlace& place) {
  if (&place.base() != &f.field()) throw InputError("place and function over different fields");
  if (place.is_infinity()) {
    RationalFunction g = f.inverted_variable();
    return {g.num(), g.den(), f.field().zero()};
  }
  return {f.num(), f.den(), place.root()};
}

SplittingType classify(CoverKind kind, const UniPoly& num, const UniPoly& den, const Element& alpha) {
  const UniPoly n = num.taylor_shift(alpha);
  const UniPoly d = den.taylor_shift(alpha);
  const int v = n.low_order() - d.low_order();
  if (kind == CoverKind::Kummer2) {
    if (v % 2 != 0) return SplittingType::Ramified;
    LaurentSeries lead = expand_shifted(n, d, 1);
    return gf::quadratic_character(lead.coeffs[0]) == gf::QuadraticCharacter::Square ? SplittingType::Split
                                                                                       : SplittingType::Inert;
  }
  Element beta = alpha.field().zero();
  if (v < 0) {
    const int v0 = -v;
    LaurentSeries window = expand_shifted(n, d, v0 + 1);
    ReducedPole r = reduce_window(std::move(window.coeffs), v0);
    if (r.pole_order % 2 == 1) return SplittingType::Ramified;
    beta = *r.residue;
  } else if (v == 0) {
    beta = expand_shifted(n, d, 1).coeffs[0];
  }
  return gf::absolute_trace(beta) == 0 ? SplittingType::Split : SplittingType::Inert;
}

}  // namespace

int valuation_at(const RationalFunction& f, const BasePlace& place) {
  if (f.is_zero()) throw InputError("valuation of the zero function");
  if (&place.base() != &f.field()) throw InputError("place and function over different fields");
  if (place.is_infinity()) return f.den().degree() - f.num().degree();
  return gf::multiplicity(place.poly(), f.num()) - gf::multiplicity(place.poly(), f.den());
}

LaurentSeries local_laurent(const RationalFunction& f, const BasePlace& place, int terms) {
  if (terms < 1) throw InputError("at least one Laurent term is required");
  LocalFunction lf = localize(f, place);
  return expand_shifted(lf.num.taylor_shift(lf.alpha), lf.den.taylor_shift(lf.alpha), terms);
}

ReducedPole as_reduce_char2(const RationalFunction& f, const BasePlace& place) {
  if (f.field().characteristic() != 2) throw InputError("Artin-Schreier reduction requires characteristic 2");
  const Field& residue = place.residue_field();
  if (f.is_zero()) return ReducedPole{0, residue.zero(), 0};
  const int v = valuation_at(f, place);
  if (v > 0) return ReducedPole{0, residue.zero(), 0};
  const int v0 = -v;
  LaurentSeries window = local_laurent(f, place, v0 + 1);
  return reduce_window(std::move(window.coeffs), v0);
}

// ---------------------------------------------------------------------------
// DoubleCover

namespace {

void check_kind(CoverKind kind, const Field& base) {
  const int p = base.characteristic();
  if (kind == CoverKind::ArtinSchreier2 && p != 2) {
    throw InputError("Artin-Schreier double covers require characteristic 2");
  }
  if (kind == CoverKind::Kummer2 && p == 2) {
    throw InputError("Kummer double covers require odd characteristic");
  }
}

}  // namespace

int genus_rh(CoverKind kind, const RationalFunction& f) {
  check_kind(kind, f.field());
  if (f.is_constant()) throw InputError("constant f defines no curve");
  const Field& base = f.field();
  int different = 0;
  int ramified = 0;
  if (kind == CoverKind::ArtinSchreier2) {
    auto add_pole = [&](const BasePlace& place) {
      ReducedPole r = as_reduce_char2(f, place);
      if (r.pole_order > 0) {
        different += (r.pole_order + 1) * place.degree();
        ++ramified;
      }
    };
    if (f.num().degree() > f.den().degree()) add_pole(BasePlace::infinity(base));
    if (f.den().degree() > 0) {
      for (const auto& [poly, mult] : gf::factor(f.den())) add_pole(BasePlace::finite(poly));
    }
  } else {
    auto add_odd = [&](const UniPoly& poly) {
      if (poly.degree() <= 0) return;
      for (const auto& [g, mult] : gf::factor(poly)) {
        if (mult % 2 == 1) {
          different += g.degree();
          ++ramified;
        }
      }
    };
    add_odd(f.num());
    add_odd(f.den());
    if ((f.den().degree() - f.num().degree()) % 2 != 0) {
      different += 1;
      ++ramified;
    }
  }
  const int twice_g_minus_2 = -4 + different;
  if (twice_g_minus_2 % 2 != 0) {
    throw InternalError("Riemann-Hurwitz total is odd for " + f.to_string());
  }
  const int g = (twice_g_minus_2 + 2) / 2;
  if (g < 0 || ramified == 0) {
    throw InternalError("no ramification for " + f.to_string() + ": the cover is degenerate");
  }
  return g;
}

DoubleCover::DoubleCover(CoverKind kind, RationalFunction f) : kind_(kind), f_(std::move(f)) {
  check_kind(kind_, f_.field());
  if (f_.is_constant()) throw InputError("degenerate cover: f is constant");
  try {
    genus_ = genus_rh(kind_, f_);
  } catch (const InternalError& e) {
    throw InputError(std::string("degenerate cover: ") + e.what());
  }
}

std::string DoubleCover::equation() const {
  if (kind_ == CoverKind::ArtinSchreier2) return "y^2 + y = " + f_.to_string();
  return "y^2 = " + f_.to_string();
}

SplittingType splitting(const DoubleCover& cover, const BasePlace& place) {
  LocalFunction lf = localize(cover.f(), place);
  return classify(cover.kind(), lf.num, lf.den, lf.alpha);
}

std::vector<long long> count_places(const DoubleCover& cover, int max_degree) {
  if (max_degree < 1 || max_degree > 8) throw InputError("max degree must be in 1..8");
  const Field& base = cover.base();
  const int r = base.degree();
  const int p = base.characteristic();
  std::vector<long long> counts(static_cast<std::size_t>(max_degree) + 1, 0);
  auto record = [&](SplittingType t, int d) {
    switch (t) {
      case SplittingType::Split:
        counts[static_cast<std::size_t>(d)] += 2;
        break;
      case SplittingType::Ramified:
        counts[static_cast<std::size_t>(d)] += 1;
        break;
      case SplittingType::Inert:
        if (2 * d <= max_degree) counts[static_cast<std::size_t>(2 * d)] += 1;
        break;
    }
  };

  record(splitting(cover, BasePlace::infinity(base)), 1);

  for (int d = 1; d <= max_degree; ++d) {
    const Field& residue = residue_field_of(base, d);
    const UniPoly num = cover.f().num().mapped_to(residue);
    const UniPoly den = cover.f().den().mapped_to(residue);
    const std::uint64_t q = [&] {
      std::uint64_t v = 1;
      for (int i = 0; i < r; ++i) v *= static_cast<std::uint64_t>(p);
      return v;
    }();
    // One representative (the smallest code) per Frobenius orbit of size d.
    for (std::uint32_t code = 0; code < residue.order(); ++code) {
      std::uint32_t y = code;
      int size = 0;
      bool smallest = true;
      do {
        y = residue.pow(y, q);
        ++size;
        if (y < code) {
          smallest = false;
          break;
        }
      } while (y != code && size <= d);
      if (!smallest || size != d) continue;
      record(classify(cover.kind(), num, den, residue.element(code)), d);
    }
  }
  counts.erase(counts.begin());
  return counts;
}

}  // namespace nsdiv::cover
