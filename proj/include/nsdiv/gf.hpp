// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "nsdiv/error.hpp"

namespace nsdiv::gf {

class Field;

/// An element of a finite field F_{p^m}.
///
/// The value is stored as its coordinate vector over F_p packed into a
/// single integer `code = c_0 + c_1 p + ... + c_{m-1} p^{m-1}` with respect
/// to the power basis 1, w, ..., w^{m-1} of the owning field.
class Element {
 public:
  Element() = default;
  Element(const Field& field, std::uint32_t code);

  const Field& field() const { return *field_; }
  std::uint32_t code() const { return code_; }
  std::vector<int> coordinates() const;

  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator*(const Element& rhs) const;
  Element operator/(const Element& rhs) const;
  Element operator-() const;
  Element& operator+=(const Element& rhs) { return *this = *this + rhs; }
  Element& operator-=(const Element& rhs) { return *this = *this - rhs; }
  Element& operator*=(const Element& rhs) { return *this = *this * rhs; }

  Element inverse() const;
  Element pow(std::uint64_t e) const;

  bool operator==(const Element& rhs) const {
    return field_ == rhs.field_ && code_ == rhs.code_;
  }

  std::string to_string() const;

 private:
  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

enum class QuadraticCharacter { Zero, Square, Nonsquare };

/// F_{p^m} for p in {2, 3}. Instances are interned: `Field::make` returns the
/// same object for the same (p, m), and fields are never destroyed, so
/// references and pointers to them stay valid for the program's lifetime.
class Field {
 public:
  static const Field& make(int p, int m);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  std::uint32_t order() const { return order_; }
  /// Modulus coefficients over F_p, constant term first, length m + 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Element zero() const { return Element(*this, 0); }
  Element one() const { return Element(*this, 1); }
  Element element(std::uint32_t code) const { return Element(*this, code); }
  Element from_coordinates(const std::vector<int>& coords) const;
  /// The image of an integer in the prime field.
  Element constant(long long c) const;
  /// The generator w (class of x modulo the modulus).
  Element generator() const;

  // Raw operations on packed codes; no ownership checks.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;

  std::vector<int> unpack(std::uint32_t code) const;
  std::uint32_t pack(const std::vector<int>& coords) const;

  /// Codes of all elements ordered lexicographically by coordinate sequence,
  /// compared from the constant coordinate upward.
  std::uint32_t lex_to_code(std::uint32_t lex_index) const;

  bool operator==(const Field& rhs) const { return this == &rhs; }

  std::string name() const;

  Field(int p, int m, std::vector<int> modulus);

 private:
  int p_;
  int m_;
  std::uint32_t order_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> ppow_;
  std::uint32_t reduce_mask_ = 0;  // char 2: modulus as bit pattern
};

/// Returns the field F_{p^m}; p in {2,3}, 1 <= m <= 16 (p=2) or 10 (p=3).
inline const Field& field_make(int p, int m) { return Field::make(p, m); }

/// a^{p^k}.
Element frobenius_power(const Element& a, long long k);

/// Absolute trace a + a^p + ... + a^{p^{m-1}} as a residue mod p.
int absolute_trace(const Element& a);

/// The unique square root in characteristic 2, a^{2^{m-1}}.
Element square_root_char2(const Element& a);

QuadraticCharacter quadratic_character(const Element& a);

/// Image of `a` under the fixed embedding of its field into `target`. The
/// embedding sends the generator of the source to the lexicographically
/// smallest root of the source modulus in the target.
Element embed_subfield(const Element& a, const Field& target);

/// Inverse of `embed_subfield`: the preimage of `b` in `source`, or nullopt
/// when `b` does not lie in the embedded copy of `source`.
std::optional<Element> restrict_to_subfield(const Element& b, const Field& source);

}  // namespace nsdiv::gf
