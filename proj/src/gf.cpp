// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "nsdiv/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "nsdiv/unipoly.hpp"

namespace nsdiv::gf {

namespace {

int max_degree_for(int p) { return p == 2 ? 16 : 10; }

std::recursive_mutex& registry_mutex() {
  static std::recursive_mutex mu;
  return mu;
}

std::map<std::pair<int, int>, std::unique_ptr<Field>>& registry() {
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> fields;
  return fields;
}

// Lexicographically smallest monic irreducible of degree m over F_p,
// comparing coefficient sequences from the constant term.
std::vector<int> choose_modulus(int p, int m) {
  if (m == 1) return {0, 1};
  const Field& prime = Field::make(p, 1);
  std::uint32_t count = 1;
  for (int i = 0; i < m; ++i) count *= static_cast<std::uint32_t>(p);
  for (std::uint32_t lex = 0; lex < count; ++lex) {
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(m) + 1, 0);
    std::uint32_t rest = lex;
    for (int i = m - 1; i >= 0; --i) {
      coeffs[static_cast<std::size_t>(i)] = rest % static_cast<std::uint32_t>(p);
      rest /= static_cast<std::uint32_t>(p);
    }
    coeffs[static_cast<std::size_t>(m)] = 1;
    UniPoly candidate(prime, coeffs);
    if (is_irreducible(candidate)) {
      std::vector<int> out(coeffs.begin(), coeffs.end());
      return out;
    }
  }
  throw InternalError("no irreducible polynomial found for F_" + std::to_string(p) + "^" +
                      std::to_string(m));
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

const Field& Field::make(int p, int m) {
  if (p != 2 && p != 3) {
    throw InputError("unsupported characteristic " + std::to_string(p) + " (expected 2 or 3)");
  }
  if (m < 1 || m > max_degree_for(p)) {
    throw InputError("unsupported extension degree " + std::to_string(m) + " for p = " +
                     std::to_string(p));
  }
  std::lock_guard<std::recursive_mutex> lock(registry_mutex());
  auto& fields = registry();
  auto it = fields.find({p, m});
  if (it != fields.end()) return *it->second;
  auto field = std::make_unique<Field>(p, m, choose_modulus(p, m));
  const Field& ref = *field;
  fields.emplace(std::make_pair(p, m), std::move(field));
  return ref;
}

Field::Field(int p, int m, std::vector<int> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
  ppow_.resize(static_cast<std::size_t>(m) + 1);
  ppow_[0] = 1;
  for (int i = 1; i <= m; ++i) ppow_[static_cast<std::size_t>(i)] = ppow_[static_cast<std::size_t>(i) - 1] * static_cast<std::uint32_t>(p);
  order_ = ppow_[static_cast<std::size_t>(m)];
  if (p == 2) {
    for (int i = 0; i <= m; ++i) {
      if (modulus_[static_cast<std::size_t>(i)] != 0) reduce_mask_ |= 1u << i;
    }
  }
}

std::vector<int> Field::unpack(std::uint32_t code) const {
  std::vector<int> out(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint32_t>(p_));
    code /= static_cast<std::uint32_t>(p_);
  }
  return out;
}

std::uint32_t Field::pack(const std::vector<int>& coords) const {
  std::uint32_t code = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    int c = i < static_cast<int>(coords.size()) ? coords[static_cast<std::size_t>(i)] : 0;
    c %= p_;
    if (c < 0) c += p_;
    code = code * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(c);
  }
  return code;
}

std::uint32_t Field::lex_to_code(std::uint32_t lex_index) const {
  std::uint32_t code = 0;
  for (int i = 0; i < m_; ++i) {
    code = code * static_cast<std::uint32_t>(p_) + lex_index % static_cast<std::uint32_t>(p_);
    lex_index /= static_cast<std::uint32_t>(p_);
  }
  return code;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0;
  for (int i = 0; i < m_; ++i) {
    std::uint32_t d = (a % 3 + b % 3) % 3;
    out += d * ppow_[static_cast<std::size_t>(i)];
    a /= 3;
    b /= 3;
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  for (int i = 0; i < m_; ++i) {
    std::uint32_t d = (3 - a % 3) % 3;
    out += d * ppow_[static_cast<std::size_t>(i)];
    a /= 3;
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (p_ == 2) {
    std::uint64_t prod = 0;
    std::uint64_t aa = a;
    while (b != 0) {
      if (b & 1u) prod ^= aa;
      aa <<= 1;
      b >>= 1;
    }
    for (int k = 2 * m_ - 2; k >= m_; --k) {
      if ((prod >> k) & 1u) prod ^= static_cast<std::uint64_t>(reduce_mask_) << (k - m_);
    }
    return static_cast<std::uint32_t>(prod);
  }
  int da[16] = {0};
  int db[16] = {0};
  for (int i = 0; i < m_; ++i) {
    da[i] = static_cast<int>(a % 3);
    db[i] = static_cast<int>(b % 3);
    a /= 3;
    b /= 3;
  }
  int prod[32] = {0};
  for (int i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] += da[i] * db[j];
  }
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    int c = prod[k] % 3;
    if (c == 0) continue;
    for (int i = 0; i <= m_; ++i) prod[k - m_ + i] -= c * modulus_[static_cast<std::size_t>(i)];
  }
  std::uint32_t out = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    int d = ((prod[i] % 3) + 3) % 3;
    out = out * 3 + static_cast<std::uint32_t>(d);
  }
  return out;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw InputError("division by zero in " + name());
  return pow(a, order_ - 2);
}

Element Field::from_coordinates(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) > m_) {
    throw InputError("too many coordinates for " + name());
  }
  return Element(*this, pack(coords));
}

Element Field::constant(long long c) const {
  long long r = c % p_;
  if (r < 0) r += p_;
  return Element(*this, static_cast<std::uint32_t>(r));
}

Element Field::generator() const {
  if (m_ == 1) return Element(*this, 0);  // x mod x
  return Element(*this, static_cast<std::uint32_t>(p_));
}

std::string Field::name() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (m_ > 1) os << "^" << m_;
  return os.str();
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const Field& field, std::uint32_t code) : field_(&field), code_(code) {
  if (code >= field.order()) throw InputError("element code out of range for " + field.name());
}

namespace {
void require_same(const Element& a, const Element& b) {
  if (&a.field() != &b.field()) {
    throw InputError("field mismatch: " + a.field().name() + " vs " + b.field().name());
  }
}
}  // namespace

std::vector<int> Element::coordinates() const { return field_->unpack(code_); }

Element Element::operator+(const Element& rhs) const {
  require_same(*this, rhs);
  return Element(*field_, field_->add(code_, rhs.code_));
}

Element Element::operator-(const Element& rhs) const {
  require_same(*this, rhs);
  return Element(*field_, field_->sub(code_, rhs.code_));
}

Element Element::operator*(const Element& rhs) const {
  require_same(*this, rhs);
  return Element(*field_, field_->mul(code_, rhs.code_));
}

Element Element::operator/(const Element& rhs) const {
  require_same(*this, rhs);
  return Element(*field_, field_->mul(code_, field_->inv(rhs.code_)));
}

Element Element::operator-() const { return Element(*field_, field_->neg(code_)); }

Element Element::inverse() const { return Element(*field_, field_->inv(code_)); }

Element Element::pow(std::uint64_t e) const { return Element(*field_, field_->pow(code_, e)); }

std::string Element::to_string() const {
  const auto coords = coordinates();
  if (field_->degree() == 1) return std::to_string(coords[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = field_->degree() - 1; i >= 0; --i) {
    int c = coords[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "w";
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Free operations

Element frobenius_power(const Element& a, long long k) {
  const Field& f = a.field();
  long long m = f.degree();
  long long r = ((k % m) + m) % m;
  std::uint32_t x = a.code();
  for (long long i = 0; i < r; ++i) x = f.pow(x, static_cast<std::uint64_t>(f.characteristic()));
  return Element(f, x);
}

int absolute_trace(const Element& a) {
  const Field& f = a.field();
  std::uint32_t sum = 0;
  std::uint32_t x = a.code();
  for (int i = 0; i < f.degree(); ++i) {
    sum = f.add(sum, x);
    x = f.pow(x, static_cast<std::uint64_t>(f.characteristic()));
  }
  if (sum >= static_cast<std::uint32_t>(f.characteristic())) {
    throw InternalError("trace left the prime field");
  }
  return static_cast<int>(sum);
}

Element square_root_char2(const Element& a) {
  const Field& f = a.field();
  if (f.characteristic() != 2) throw InputError("square_root_char2 requires characteristic 2");
  return a.pow(std::uint64_t{1} << (f.degree() - 1));
}

QuadraticCharacter quadratic_character(const Element& a) {
  const Field& f = a.field();
  if (f.characteristic() == 2) throw InputError("quadratic_character requires odd characteristic");
  if (a.is_zero()) return QuadraticCharacter::Zero;
  Element e = a.pow((f.order() - 1) / 2);
  if (e.is_one()) return QuadraticCharacter::Square;
  return QuadraticCharacter::Nonsquare;
}

namespace {

struct Embedding {
  std::vector<std::uint32_t> image;     // indexed by source code
  std::vector<std::uint32_t> preimage;  // indexed by target code; kNone if absent
};

constexpr std::uint32_t kNone = 0xffffffffu;

const Embedding& embedding_for(const Field& source, const Field& target) {
  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({&source, &target});
    if (it != cache.end()) return *it->second;
  }
  if (source.characteristic() != target.characteristic() ||
      target.degree() % source.degree() != 0) {
    throw InputError("cannot embed " + source.name() + " into " + target.name());
  }
  const auto& mod = source.modulus();
  std::uint32_t root = kNone;
  for (std::uint32_t lex = 0; lex < target.order() && root == kNone; ++lex) {
    std::uint32_t x = target.lex_to_code(lex);
    std::uint32_t acc = 0;
    for (auto c = mod.rbegin(); c != mod.rend(); ++c) {
      acc = target.add(target.mul(acc, x), static_cast<std::uint32_t>(*c));
    }
    if (acc == 0) root = x;
  }
  if (root == kNone) throw InternalError("source modulus has no root in target field");

  auto emb = std::make_unique<Embedding>();
  emb->image.resize(source.order());
  emb->preimage.assign(target.order(), kNone);
  std::vector<std::uint32_t> powers(static_cast<std::size_t>(source.degree()));
  powers[0] = 1;
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = target.mul(powers[i - 1], root);
  for (std::uint32_t code = 0; code < source.order(); ++code) {
    auto coords = source.unpack(code);
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      for (int k = 0; k < coords[i]; ++k) acc = target.add(acc, powers[i]);
    }
    emb->image[code] = acc;
    emb->preimage[acc] = code;
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(&source, &target), std::move(emb));
  return *it->second;
}

}  // namespace

Element embed_subfield(const Element& a, const Field& target) {
  if (&a.field() == &target) return a;
  const Embedding& emb = embedding_for(a.field(), target);
  return Element(target, emb.image[a.code()]);
}

std::optional<Element> restrict_to_subfield(const Element& b, const Field& source) {
  if (&b.field() == &source) return b;
  const Embedding& emb = embedding_for(source, b.field());
  std::uint32_t code = emb.preimage[b.code()];
  if (code == kNone) return std::nullopt;
  return Element(source, code);
}

}  // namespace nsdiv::gf
