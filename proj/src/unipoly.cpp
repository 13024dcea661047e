// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "nsdiv/unipoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace nsdiv::gf {

UniPoly::UniPoly(const Field& field, std::vector<std::uint32_t> codes)
    : field_(&field), c_(std::move(codes)) {
  for (auto c : c_) {
    if (c >= field.order()) throw InputError("coefficient out of range for " + field.name());
  }
  normalize();
}

UniPoly::UniPoly(const Field& field, const std::vector<Element>& coeffs) : field_(&field) {
  c_.reserve(coeffs.size());
  for (const auto& e : coeffs) {
    if (&e.field() != &field) throw InputError("coefficient from a different field");
    c_.push_back(e.code());
  }
  normalize();
}

UniPoly UniPoly::from_ints(const Field& field, const std::vector<long long>& coeffs) {
  std::vector<std::uint32_t> codes;
  codes.reserve(coeffs.size());
  for (long long c : coeffs) codes.push_back(field.constant(c).code());
  return UniPoly(field, std::move(codes));
}

UniPoly UniPoly::constant(const Element& c) { return UniPoly(c.field(), std::vector<std::uint32_t>{c.code()}); }

UniPoly UniPoly::monomial(const Element& c, int degree) {
  std::vector<std::uint32_t> codes(static_cast<std::size_t>(degree) + 1, 0);
  codes.back() = c.code();
  return UniPoly(c.field(), std::move(codes));
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Element UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_->zero();
  return Element(*field_, c_[static_cast<std::size_t>(i)]);
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
  if (field_ != rhs.field_) throw InputError("polynomial field mismatch");
  std::vector<std::uint32_t> out(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t a = i < c_.size() ? c_[i] : 0;
    std::uint32_t b = i < rhs.c_.size() ? rhs.c_[i] : 0;
    out[i] = field_->add(a, b);
  }
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const {
  if (field_ != rhs.field_) throw InputError("polynomial field mismatch");
  std::vector<std::uint32_t> out(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t a = i < c_.size() ? c_[i] : 0;
    std::uint32_t b = i < rhs.c_.size() ? rhs.c_[i] : 0;
    out[i] = field_->sub(a, b);
  }
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
  if (field_ != rhs.field_) throw InputError("polynomial field mismatch");
  if (is_zero() || rhs.is_zero()) return UniPoly(*field_);
  std::vector<std::uint32_t> out(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      out[i + j] = field_->add(out[i + j], field_->mul(c_[i], rhs.c_[j]));
    }
  }
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::operator*(const Element& c) const {
  if (&c.field() != field_) throw InputError("scalar from a different field");
  std::vector<std::uint32_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_->mul(c_[i], c.code());
  return UniPoly(*field_, std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (field_ != divisor.field_) throw InputError("polynomial field mismatch");
  if (divisor.is_zero()) throw InputError("polynomial division by zero");
  const Field& f = *field_;
  std::vector<std::uint32_t> rem = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(f), *this};
  std::vector<std::uint32_t> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
  const std::uint32_t lead_inv = f.inv(divisor.c_.back());
  for (int k = degree(); k >= dd; --k) {
    std::uint32_t c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    std::uint32_t factor = f.mul(c, lead_inv);
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (int i = 0; i <= dd; ++i) {
      auto idx = static_cast<std::size_t>(k - dd + i);
      rem[idx] = f.sub(rem[idx], f.mul(factor, divisor.c_[static_cast<std::size_t>(i)]));
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

UniPoly UniPoly::make_monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Element UniPoly::evaluate(const Element& x) const {
  const Field& target = x.field();
  Element acc = target.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + embed_subfield(Element(*field_, *it), target);
  }
  return acc;
}

UniPoly UniPoly::mapped_to(const Field& target) const {
  if (&target == field_) return *this;
  std::vector<std::uint32_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i] = embed_subfield(Element(*field_, c_[i]), target).code();
  }
  return UniPoly(target, std::move(out));
}

UniPoly UniPoly::taylor_shift(const Element& alpha) const {
  const Field& f = alpha.field();
  UniPoly src = mapped_to(f);
  // Horner in the ring F[s]: acc <- acc * (alpha + s) + c.
  std::vector<std::uint32_t> acc;
  const auto& sc = src.codes();
  for (auto it = sc.rbegin(); it != sc.rend(); ++it) {
    std::vector<std::uint32_t> next(acc.size() + 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] = f.add(next[i], f.mul(acc[i], alpha.code()));
      next[i + 1] = f.add(next[i + 1], acc[i]);
    }
    next[0] = f.add(next[0], *it);
    acc = std::move(next);
  }
  return UniPoly(f, std::move(acc));
}

UniPoly UniPoly::reversed() const {
  std::vector<std::uint32_t> out(c_.rbegin(), c_.rend());
  return UniPoly(*field_, std::move(out));
}

int UniPoly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

UniPoly UniPoly::shifted_down(int k) const {
  if (k <= 0) return *this;
  if (k > degree()) return UniPoly(*field_);
  std::vector<std::uint32_t> out(c_.begin() + k, c_.end());
  return UniPoly(*field_, std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Element c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    bool compound = cs.find('+') != std::string::npos;
    if (i == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (!c.is_one()) os << (compound ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.make_monic();
}

bool is_irreducible(const UniPoly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (f.coeff(0).is_zero()) return false;
  for (int e = 1; 2 * e <= d; ++e) {
    for (const auto& g : monic_irreducibles(f.field(), e)) {
      if ((f % g).is_zero()) return false;
    }
  }
  return true;
}

const std::vector<UniPoly>& monic_irreducibles(const Field& field, int d) {
  if (d < 1) throw InputError("degree must be positive");
  double size = 1;
  for (int i = 0; i < d; ++i) size *= field.order();
  if (size > 65536.0) throw InputError("irreducible enumeration range exceeded");

  static std::mutex mu;
  static std::map<std::pair<const Field*, int>, std::unique_ptr<std::vector<UniPoly>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({&field, d});
    if (it != cache.end()) return *it->second;
  }
  auto out = std::make_unique<std::vector<UniPoly>>();
  const std::uint32_t q = field.order();
  const auto total = static_cast<std::uint32_t>(size);
  for (std::uint32_t lex = 0; lex < total; ++lex) {
    std::vector<std::uint32_t> codes(static_cast<std::size_t>(d) + 1, 0);
    std::uint32_t rest = lex;
    for (int i = d - 1; i >= 0; --i) {
      codes[static_cast<std::size_t>(i)] = rest % q;
      rest /= q;
    }
    codes[static_cast<std::size_t>(d)] = 1;
    UniPoly cand(field, std::move(codes));
    if (is_irreducible(cand)) out->push_back(std::move(cand));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(&field, d), std::move(out));
  return *it->second;
}

int moebius(long long n) {
  if (n < 1) throw InputError("moebius requires n >= 1");
  int result = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

long long count_monic_irreducibles(long long q, int d) {
  long long sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long long qe = 1;
    for (int i = 0; i < e; ++i) qe *= q;
    sum += moebius(d / e) * qe;
  }
  return sum / d;
}

int multiplicity(const UniPoly& p, const UniPoly& f) {
  if (f.is_zero()) throw InputError("multiplicity in the zero polynomial");
  if (p.degree() < 1) throw InputError("multiplicity of a constant");
  int k = 0;
  UniPoly rest = f;
  while (true) {
    auto [q, r] = rest.divmod(p);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++k;
  }
  return k;
}

std::vector<std::pair<UniPoly, int>> factor(const UniPoly& f) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly rest = f.make_monic();
  for (int e = 1; 2 * e <= rest.degree(); ++e) {
    for (const auto& g : monic_irreducibles(f.field(), e)) {
      int k = 0;
      while (rest.degree() >= e) {
        auto [q, r] = rest.divmod(g);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++k;
      }
      if (k > 0) out.emplace_back(g, k);
      if (2 * e > rest.degree()) break;
    }
  }
  if (rest.degree() >= 1) {
    bool merged = false;
    for (auto& [g, k] : out) {
      if (g == rest) {
        ++k;
        merged = true;
      }
    }
    if (!merged) out.emplace_back(rest, 1);
  }
  return out;
}

}  // namespace nsdiv::gf
