// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include "nsdiv/zeta.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "nsdiv/error.hpp"
#include "nsdiv/unipoly.hpp"

namespace nsdiv::zeta {

using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(long long base, int exp) {
  BigInt out = 1;
  BigInt b = base;
  for (int i = 0; i < exp; ++i) out *= b;
  return out;
}

bool is_prime_power(long long q) {
  if (q < 2) return false;
  long long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::pair<long long, long long> split_square(long long q) {
  if (q < 1) throw InputError("split_square requires q >= 1");
  long long s = 1;
  long long rest = q;
  for (long long f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      s *= f;
    }
  }
  return {s, rest};
}

// ---------------------------------------------------------------------------
// PlaceCounts

namespace {

void check_structure(const PlaceCounts& pc) {
  if (pc.q < 2 || pc.q > 64 || !is_prime_power(pc.q)) {
    throw InputError("q must be a prime power in [2, 64], got " + std::to_string(pc.q));
  }
  if (pc.g < 1) throw InputError("genus must be at least 1");
  if (static_cast<int>(pc.N.size()) != pc.g) {
    throw InputError("expected " + std::to_string(pc.g) + " place counts, got " + std::to_string(pc.N.size()));
  }
  for (const auto& n : pc.N) {
    if (n < 0) throw InputError("place counts must be nonnegative");
  }
}

bool hasse_weil_holds(const PlaceCounts& pc) {
  BigInt dev = pc.N[0] - (pc.q + 1);
  return dev * dev <= BigInt(4) * pc.g * pc.g * pc.q;
}

// Coefficients a_0..a_{2g} from counts; no admissibility requirement on h.
std::vector<BigInt> coefficients_from_counts(const PlaceCounts& pc) {
  const std::vector<BigInt> S = power_sums_from_counts(pc);
  const int g = pc.g;
  std::vector<BigInt> a(static_cast<std::size_t>(2 * g) + 1, 0);
  a[0] = 1;
  for (int i = 1; i <= g; ++i) {
    BigInt acc = 0;
    for (int k = 1; k <= i; ++k) acc += S[static_cast<std::size_t>(k) - 1] * a[static_cast<std::size_t>(i - k)];
    acc = -acc;
    if (acc % i != 0) throw InternalError("Newton recursion produced a non-integer coefficient");
    a[static_cast<std::size_t>(i)] = acc / i;
  }
  for (int j = 0; j < g; ++j) {
    a[static_cast<std::size_t>(2 * g - j)] = ipow(pc.q, g - j) * a[static_cast<std::size_t>(j)];
  }
  return a;
}

}  // namespace

void PlaceCounts::validate() const {
  check_structure(*this);
  if (!hasse_weil_holds(*this)) throw InadmissibleError("N_1 violates the Hasse-Weil bound");
}

std::vector<BigInt> power_sums_from_counts(const PlaceCounts& pc) {
  check_structure(pc);
  std::vector<BigInt> S;
  S.reserve(static_cast<std::size_t>(pc.g));
  for (int k = 1; k <= pc.g; ++k) {
    BigInt s = ipow(pc.q, k) + 1;
    for (int d = 1; d <= k; ++d) {
      if (k % d == 0) s -= BigInt(d) * pc.count(d);
    }
    S.push_back(s);
  }
  return S;
}

// ---------------------------------------------------------------------------
// LPolynomial

LPolynomial::LPolynomial(int q, int g, std::vector<BigInt> a) : q_(q), g_(g), a_(std::move(a)) {
  if (q < 2 || !is_prime_power(q)) throw InputError("q must be a prime power");
  if (g < 0) throw InputError("genus must be nonnegative");
  if (static_cast<int>(a_.size()) != 2 * g + 1) {
    throw InputError("L-polynomial of genus " + std::to_string(g) + " needs " + std::to_string(2 * g + 1) +
                     " coefficients");
  }
  if (a_[0] != 1) throw InputError("L-polynomial must have a_0 = 1");
  for (int j = 0; j <= g; ++j) {
    if (a_[static_cast<std::size_t>(2 * g - j)] != ipow(q, g - j) * a_[static_cast<std::size_t>(j)]) {
      throw InputError("functional equation a_{2g-j} = q^{g-j} a_j fails at j = " + std::to_string(j));
    }
  }
  h_ = 0;
  for (const auto& c : a_) h_ += c;
  if (h_ < 1) throw InadmissibleError("class number L(1) = " + h_.str() + " is not positive");
}

BigInt LPolynomial::coeff(int i) const {
  if (i < 0 || i > 2 * g_) return 0;
  return a_[static_cast<std::size_t>(i)];
}

BigInt LPolynomial::power_sum(int k) const {
  if (k < 1) throw InputError("power sums are indexed from 1");
  std::vector<BigInt> S(static_cast<std::size_t>(k) + 1, 0);
  for (int j = 1; j <= k; ++j) {
    BigInt acc = BigInt(j) * coeff(j);
    for (int i = 1; i < j; ++i) acc += S[static_cast<std::size_t>(i)] * coeff(j - i);
    S[static_cast<std::size_t>(j)] = -acc;
  }
  return S[static_cast<std::size_t>(k)];
}

std::string LPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= 2 * g_; ++i) {
    const BigInt& c = a_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

LPolynomial lpoly_from_counts(const PlaceCounts& pc) {
  pc.validate();
  return LPolynomial(pc.q, pc.g, coefficients_from_counts(pc));
}

std::vector<BigInt> counts_from_lpoly(const LPolynomial& L, int max_degree) {
  if (max_degree < 1) throw InputError("max degree must be positive");
  std::vector<BigInt> S(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int k = 1; k <= max_degree; ++k) {
    BigInt acc = BigInt(k) * L.coeff(k);
    for (int i = 1; i < k; ++i) acc += S[static_cast<std::size_t>(i)] * L.coeff(k - i);
    S[static_cast<std::size_t>(k)] = -acc;
  }
  std::vector<BigInt> points(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int k = 1; k <= max_degree; ++k) points[static_cast<std::size_t>(k)] = ipow(L.q(), k) + 1 - S[static_cast<std::size_t>(k)];
  std::vector<BigInt> N;
  N.reserve(static_cast<std::size_t>(max_degree));
  for (int k = 1; k <= max_degree; ++k) {
    BigInt acc = 0;
    for (int d = 1; d <= k; ++d) {
      if (k % d == 0) acc += gf::moebius(k / d) * points[static_cast<std::size_t>(d)];
    }
    if (acc % k != 0) throw InadmissibleError("N_" + std::to_string(k) + " is not an integer");
    acc /= k;
    if (acc < 0) throw InadmissibleError("N_" + std::to_string(k) + " = " + acc.str() + " is negative");
    N.push_back(acc);
  }
  return N;
}

// ---------------------------------------------------------------------------
// Effective divisors

namespace {

BigInt effective_count_raw(const LPolynomial& L, int m) {
  if (m < 0) throw InputError("degree must be nonnegative");
  BigInt acc = 0;
  const int top = std::min(m, 2 * L.g());
  for (int i = 0; i <= top; ++i) {
    acc += (ipow(L.q(), m - i + 1) - 1) / (L.q() - 1) * L.coeff(i);
  }
  return acc;
}

}  // namespace

BigInt effective_count(const LPolynomial& L, int m) {
  BigInt a = effective_count_raw(L, m);
  if (a < 0) throw InadmissibleError("A_" + std::to_string(m) + " is negative");
  return a;
}

BigInt effective_count_euler(const std::vector<BigInt>& counts, int m) {
  if (m < 0) throw InputError("degree must be nonnegative");
  if (static_cast<int>(counts.size()) < m) throw InputError("need N_1..N_m for the Euler product");
  std::vector<BigInt> series(static_cast<std::size_t>(m) + 1, 0);
  series[0] = 1;
  for (int d = 1; d <= m; ++d) {
    const BigInt& n = counts[static_cast<std::size_t>(d) - 1];
    if (n < 0) throw InputError("place counts must be nonnegative");
    if (n == 0) continue;
    // (1 - t^d)^{-n} = sum_j C(n + j - 1, j) t^{dj}
    std::vector<BigInt> factor(static_cast<std::size_t>(m / d) + 1, 0);
    factor[0] = 1;
    for (std::size_t j = 1; j < factor.size(); ++j) {
      factor[j] = factor[j - 1] * (n + static_cast<long long>(j) - 1) / static_cast<long long>(j);
    }
    std::vector<BigInt> next(series.size(), 0);
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (series[i] == 0) continue;
      for (std::size_t j = 0; j < factor.size() && i + j * static_cast<std::size_t>(d) < series.size(); ++j) {
        next[i + j * static_cast<std::size_t>(d)] += series[i] * factor[j];
      }
    }
    series = std::move(next);
  }
  return series[static_cast<std::size_t>(m)];
}

BigInt gminus1_sign_quantity(const LPolynomial& L) {
  BigInt x = L.coeff(L.g());
  for (int i = 0; i < L.g(); ++i) x += 2 * L.coeff(i);
  return x;
}

BigInt a_gminus1_closed(const LPolynomial& L) {
  if (L.g() < 1) throw InputError("A_{g-1} requires g >= 1");
  BigInt num = L.class_number() - gminus1_sign_quantity(L);
  if (num % (L.q() - 1) != 0) throw InternalError("closed form for A_{g-1} is not an integer");
  return num / (L.q() - 1);
}

// ---------------------------------------------------------------------------
// Real Weil polynomial

namespace {

BigInt binomial(int n, int k) {
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

RealWeilPoly real_weil(const LPolynomial& L) {
  const int g = L.g();
  // Laurent polynomial L(t)/t^g, index e + g holds the coefficient of t^e.
  std::vector<BigInt> rest(L.a());
  std::vector<BigInt> c(static_cast<std::size_t>(g) + 1, 0);
  for (int k = g; k >= 0; --k) {
    const BigInt ck = rest[static_cast<std::size_t>(g - k)];
    c[static_cast<std::size_t>(k)] = ck;
    if (ck == 0) continue;
    // w^k = (1/t + q t)^k = sum_i C(k, i) q^i t^{2i - k}
    for (int i = 0; i <= k; ++i) {
      rest[static_cast<std::size_t>(2 * i - k + g)] -= ck * binomial(k, i) * ipow(L.q(), i);
    }
  }
  for (const auto& r : rest) {
    if (r != 0) throw InternalError("L(t)/t^g is not a polynomial in 1/t + qt");
  }
  return RealWeilPoly{std::move(c)};
}

RealWeilPoly real_weil_genus4(const LPolynomial& L) {
  if (L.g() != 4) throw InputError("the explicit quartic needs genus 4");
  const BigInt q = L.q();
  const BigInt a1 = L.coeff(1), a2 = L.coeff(2), a3 = L.coeff(3), a4 = L.coeff(4);
  RealWeilPoly H;
  H.coeffs = {a4 - 2 * q * a2 + 2 * q * q, a3 - 3 * q * a1, a2 - 4 * q, a1, 1};
  return H;
}

std::string RealWeilPoly::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// SqrtInt

SqrtInt::SqrtInt(BigInt u, BigInt v, long long radicand) : u_(std::move(u)), v_(std::move(v)), d_(radicand) {
  if (d_ < 1) throw InputError("radicand must be positive");
  if (d_ == 1) {
    u_ += v_;
    v_ = 0;
  }
}

SqrtInt SqrtInt::sqrt_of(long long q) {
  auto [s, rad] = split_square(q);
  if (rad == 1) return SqrtInt(s, 0, 1);
  return SqrtInt(0, s, rad);
}

namespace {
long long common_radicand(const SqrtInt& a, const SqrtInt& b) {
  if (a.radicand() == b.radicand()) return a.radicand();
  if (a.v() == 0 && a.radicand() == 1) return b.radicand();
  if (b.v() == 0 && b.radicand() == 1) return a.radicand();
  throw InputError("SqrtInt radicand mismatch");
}
}  // namespace

SqrtInt SqrtInt::operator+(const SqrtInt& rhs) const {
  return SqrtInt(u_ + rhs.u_, v_ + rhs.v_, common_radicand(*this, rhs));
}

SqrtInt SqrtInt::operator-(const SqrtInt& rhs) const { return *this + (-rhs); }

SqrtInt SqrtInt::operator*(const SqrtInt& rhs) const {
  const long long d = common_radicand(*this, rhs);
  return SqrtInt(u_ * rhs.u_ + v_ * rhs.v_ * d, u_ * rhs.v_ + v_ * rhs.u_, d);
}

SqrtInt SqrtInt::pow(unsigned e) const {
  SqrtInt out(1, 0, d_);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

int SqrtInt::sign() const {
  const int su = u_.sign();
  const int sv = v_.sign();
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // Opposite signs: compare u^2 with v^2 d.
  const BigInt uu = u_ * u_;
  const BigInt vv = v_ * v_ * d_;
  if (uu == vv) return 0;
  return uu > vv ? su : sv;
}

std::string SqrtInt::to_string() const {
  std::ostringstream os;
  if (v_ == 0) {
    os << u_;
    return os.str();
  }
  BigInt mag = v_ < 0 ? BigInt(-v_) : v_;
  if (u_ != 0) {
    os << u_ << (v_ < 0 ? " - " : " + ");
  } else if (v_ < 0) {
    os << "-";
  }
  if (mag != 1) os << mag;
  os << "√" << d_;
  return os.str();
}

SignedValue sqrt_sign_eval(const RealWeilPoly& H, int q, bool negative) {
  SqrtInt root = SqrtInt::sqrt_of(q) * SqrtInt(2, 0, 1);
  if (negative) root = -root;
  SqrtInt acc(0, 0, root.radicand());
  for (auto it = H.coeffs.rbegin(); it != H.coeffs.rend(); ++it) {
    acc = acc * root + SqrtInt(*it, 0, root.radicand());
  }
  return {acc, acc.sign()};
}

// ---------------------------------------------------------------------------
// Admissibility

SqrtInt effective_inequality_margin(const LPolynomial& L) {
  const int g = L.g();
  const SqrtInt sq = SqrtInt::sqrt_of(L.q());
  const long long d = sq.radicand();
  SqrtInt sum(0, 0, d);
  for (int n = 0; n <= g - 2; ++n) {
    sum = sum + SqrtInt(2, 0, d) * sq.pow(static_cast<unsigned>(g - 1 - n)) * SqrtInt(effective_count_raw(L, n), 0, d);
  }
  if (g >= 1) sum = sum + SqrtInt(effective_count_raw(L, g - 1), 0, d);
  const SqrtInt factor = (sq - SqrtInt(1, 0, d)).pow(2);
  return SqrtInt(L.class_number(), 0, d) - factor * sum;
}

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

RatPoly rat_div(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  RatPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return q;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rat_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

using cld = std::complex<long double>;

cld horner(const std::vector<long double>& c, cld x) {
  cld acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

double root_modulus_deviation(const LPolynomial& L) {
  if (L.g() == 0) return 0.0;
  RatPoly p;
  for (const auto& c : L.a()) p.emplace_back(c);
  RatPoly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<long long>(i));
  RatPoly sqf = rat_div(p, rat_gcd(p, dp));
  const int n = static_cast<int>(sqf.size()) - 1;
  if (n < 1) return 0.0;
  std::vector<long double> mon(sqf.size());
  for (std::size_t i = 0; i < sqf.size(); ++i) {
    mon[i] = static_cast<long double>(sqf[i] / sqf.back());
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -static_cast<double>(mon[static_cast<std::size_t>(i)]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<long double> deriv;
  for (std::size_t i = 1; i < mon.size(); ++i) deriv.push_back(mon[i] * static_cast<long double>(i));
  const long double target = 1.0L / std::sqrt(static_cast<long double>(L.q()));
  long double worst = 0;
  for (int i = 0; i < n; ++i) {
    std::complex<double> r0 = solver.eigenvalues()[i];
    cld r(r0.real(), r0.imag());
    for (int step = 0; step < 3; ++step) {
      cld dv = horner(deriv, r);
      if (std::abs(dv) == 0) break;
      r -= horner(mon, r) / dv;
    }
    worst = std::max(worst, std::fabs(std::abs(r) - target));
  }
  return static_cast<double>(worst);
}

AdmissibilityReport admissibility(const PlaceCounts& pc) {
  check_structure(pc);
  AdmissibilityReport rep;
  auto fail = [&](std::string what) {
    rep.admissible = false;
    rep.violated.push_back(std::move(what));
  };
  if (!hasse_weil_holds(pc)) fail("hasse-weil");

  std::vector<BigInt> a = coefficients_from_counts(pc);
  BigInt h = 0;
  for (const auto& c : a) h += c;
  if (h < 1) {
    fail("class-number");
    return rep;
  }
  const LPolynomial L(pc.q, pc.g, std::move(a));
  const RealWeilPoly H = real_weil(L);
  if (sqrt_sign_eval(H, pc.q, false).sign < 0) fail("real-weil-upper");
  const int lower = sqrt_sign_eval(H, pc.q, true).sign * (pc.g % 2 == 0 ? 1 : -1);
  if (lower < 0) fail("real-weil-lower");
  if (effective_inequality_margin(L).sign() < 0) fail("effective-inequality");
  try {
    counts_from_lpoly(L, 2 * pc.g);
  } catch (const InadmissibleError& e) {
    fail(std::string("derived-counts: ") + e.what());
  }
  for (int m = 0; m <= 2 * pc.g; ++m) {
    if (effective_count_raw(L, m) < 0) {
      fail("effective-counts: A_" + std::to_string(m) + " < 0");
      break;
    }
  }
  const double dev = root_modulus_deviation(L);
  if (!(dev <= 1e-6)) {
    std::ostringstream os;
    os << "root-modulus: max | |root| - q^(-1/2) | = " << dev;
    rep.diagnostics.push_back(os.str());
  }
  return rep;
}

LPolynomial maximal_restriction_lpoly(int q, int g) {
  std::vector<BigInt> a(static_cast<std::size_t>(2 * g) + 1, 0);
  for (int i = 0; i <= g; ++i) a[static_cast<std::size_t>(2 * i)] = binomial(g, i) * ipow(q, i);
  return LPolynomial(q, g, std::move(a));
}

}  // namespace nsdiv::zeta
