// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "nonne/bounds.hpp"

#include <cmath>
#include <limits>

#include "nonne/error.hpp"

namespace nonne::bounds {

namespace {

long double pow10l(int e) { return std::pow(10.0L, static_cast<long double>(e)); }

}  // namespace

double Decimal::value() const { return static_cast<double>(mantissa * pow10l(exponent)); }

std::string Decimal::fixed() const {
  std::string digits = std::to_string(mantissa < 0 ? -mantissa : mantissa);
  std::string sign = mantissa < 0 ? "-" : "";
  if (exponent >= 0) return sign + digits + std::string(static_cast<std::size_t>(exponent), '0');
  const auto frac = static_cast<std::size_t>(-exponent);
  if (digits.size() <= frac) digits.insert(0, frac - digits.size() + 1, '0');
  return sign + digits.substr(0, digits.size() - frac) + "." + digits.substr(digits.size() - frac);
}

std::string Decimal::scientific() const {
  const std::string digits = std::to_string(mantissa < 0 ? -mantissa : mantissa);
  const int e = exponent + static_cast<int>(digits.size()) - 1;
  std::string out = mantissa < 0 ? "-" : "";
  out += digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  return out + "e" + std::to_string(e);
}

Decimal round_up_decimals(double x, int decimals) {
  const long double scaled = std::ceil(static_cast<long double>(x) * pow10l(decimals));
  return {static_cast<std::int64_t>(scaled), -decimals};
}

Decimal round_up_significant(double x, int digits) {
  if (!(x > 0)) fail(ErrorKind::Domain, "round_up_significant needs x > 0");
  int scale = static_cast<int>(std::floor(std::log10(x))) - digits + 1;
  auto m = static_cast<std::int64_t>(std::ceil(static_cast<long double>(x) / pow10l(scale)));
  if (m >= static_cast<std::int64_t>(pow10l(digits))) {
    m = (m + 9) / 10;
    ++scale;
  }
  return {m, scale};
}

BurgessConstant burgess_constant(const BurgessParams& p) {
  if (p.r < 2) fail(ErrorKind::Domain, "Burgess parameter r must be >= 2");
  if (!(p.d > 4)) fail(ErrorKind::Domain, "Burgess parameter d must exceed 4");
  if (!(p.p0 >= 2)) fail(ErrorKind::Domain, "Burgess parameter p0 must be >= 2");
  const double r = p.r, d = p.d;
  BurgessConstant out;
  const double rhs = 4.0 * d * (d + 1.0) * r;
  const double scale = std::pow(p.p0, 0.25 - 0.25 / r) * std::sqrt(std::log(p.p0));
  out.h1 = std::pow(rhs / scale, 1.0 / r);
  out.h2 = std::pow((d + 1.0) * (2.0 * r - 1.0) * (4.0 * r - 1.0), 1.0 / (2.0 * r)) /
           (1.0 - 2.0 / std::pow(d, 1.0 - 1.0 / r));
  out.value = round_up_decimals(std::max({out.h1, out.h2, 1.0}), 4);
  return out;
}

Decimal burgess_C(const BurgessParams& params) { return burgess_constant(params).value; }

double d_constant_raw(int k, double q1, double q2, double c) {
  if (k < 2) fail(ErrorKind::Domain, "k must be >= 2");
  if (!(c > 0)) fail(ErrorKind::Domain, "C must be positive");
  const double e = 1.0 / k - 1.0;
  const double k1 = (1.0 + std::pow(q1, e)) * (1.0 + std::pow(q2, e));
  const double k2 = (1.0 - 1.0 / q1) * (1.0 - 1.0 / q2);
  return k1 * (1.0 + 1.0 / c) * c / k2;
}

Decimal d_constant(int k, double q1, double q2, double c) {
  return round_up_decimals(d_constant_raw(k, q1, q2, c), 4);
}

Decimal d1(int k) { return d_constant(k, 2, 3, burgess_C({.r = k}).value()); }
Decimal d2(int k) { return d_constant(k, 101, 103, burgess_C({.r = k}).value()); }

Decimal e_constant(int k) { return round_up_significant(18.9 * std::pow(d2(k).value(), k), 5); }

Decimal eprime_constant(int k) {
  return round_up_significant(932.0 * 711.0 * std::pow(d1(k).value(), k), 5);
}

int cl_k(std::uint32_t ell) {
  if (ell == 3) return 5;
  if (ell < 61) return 4;
  return 3;
}

namespace {

void check_k(int k) {
  if (k < 2 || k > 8) fail(ErrorKind::Domain, "k must lie in [2, 8]");
}

// log(LHS) - log(RHS) of the discriminant-bound inequality at log f = L
double db_gap(std::uint32_t ell, int k, double log_e, double L) {
  return log_e + k * std::log(static_cast<double>(ell) - 1.0) + 3.5 * std::log(L) - (0.25 - 0.25 / k) * L;
}

}  // namespace

bool check_db_inequality_log(std::uint32_t ell, int k, double log_f) {
  check_k(k);
  if (!(log_f > 1)) return false;
  return db_gap(ell, k, std::log(e_constant(k).value()), log_f) <= 0;
}

bool check_db_inequality(std::uint32_t ell, int k, double f) {
  return check_db_inequality_log(ell, k, std::log(f));
}

double db_crossing_log10(std::uint32_t ell, int k) {
  check_k(k);
  if (ell < 3) fail(ErrorKind::Domain, "ell must be an odd prime");
  const double log_e = std::log(e_constant(k).value());
  const double slope = 0.25 - 0.25 / k;
  // the gap is maximal at L = 3.5 / slope and strictly decreasing beyond
  double lo = 3.5 / slope;
  if (db_gap(ell, k, log_e, lo) <= 0) return lo / std::log(10.0);
  const double cap = 200.0 * std::log(10.0);
  double hi = 2.0 * lo;
  while (db_gap(ell, k, log_e, hi) > 0) {
    hi *= 2.0;
    if (hi > 2.0 * cap) break;
  }
  if (db_gap(ell, k, log_e, std::min(hi, cap)) > 0) {
    fail(ErrorKind::Domain, "no crossing below 10^200 for ell=" + std::to_string(ell));
  }
  while (hi - lo > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    (db_gap(ell, k, log_e, mid) > 0 ? lo : hi) = mid;
  }
  return hi / std::log(10.0);
}

ClResult cl_bound(std::uint32_t ell) {
  ClResult out;
  out.ell = ell;
  out.k = cl_k(ell);
  out.log10_crossing = db_crossing_log10(ell, out.k);
  out.exponent = static_cast<int>(std::ceil(out.log10_crossing));
  while (!check_db_inequality_log(ell, out.k, out.exponent * std::log(10.0))) ++out.exponent;
  out.holds_at_bound = check_db_inequality_log(ell, out.k, out.exponent * std::log(10.0));
  out.monotone_beyond = out.log10_crossing * std::log(10.0) > 3.5 / (0.25 - 0.25 / out.k);
  out.best_log10_crossing = std::numeric_limits<double>::infinity();
  for (int k = 2; k <= 8; ++k) {
    const double c = db_crossing_log10(ell, k);
    if (c < out.best_log10_crossing) {
      out.best_log10_crossing = c;
      out.best_k = k;
    }
  }
  return out;
}

bool special_inequality(int which, std::uint32_t ell, double f) {
  const double l1 = static_cast<double>(ell) - 1.0;
  switch (which) {
    case 1: return 72.0 * l1 * std::sqrt(f) * std::log(4.0 * f) + 35.0 <= f;
    case 2: return 507.0 * l1 * std::sqrt(f) * std::log(9.0 * f) + 448.0 <= f;
    default: fail(ErrorKind::Usage, "special case must be 1 or 2");
  }
}

u64 special_threshold(int which, std::uint32_t ell) {
  if (ell < 3) fail(ErrorKind::Domain, "ell must be an odd prime");
  // f - c sqrt(f) log(a f) - b falls then rises and is negative at f = 1,
  // so the predicate is false on [1, f0) and true from f0 on.
  u64 lo = 1, hi = 2;
  if (special_inequality(which, ell, 1.0)) fail(ErrorKind::Domain, "inequality holds at f = 1");
  while (!special_inequality(which, ell, static_cast<double>(hi))) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const u64 mid = lo + (hi - lo) / 2;
    (special_inequality(which, ell, static_cast<double>(mid)) ? hi : lo) = mid;
  }
  return hi;
}

PisumResult verify_pisum(u64 x) {
  PisumResult out;
  if (x < 2) return out;
  const PrimeList primes = sieve_eratosthenes(x);
  long double sum = 0;
  u64 count = 0;
  for (u64 a : primes) {
    ++count;
    sum += static_cast<long double>(count - 1) / a;
    const double ratio = static_cast<double>(sum / count);
    if (ratio > out.max_ratio || count == 1) {
      out.max_ratio = ratio;
      out.argmax = a;
    }
  }
  out.checked = count;
  return out;
}

u128 primorial_below(double x) {
  u128 product = 1;
  const u128 max = std::numeric_limits<u128>::max();
  for (u64 p = 2; static_cast<double>(p) < x; ++p) {
    if (!is_prime(p)) continue;
    if (product > max / p) return max;
    product *= p;
  }
  return product;
}

CoprimeLemmaReport verify_prime_coprime_lemma(u64 qmax) {
  CoprimeLemmaReport out;
  out.qmax = qmax;
  if (qmax < 2) return out;
  for (u64 q : sieve_eratosthenes(qmax)) {
    const double lq = std::log(static_cast<double>(q));
    if (q != 2 && q != 3 && q != 7) {
      ++out.checked_21;
      if (primorial_below(2.1 * lq) <= q - 1) out.failures_21.push_back(q);
    }
    if (q != 2 && q != 3) {
      ++out.checked_3;
      if (primorial_below(3.0 * lq) <= q - 1) out.failures_3.push_back(q);
    }
  }
  return out;
}

}  // namespace nonne::bounds
