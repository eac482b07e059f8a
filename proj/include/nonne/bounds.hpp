// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nonne/primes.hpp"

namespace nonne::bounds {

/// Exact decimal mantissa * 10^exponent, produced by rounding a real upward.
struct Decimal {
  std::int64_t mantissa = 0;
  int exponent = 0;

  double value() const;
  /// Fixed notation with -exponent fractional digits, e.g. "10.0366".
  std::string fixed() const;
  /// Scientific notation with the mantissa's digits, e.g. "3.4936e3".
  std::string scientific() const;

  friend bool operator==(const Decimal&, const Decimal&) = default;
};

/// Smallest multiple of 10^-decimals that is >= x.
Decimal round_up_decimals(double x, int decimals);
/// Round x > 0 up to the given number of significant figures.
Decimal round_up_significant(double x, int digits);

struct BurgessParams {
  int r = 2;
  double d = 11.0;
  double p0 = 2e4;
};

struct BurgessConstant {
  double h1 = 0.0;  // C solving C^r p0^(1/4-1/(4r)) (log p0)^(1/2) = 4 d (d+1) r
  double h2 = 0.0;  // ((d+1)(2r-1)(4r-1))^(1/(2r)) / (1 - 2/d^(1-1/r))
  Decimal value;    // max(h1, h2, 1), rounded up to 4 decimals
};

/// Burgess character-sum constant C(r). Throws Domain for d <= 4 or r < 2.
BurgessConstant burgess_constant(const BurgessParams& params);
Decimal burgess_C(const BurgessParams& params);

/// Unrounded K1 (1 + 1/C) C / K2 with
/// K1 = (1 + q1^(1/k-1))(1 + q2^(1/k-1)), K2 = (1 - 1/q1)(1 - 1/q2).
double d_constant_raw(int k, double q1min, double q2min, double c);
Decimal d_constant(int k, double q1min, double q2min, double c);

/// D1(k): q1 >= 2, q2 >= 3; D2(k): q1 >= 101, q2 >= 103. Both from the
/// rounded C(k) with the default Burgess parameters.
Decimal d1(int k);
Decimal d2(int k);

/// E(k) = 18.9 D2(k)^k and E'(k) = 932 * 711 * D1(k)^k, rounded up to five
/// significant figures.
Decimal e_constant(int k);
Decimal eprime_constant(int k);

/// The k used for C_ell: 5 for ell = 3, 4 for 3 < ell < 61, else 3.
int cl_k(std::uint32_t ell);

/// E(k)(ell-1)^k (log f)^(7/2) <= f^(1/4 - 1/(4k)), evaluated on log scale.
bool check_db_inequality(std::uint32_t ell, int k, double f);
bool check_db_inequality_log(std::uint32_t ell, int k, double log_f);

struct ClResult {
  std::uint32_t ell = 0;
  int k = 0;
  double log10_crossing = 0.0;  // log10 f*
  int exponent = 0;             // C_ell = 10^exponent, least power of ten >= f*
  bool holds_at_bound = false;  // inequality verified at 10^exponent
  bool monotone_beyond = false; // derivative of the log-gap positive past f*
  int best_k = 0;               // k in [2, 8] with the least crossing
  double best_log10_crossing = 0.0;
};

/// Throws Domain when no crossing exists below 10^200.
ClResult cl_bound(std::uint32_t ell);
/// Crossing point log10 f* for an explicit k.
double db_crossing_log10(std::uint32_t ell, int k);

/// Least integer f0 with the special-case inequality holding for all f >= f0:
/// case 1: 72(ell-1) f^(1/2) log(4f) + 35 <= f
/// case 2: 507(ell-1) f^(1/2) log(9f) + 448 <= f
u64 special_threshold(int which, std::uint32_t ell);
bool special_inequality(int which, std::uint32_t ell, double f);

struct PisumResult {
  double max_ratio = 0.0;
  u64 argmax = 0;  // X' attaining the maximum (a prime)
  u64 checked = 0; // number of primes X' examined
};

/// max over X' <= X of (1/pi(X')) * sum_{a <= X', a prime} (pi(a) - 1)/a.
PisumResult verify_pisum(u64 x);

struct CoprimeLemmaReport {
  u64 qmax = 0;
  u64 checked_21 = 0;  // primes tested against the 2.1 log q variant
  u64 checked_3 = 0;
  std::vector<u64> failures_21;
  std::vector<u64> failures_3;

  bool ok() const { return failures_21.empty() && failures_3.empty(); }
};

/// For each prime q <= qmax (q not in {2,3,7}, resp. {2,3}), checks that the
/// product of primes below 2.1 log q (resp. 3 log q) exceeds q - 1.
CoprimeLemmaReport verify_prime_coprime_lemma(u64 qmax);

/// Product of the primes p < x, saturating at 2^128 - 1.
u128 primorial_below(double x);

}  // namespace nonne::bounds
