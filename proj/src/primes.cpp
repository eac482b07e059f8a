// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "nonne/primes.hpp"

#include <cmath>
#include <string>

#include "nonne/error.hpp"

namespace nonne {

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

PrimeList sieve_eratosthenes(u64 limit, std::size_t budget) {
  if (limit < 2) fail(ErrorKind::Precondition, "sieve limit must be >= 2");
  // odd-only: index i stands for 2i+1
  const u64 cells = limit / 2 + 1;
  if (cells > budget) {
    fail(ErrorKind::Resource, "sieve limit " + std::to_string(limit) +
                                  " exceeds memory budget of " +
                                  std::to_string(budget) + " bytes");
  }
  std::vector<std::uint8_t> composite(cells, 0);
  for (u64 i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    for (u64 j = p * p / 2; j < cells; j += p) composite[j] = 1;
  }

  PrimeList out;
  out.limit_ = limit;
  out.primes_.reserve(static_cast<std::size_t>(
      1.3 * static_cast<double>(limit) / std::log(static_cast<double>(limit)) + 8));
  out.primes_.push_back(2);
  for (u64 i = 1; i < cells; ++i) {
    if (!composite[i] && 2 * i + 1 <= limit) out.primes_.push_back(2 * i + 1);
  }
  return out;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi, const PrimeList& base) {
  std::vector<u64> out;
  if (hi < lo || hi < 2) return out;
  if (lo < 2) lo = 2;
  if (static_cast<u128>(base.limit()) * base.limit() < hi) {
    fail(ErrorKind::Precondition,
         "base prime list too short for segmented sieve up to " + std::to_string(hi));
  }
  const u64 width = hi - lo + 1;
  std::vector<std::uint8_t> composite(width, 0);
  for (u64 p : base) {
    if (static_cast<u128>(p) * p > hi) break;
    u64 start = std::max<u64>(p * p, (lo + p - 1) / p * p);
    for (u64 m = start; m <= hi; m += p) {
      composite[m - lo] = 1;
      if (m > hi - p) break;  // guard against wrap near 2^64
    }
  }
  for (u64 i = 0; i < width; ++i) {
    if (!composite[i]) out.push_back(lo + i);
  }
  return out;
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 m) {
  if (m < 2) fail(ErrorKind::Precondition, "inv_mod: modulus must be >= 2");
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    fail(ErrorKind::Precondition, "inv_mod: " + std::to_string(a) +
                                      " is not invertible mod " + std::to_string(m));
  }
  __int128 x = old_s % static_cast<__int128>(m);
  if (x < 0) x += m;
  return static_cast<u64>(x);
}

namespace {

// Strong probable-prime test to base a; n odd, n - 1 = d * 2^s.
bool sprp(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return true;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sinclair's seven bases: no strong pseudoprime below 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!sprp(n, a, d, s)) return false;
  }
  return true;
}

std::vector<u64> distinct_prime_factors(u64 n, const PrimeList& primes) {
  std::vector<u64> out;
  if (n < 2) return out;
  for (u64 p : primes) {
    if (static_cast<u128>(p) * p > n) break;
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1 && !is_prime(n)) {
    // list exhausted; continue trial division past its end
    u64 d = primes.limit() + 1;
    if (d % 2 == 0) ++d;
    for (; static_cast<u128>(d) * d <= n; d += 2) {
      if (n % d == 0) {
        out.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace nonne
