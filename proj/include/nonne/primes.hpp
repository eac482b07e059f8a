// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nonne {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Default memory budget (bytes) for a single sieve buffer.
inline constexpr std::size_t kDefaultSieveBudget = std::size_t{1} << 31;

/// Ascending list of every prime <= limit. Immutable after construction.
class PrimeList {
 public:
  PrimeList() = default;

  u64 limit() const noexcept { return limit_; }
  std::span<const u64> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  u64 operator[](std::size_t i) const { return primes_[i]; }
  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }

 private:
  friend PrimeList sieve_eratosthenes(u64 limit, std::size_t budget);
  u64 limit_ = 0;
  std::vector<u64> primes_;
};

PrimeList sieve_eratosthenes(u64 limit, std::size_t budget = kDefaultSieveBudget);

/// Primes in [lo, hi] found by a segmented sieve over `base`.
/// Requires base.limit()^2 >= hi.
std::vector<u64> primes_in_range(u64 lo, u64 hi, const PrimeList& base);

/// Deterministic for every 64-bit n.
bool is_prime(u64 n);

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// x in [1, m) with a*x == 1 (mod m). Throws Precondition if gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

/// Distinct prime factors of n, ascending. Trial division over `primes`,
/// with a primality test on the cofactor.
std::vector<u64> distinct_prime_factors(u64 n, const PrimeList& primes);

u64 isqrt(u64 n);

}  // namespace nonne
