// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "nonne/primes.hpp"

namespace nonne {

/// Value of an order-ell character: either Zero (argument divisible by f)
/// or Root(e), meaning zeta^e for a fixed primitive ell-th root zeta.
class CharValue {
 public:
  constexpr CharValue() = default;

  static constexpr CharValue zero() { return CharValue(); }
  static constexpr CharValue root(std::uint32_t e) { return CharValue(static_cast<std::int32_t>(e)); }

  constexpr bool is_zero() const noexcept { return exp_ < 0; }
  constexpr bool is_one() const noexcept { return exp_ == 0; }
  /// Only meaningful when !is_zero().
  constexpr std::uint32_t exponent() const noexcept { return static_cast<std::uint32_t>(exp_); }

  constexpr CharValue inverse(std::uint32_t ell) const {
    return is_zero() ? *this : root((ell - exponent()) % ell);
  }
  constexpr CharValue times(CharValue o, std::uint32_t ell) const {
    return (is_zero() || o.is_zero()) ? zero() : root((exponent() + o.exponent()) % ell);
  }

  friend constexpr bool operator==(CharValue, CharValue) = default;

 private:
  constexpr explicit CharValue(std::int32_t e) : exp_(e) {}
  std::int32_t exp_ = -1;
};

/// One fixed primitive character of order ell modulo the prime f.
/// chi(n) = Root(j) where n^((f-1)/ell) == w^j (mod f); w is the
/// canonical root n0^((f-1)/ell) for the least n0 >= 2 giving w != 1.
struct CharacterSpec {
  u64 f = 0;
  std::uint32_t ell = 0;
  u64 w = 0;
  u64 n0 = 0;
  std::vector<u64> root_powers;  // w^0, ..., w^(ell-1) mod f

  u64 cofactor() const { return (f - 1) / ell; }
  /// j with value == w^j, or -1 when value is not an ell-th root of unity.
  int root_index(u64 value) const;
};

CharacterSpec make_spec(u64 f, std::uint32_t ell);

enum class EngineKind { Table, PowMod, Cubic };

std::string_view to_string(EngineKind kind);

class CharacterEngine {
 public:
  explicit CharacterEngine(CharacterSpec spec) : spec_(std::move(spec)) {}
  virtual ~CharacterEngine() = default;
  CharacterEngine(const CharacterEngine&) = delete;
  CharacterEngine& operator=(const CharacterEngine&) = delete;

  const CharacterSpec& spec() const noexcept { return spec_; }
  u64 modulus() const noexcept { return spec_.f; }
  std::uint32_t order() const noexcept { return spec_.ell; }

  virtual EngineKind kind() const noexcept = 0;
  virtual CharValue eval(u64 n) const = 0;

 private:
  CharacterSpec spec_;
};

/// Default cap on f for lookup tables (one byte per residue).
inline constexpr u64 kDefaultTableMax = 10'000'000;

/// Table cap, honouring the NONNE_TABLE_MAX environment variable.
u64 table_max_from_env();

/// Lookup-table engine. `primes` is used to factor f-1 when searching for a
/// primitive root.
std::unique_ptr<CharacterEngine> build_table_engine(const CharacterSpec& spec, const PrimeList& primes,
                                                    u64 table_max = kDefaultTableMax);
std::unique_ptr<CharacterEngine> build_table_engine(const CharacterSpec& spec,
                                                    u64 table_max = kDefaultTableMax);

/// Evaluates n^((f-1)/ell) mod f and maps it onto the w^j table.
std::unique_ptr<CharacterEngine> build_powmod_engine(const CharacterSpec& spec);

/// Least primitive root modulo the prime f.
u64 primitive_root(u64 f, const PrimeList& primes);

struct IntervalSumResult {
  std::vector<u64> counts;  // counts[e] = #{n in (N, N+H] : chi(n) = Root(e)}
  double magnitude = 0.0;   // |sum zeta^e(n)|

  u64 total() const;
};

/// Character sum over the integers n in (N, N+H].
IntervalSumResult interval_sum(const CharacterEngine& engine, std::int64_t start, u64 length);

}  // namespace nonne
