// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "nonne/character.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <string>

#include "nonne/error.hpp"

namespace nonne {

int CharacterSpec::root_index(u64 value) const {
  for (std::size_t j = 0; j < root_powers.size(); ++j) {
    if (root_powers[j] == value) return static_cast<int>(j);
  }
  return -1;
}

CharacterSpec make_spec(u64 f, std::uint32_t ell) {
  if (ell < 3 || !is_prime(ell)) {
    fail(ErrorKind::Precondition, "ell must be an odd prime, got " + std::to_string(ell));
  }
  if (!is_prime(f)) fail(ErrorKind::Precondition, "conductor " + std::to_string(f) + " is not prime");
  if (f % ell != 1) {
    fail(ErrorKind::NoCharacter, "no character of order " + std::to_string(ell) + " modulo " +
                                     std::to_string(f) + " (f != 1 mod ell)");
  }
  CharacterSpec spec;
  spec.f = f;
  spec.ell = ell;
  const u64 e = spec.cofactor();
  for (u64 n0 = 2;; ++n0) {
    const u64 w = pow_mod(n0, e, f);
    if (w != 1) {
      spec.w = w;
      spec.n0 = n0;
      break;
    }
  }
  spec.root_powers.resize(ell);
  u64 x = 1;
  for (std::uint32_t j = 0; j < ell; ++j) {
    spec.root_powers[j] = x;
    x = mul_mod(x, spec.w, f);
  }
  return spec;
}

std::string_view to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::Table: return "table";
    case EngineKind::PowMod: return "powmod";
    case EngineKind::Cubic: return "cubic";
  }
  return "?";
}

u64 table_max_from_env() {
  if (const char* v = std::getenv("NONNE_TABLE_MAX")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0') return parsed;
  }
  return kDefaultTableMax;
}

u64 primitive_root(u64 f, const PrimeList& primes) {
  if (f == 2) return 1;
  const std::vector<u64> factors = distinct_prime_factors(f - 1, primes);
  for (u64 g = 2; g < f; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (pow_mod(g, (f - 1) / q, f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(ErrorKind::Precondition, "no primitive root modulo " + std::to_string(f));
}

namespace {

constexpr std::uint8_t kZeroEntry = 0xFF;

class TableEngine final : public CharacterEngine {
 public:
  TableEngine(const CharacterSpec& spec, const PrimeList& primes) : CharacterEngine(spec) {
    const u64 f = spec.f;
    const u64 g = primitive_root(f, primes);
    const int j0 = spec.root_index(pow_mod(g, spec.cofactor(), f));
    if (j0 < 0) fail(ErrorKind::Precondition, "primitive root does not map to a root of unity");
    table_.assign(f, kZeroEntry);
    // chi(g^i) = Root(i * j0)
    u64 x = 1;
    std::uint32_t e = 0;
    for (u64 i = 0; i + 1 < f; ++i) {
      table_[x] = static_cast<std::uint8_t>(e);
      x = mul_mod(x, g, f);
      e += static_cast<std::uint32_t>(j0);
      if (e >= spec.ell) e -= spec.ell;
    }
  }

  EngineKind kind() const noexcept override { return EngineKind::Table; }

  CharValue eval(u64 n) const override {
    const std::uint8_t v = table_[n % modulus()];
    return v == kZeroEntry ? CharValue::zero() : CharValue::root(v);
  }

 private:
  std::vector<std::uint8_t> table_;
};

class PowModEngine final : public CharacterEngine {
 public:
  explicit PowModEngine(const CharacterSpec& spec) : CharacterEngine(spec) {
    for (std::uint32_t j = 0; j < spec.ell; ++j) sorted_.emplace_back(spec.root_powers[j], j);
    std::sort(sorted_.begin(), sorted_.end());
  }

  EngineKind kind() const noexcept override { return EngineKind::PowMod; }

  CharValue eval(u64 n) const override {
    const u64 f = modulus();
    n %= f;
    if (n == 0) return CharValue::zero();
    const u64 y = pow_mod(n, spec().cofactor(), f);
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::pair<u64, std::uint32_t>{y, 0});
    if (it == sorted_.end() || it->first != y) {
      fail(ErrorKind::Precondition, "power residue outside the root table; is f prime?");
    }
    return CharValue::root(it->second);
  }

 private:
  std::vector<std::pair<u64, std::uint32_t>> sorted_;
};

}  // namespace

std::unique_ptr<CharacterEngine> build_table_engine(const CharacterSpec& spec, const PrimeList& primes,
                                                    u64 table_max) {
  if (spec.f > table_max) {
    fail(ErrorKind::Resource, "f=" + std::to_string(spec.f) + " exceeds the lookup-table cap " +
                                  std::to_string(table_max));
  }
  if (spec.ell >= kZeroEntry) {
    fail(ErrorKind::Usage, "lookup tables hold exponents in one byte; ell must be < 255");
  }
  return std::make_unique<TableEngine>(spec, primes);
}

std::unique_ptr<CharacterEngine> build_table_engine(const CharacterSpec& spec, u64 table_max) {
  if (spec.f > table_max) {
    fail(ErrorKind::Resource, "f=" + std::to_string(spec.f) + " exceeds the lookup-table cap " +
                                  std::to_string(table_max));
  }
  const PrimeList primes = sieve_eratosthenes(std::max<u64>(isqrt(spec.f) + 1, 2));
  return build_table_engine(spec, primes, table_max);
}

std::unique_ptr<CharacterEngine> build_powmod_engine(const CharacterSpec& spec) {
  return std::make_unique<PowModEngine>(spec);
}

u64 IntervalSumResult::total() const { return std::accumulate(counts.begin(), counts.end(), u64{0}); }

IntervalSumResult interval_sum(const CharacterEngine& engine, std::int64_t start, u64 length) {
  if (length < 1) fail(ErrorKind::Precondition, "interval length H must be >= 1");
  const u64 f = engine.modulus();
  const std::uint32_t ell = engine.order();
  IntervalSumResult out;
  out.counts.assign(ell, 0);

  // residue of N + 1, then walk the actual integers N+1 .. N+H
  const auto sf = static_cast<__int128>(f);
  __int128 r = (static_cast<__int128>(start) + 1) % sf;
  if (r < 0) r += sf;
  u64 residue = static_cast<u64>(r);
  for (u64 i = 0; i < length; ++i) {
    const CharValue v = engine.eval(residue);
    if (!v.is_zero()) ++out.counts[v.exponent()];
    if (++residue == f) residue = 0;
  }

  std::complex<double> sum{0.0, 0.0};
  for (std::uint32_t e = 0; e < ell; ++e) {
    if (out.counts[e] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * e / ell;
    sum += static_cast<double>(out.counts[e]) * std::polar(1.0, angle);
  }
  out.magnitude = std::abs(sum);
  return out;
}

}  // namespace nonne
