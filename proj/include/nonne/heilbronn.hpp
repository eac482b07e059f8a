// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonne/character.hpp"
#include "nonne/primes.hpp"

namespace nonne {

/// Data certifying that the field of conductor f is not norm-Euclidean.
struct Witness {
  u64 f = 0;
  std::uint32_t ell = 0;
  u64 q1 = 0;
  u64 q2 = 0;
  u64 r = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class SurvivorReason { RanOutOfPrimes, SizeClauseFailed, SpecialConductor };

std::string_view to_string(SurvivorReason reason);

struct SieveOutcome {
  u64 f = 0;
  std::optional<Witness> witness;  // set iff eliminated
  SurvivorReason reason = SurvivorReason::RanOutOfPrimes;  // meaningful iff survivor
  // q1, q2, r as found by the scan (0 when not reached); kept for survivors too
  u64 q1 = 0;
  u64 q2 = 0;
  u64 r = 0;
  std::uint64_t evals = 0;  // character evaluations performed

  bool eliminated() const noexcept { return witness.has_value(); }
};

/// Witness condition: chi(r) = chi(q2)^-1, gcd(r, q1 q2) = 1,
/// r q2 k != f (mod q1^2) for k = 1..q1-1, and (q1-1)(q2 r - 1) <= f.
/// Assumes q1 < q2 are the two least prime non-residues.
bool check_condition1(u64 f, std::uint32_t ell, u64 q1, u64 q2, u64 r, const CharacterEngine& engine);

/// Full re-validation of a witness against a fresh engine: q1, q2 are the two
/// least primes with chi != 1, q1 < q2 < r < f, and the witness condition holds.
bool validate_witness(const Witness& w, const CharacterEngine& engine);

enum class Applicability { Holds, Fails, Inapplicable };

std::string_view to_string(Applicability a);

/// Sufficient conditions 2 to 5: an inequality plus the side conditions on q1, q2.
/// Log-bearing clauses return Inapplicable on near-ties (relative 1e-12).
Applicability check_condition_n(int condition, u64 f, u64 q1, u64 q2, u64 r);

/// The residues f * q2^-1 * k^-1 mod q1^2, k = 1..q1-1, that r must avoid.
std::vector<u64> forbidden_residues(u64 f, u64 q1, u64 q2);

/// Scans `primes` below f for q1, q2 and r. `primes` must be ascending.
SieveOutcome sieve_conductor(u64 f, std::uint32_t ell, std::span<const u64> primes,
                             const CharacterEngine& engine);

/// Heuristic average number of character evaluations: ell (2 + 2/(ell-1)).
double avg_eval_estimate(std::uint32_t ell);

enum class EngineChoice { Auto, Table, PowMod, Cubic };

std::string_view to_string(EngineChoice choice);
std::optional<EngineChoice> parse_engine_choice(std::string_view text);

/// f at or below which Auto picks the lookup table.
inline constexpr u64 kAutoTableMax = 10'000;

/// Engine for one conductor under the given policy.
std::unique_ptr<CharacterEngine> make_engine(const CharacterSpec& spec, EngineChoice choice,
                                             const PrimeList& primes, u64 table_max);

struct ChunkReport {
  u64 lo = 0;  // integer range covered, inclusive
  u64 hi = 0;
  std::vector<SieveOutcome> outcomes;  // ascending f, includes ell^2 when in range
};

struct SieveOptions {
  EngineChoice engine = EngineChoice::Auto;
  unsigned workers = 1;
  u64 prime_limit = 0;         // 0: max(1000, isqrt(B) + 1, 10^5)
  u64 chunk_width = 1 << 20;   // integers per chunk
  u64 table_max = kDefaultTableMax;
  bool keep_outcomes = false;  // retain every outcome in the report
  std::optional<std::filesystem::path> checkpoint;
  /// Called once per chunk, in range order.
  std::function<void(const ChunkReport&)> on_chunk;
};

struct SieveReport {
  std::uint32_t ell = 0;
  u64 from = 0;
  u64 to = 0;
  EngineChoice engine = EngineChoice::Auto;
  std::vector<u64> survivors;         // ascending
  std::vector<SieveOutcome> outcomes;  // when keep_outcomes
  u64 conductors = 0;                 // conductors sieved in this run (excl. resumed prefix)
  u64 eliminated = 0;
  std::uint64_t evals = 0;
  double seconds = 0.0;
  u64 resumed_from = 0;  // 0 when not resumed, else first f processed

  double average_evals() const { return conductors ? static_cast<double>(evals) / conductors : 0.0; }
};

/// Largest B accepted by sieve_range.
inline constexpr u64 kMaxConductor = (u64{1} << 62);

SieveReport sieve_range(std::uint32_t ell, u64 from, u64 to, const SieveOptions& options = {});

/// `f=<f>, q1=<q1>, q2=<q2>, r=<r>`
std::string format_witness(const Witness& w);

/// Parses a witness line; nullopt when the line is not in that exact format.
std::optional<Witness> parse_witness(std::string_view line, std::uint32_t ell = 3);

struct Checkpoint {
  std::uint32_t ell = 0;
  u64 from = 0;
  u64 to = 0;
  u64 done = 0;  // every integer <= done has been sieved
  std::vector<u64> survivors;
};

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);
Checkpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace nonne
