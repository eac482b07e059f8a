// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "nonne/heilbronn.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "nonne/eisenstein.hpp"
#include "nonne/error.hpp"

namespace nonne {

std::string_view to_string(SurvivorReason reason) {
  switch (reason) {
    case SurvivorReason::RanOutOfPrimes: return "ran-out-of-primes";
    case SurvivorReason::SizeClauseFailed: return "size-clause-failed";
    case SurvivorReason::SpecialConductor: return "special-conductor";
  }
  return "?";
}

std::string_view to_string(Applicability a) {
  switch (a) {
    case Applicability::Holds: return "holds";
    case Applicability::Fails: return "fails";
    case Applicability::Inapplicable: return "inapplicable";
  }
  return "?";
}

std::vector<u64> forbidden_residues(u64 f, u64 q1, u64 q2) {
  const u64 m = q1 * q1;
  const u64 base = mul_mod(f % m, inv_mod(q2 % m, m), m);
  std::vector<u64> out;
  out.reserve(q1 - 1);
  for (u64 k = 1; k < q1; ++k) out.push_back(mul_mod(base, inv_mod(k, m), m));
  std::sort(out.begin(), out.end());
  return out;
}

bool check_condition1(u64 f, std::uint32_t ell, u64 q1, u64 q2, u64 r, const CharacterEngine& engine) {
  if (engine.modulus() != f || engine.order() != ell) return false;
  if (q1 < 2 || q2 <= q1 || r == 0) return false;
  const CharValue c1 = engine.eval(q1), c2 = engine.eval(q2), cr = engine.eval(r);
  if (c1.is_zero() || c1.is_one() || c2.is_zero() || c2.is_one()) return false;
  if (cr != c2.inverse(ell)) return false;
  if (std::gcd(r, q1) != 1 || std::gcd(r, q2) != 1) return false;
  const u64 m = q1 * q1;
  const u64 target = f % m;
  const u64 rq2 = mul_mod(r % m, q2 % m, m);
  for (u64 k = 1; k < q1; ++k) {
    if (mul_mod(rq2, k, m) == target) return false;
  }
  const u128 size = static_cast<u128>(q1 - 1) * (static_cast<u128>(q2) * r - 1);
  return size <= f;
}

bool validate_witness(const Witness& w, const CharacterEngine& engine) {
  if (engine.modulus() != w.f || engine.order() != w.ell) return false;
  if (!(w.q1 < w.q2 && w.q2 < w.r && w.r < w.f)) return false;
  if (!is_prime(w.q1) || !is_prime(w.q2)) return false;
  // q1, q2 are the two least primes with chi != 1
  for (u64 p = 2; p < w.q2; ++p) {
    if (p != w.q1 && is_prime(p) && !engine.eval(p).is_one()) return false;
  }
  return check_condition1(w.f, w.ell, w.q1, w.q2, w.r, engine);
}

Applicability check_condition_n(int condition, u64 f, u64 q1, u64 q2, u64 r) {
  const auto fd = static_cast<double>(f);
  auto compare_log = [&](double coeff) {
    const double lhs = coeff * static_cast<double>(q1) * static_cast<double>(q2) * static_cast<double>(r) *
                       std::log(static_cast<double>(q1));
    if (std::fabs(lhs - fd) <= 1e-12 * std::max(lhs, fd)) return Applicability::Inapplicable;
    return lhs < fd ? Applicability::Holds : Applicability::Fails;
  };
  switch (condition) {
    case 2:
      if (q1 == 2 || q1 == 3) return Applicability::Inapplicable;
      return compare_log(3.0);
    case 3:
      if (q1 == 2 || q1 == 3 || q1 == 7) return Applicability::Inapplicable;
      return compare_log(2.1);
    case 4:
      if (q1 != 2 || q2 == 3) return Applicability::Inapplicable;
      return static_cast<u128>(3) * q2 * r < f ? Applicability::Holds : Applicability::Fails;
    case 5:
      if (q1 != 3 || q2 == 5) return Applicability::Inapplicable;
      return static_cast<u128>(5) * q2 * r < f ? Applicability::Holds : Applicability::Fails;
    default:
      fail(ErrorKind::Usage, "condition must be one of 2, 3, 4, 5");
  }
}

SieveOutcome sieve_conductor(u64 f, std::uint32_t ell, std::span<const u64> primes,
                             const CharacterEngine& engine) {
  if (engine.modulus() != f || engine.order() != ell) {
    fail(ErrorKind::Usage, "engine was built for a different conductor or order");
  }
  SieveOutcome out;
  out.f = f;
  CharValue zeta;
  u64 m = 0;
  std::vector<u64> forbidden;
  for (u64 p : primes) {
    if (p >= f) break;
    const CharValue c = engine.eval(p);
    ++out.evals;
    if (c.is_one()) continue;
    if (out.q1 == 0) {
      out.q1 = p;
    } else if (out.q2 == 0) {
      out.q2 = p;
      zeta = c.inverse(ell);
      m = out.q1 * out.q1;
      forbidden = forbidden_residues(f, out.q1, out.q2);
    } else if (c == zeta && !std::binary_search(forbidden.begin(), forbidden.end(), p % m)) {
      out.r = p;
      break;
    }
  }
  if (out.r == 0) {
    out.reason = SurvivorReason::RanOutOfPrimes;
    return out;
  }
  const u128 size = static_cast<u128>(out.q1 - 1) * (static_cast<u128>(out.q2) * out.r - 1);
  if (size > f) {
    out.reason = SurvivorReason::SizeClauseFailed;
    return out;
  }
  if (!check_condition1(f, ell, out.q1, out.q2, out.r, engine)) {
    throw std::logic_error("sieve produced a witness that fails condition (1) for f=" + std::to_string(f));
  }
  out.witness = Witness{f, ell, out.q1, out.q2, out.r};
  return out;
}

double avg_eval_estimate(std::uint32_t ell) {
  if (ell < 3) fail(ErrorKind::Precondition, "ell must be an odd prime");
  const double l = ell;
  return l * (2.0 + 2.0 / (l - 1.0));
}

std::string_view to_string(EngineChoice choice) {
  switch (choice) {
    case EngineChoice::Auto: return "auto";
    case EngineChoice::Table: return "table";
    case EngineChoice::PowMod: return "powmod";
    case EngineChoice::Cubic: return "cubic";
  }
  return "?";
}

std::optional<EngineChoice> parse_engine_choice(std::string_view text) {
  for (EngineChoice c : {EngineChoice::Auto, EngineChoice::Table, EngineChoice::PowMod, EngineChoice::Cubic}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

std::unique_ptr<CharacterEngine> make_engine(const CharacterSpec& spec, EngineChoice choice,
                                             const PrimeList& primes, u64 table_max) {
  switch (choice) {
    case EngineChoice::Table: return build_table_engine(spec, primes, table_max);
    case EngineChoice::PowMod: return build_powmod_engine(spec);
    case EngineChoice::Cubic: return build_cubic_engine(spec);
    case EngineChoice::Auto:
      if (spec.f <= std::min(kAutoTableMax, table_max) && spec.ell < 255) {
        return build_table_engine(spec, primes, table_max);
      }
      return spec.ell == 3 ? build_cubic_engine(spec) : build_powmod_engine(spec);
  }
  fail(ErrorKind::Usage, "unknown engine choice");
}

namespace {

ChunkReport sieve_chunk(std::uint32_t ell, u64 lo, u64 hi, const PrimeList& primes, const SieveOptions& opt) {
  ChunkReport chunk;
  chunk.lo = lo;
  chunk.hi = hi;
  const u64 special = static_cast<u64>(ell) * ell;
  for (u64 f : primes_in_range(lo, hi, primes)) {
    if (f % ell != 1) continue;
    const CharacterSpec spec = make_spec(f, ell);
    const auto engine = make_engine(spec, opt.engine, primes, opt.table_max);
    chunk.outcomes.push_back(sieve_conductor(f, ell, primes.primes(), *engine));
  }
  if (special >= lo && special <= hi) {
    SieveOutcome o;
    o.f = special;
    o.reason = SurvivorReason::SpecialConductor;
    const auto pos = std::lower_bound(chunk.outcomes.begin(), chunk.outcomes.end(), special,
                                      [](const SieveOutcome& x, u64 v) { return x.f < v; });
    chunk.outcomes.insert(pos, o);
  }
  return chunk;
}

}  // namespace

SieveReport sieve_range(std::uint32_t ell, u64 from, u64 to, const SieveOptions& options) {
  if (ell < 3 || !is_prime(ell)) fail(ErrorKind::Usage, "ell must be an odd prime");
  if (from < 2 || from > to) fail(ErrorKind::Usage, "range must satisfy 2 <= A <= B");
  if (to > kMaxConductor) fail(ErrorKind::Range, "B exceeds the supported conductor width (2^62)");
  if (options.workers < 1) fail(ErrorKind::Usage, "worker count must be >= 1");
  if (options.engine == EngineChoice::Cubic && ell != 3) {
    fail(ErrorKind::Usage, "the cubic engine requires ell = 3");
  }
  if (options.chunk_width < 1) fail(ErrorKind::Usage, "chunk width must be >= 1");

  const auto started = std::chrono::steady_clock::now();
  SieveReport report;
  report.ell = ell;
  report.from = from;
  report.to = to;
  report.engine = options.engine;

  u64 start = from;
  if (options.checkpoint && std::filesystem::exists(*options.checkpoint)) {
    const Checkpoint cp = read_checkpoint(*options.checkpoint);
    if (cp.ell != ell || cp.from != from || cp.to != to) {
      fail(ErrorKind::Usage, "checkpoint " + options.checkpoint->string() + " belongs to a different run");
    }
    report.survivors = cp.survivors;
    if (cp.done >= to) {
      report.seconds = 0.0;
      return report;
    }
    start = cp.done + 1;
    if (start > from) report.resumed_from = start;
  }

  const u64 limit = options.prime_limit ? options.prime_limit
                                        : std::max<u64>({1000, isqrt(to) + 1, 100'000});
  if (static_cast<u128>(limit) * limit < to) {
    fail(ErrorKind::Usage, "prime limit must be at least sqrt(B)");
  }
  const PrimeList primes = sieve_eratosthenes(limit);

  std::vector<std::pair<u64, u64>> chunks;
  for (u64 lo = start;; lo += options.chunk_width) {
    const u64 hi = (to - lo < options.chunk_width - 1) ? to : lo + options.chunk_width - 1;
    chunks.emplace_back(lo, hi);
    if (hi == to) break;
  }

  auto absorb = [&](ChunkReport& chunk) {
    for (SieveOutcome& o : chunk.outcomes) {
      if (o.f != static_cast<u64>(ell) * ell) ++report.conductors;
      report.evals += o.evals;
      if (o.eliminated()) {
        ++report.eliminated;
      } else {
        report.survivors.push_back(o.f);
      }
    }
    if (options.on_chunk) options.on_chunk(chunk);
    if (options.checkpoint) {
      write_checkpoint(*options.checkpoint, {ell, from, to, chunk.hi, report.survivors});
    }
    if (options.keep_outcomes) {
      std::move(chunk.outcomes.begin(), chunk.outcomes.end(), std::back_inserter(report.outcomes));
    }
  };

  const std::size_t batch = options.workers;
  for (std::size_t i = 0; i < chunks.size(); i += batch) {
    const std::size_t n = std::min(batch, chunks.size() - i);
    std::vector<ChunkReport> results(n);
    std::vector<std::exception_ptr> errors(n);
    auto work = [&](std::size_t j) {
      try {
        results[j] = sieve_chunk(ell, chunks[i + j].first, chunks[i + j].second, primes, options);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    };
    {
      std::vector<std::jthread> threads;
      for (std::size_t j = 1; j < n; ++j) threads.emplace_back(work, j);
      work(0);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (errors[j]) std::rethrow_exception(errors[j]);
      absorb(results[j]);
    }
  }

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace nonne
