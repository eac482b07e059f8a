// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "nonne/eisenstein.hpp"
#include "nonne/error.hpp"
#include "nonne/heilbronn.hpp"
#include "nonne/reference_values.hpp"
#include "oracles.hpp"

using namespace nonne;
namespace fs = std::filesystem;

namespace {

const PrimeList& base_primes() {
  static const PrimeList primes = sieve_eratosthenes(200'000);
  return primes;
}

fs::path temp_path(const std::string& name) {
  const fs::path dir = fs::path(NONNE_TEST_TMPDIR) / "heilbronn";
  fs::create_directories(dir);
  return dir / name;
}

// Direct reading of the witness conditions using the oracle character.
bool oracle_condition1(u64 f, u64 q1, u64 q2, u64 r) {
  const u64 w = make_spec(f, 3).w;
  const int cq2 = oracle::char_exponent(q2, f, 3, w), cr = oracle::char_exponent(r, f, 3, w);
  if (cq2 < 0 || cr < 0 || (cq2 + cr) % 3 != 0) return false;
  if (r % q1 == 0 || r % q2 == 0) return false;
  for (u64 k = 1; k < q1; ++k) {
    if ((r * q2 * k) % (q1 * q1) == f % (q1 * q1)) return false;
  }
  return (q1 - 1) * (q2 * r - 1) <= f;
}

}  // namespace

TEST_CASE("witness condition on known witnesses") {
  for (auto [f, q1, q2, r] : {std::tuple<u64, u64, u64, u64>{9'999'999'673ULL, 5, 7, 17},
                              {9'999'999'967ULL, 5, 7, 11},
                              {9'999'999'703ULL, 2, 3, 11}}) {
    const auto engine = build_cubic_engine(make_spec(f, 3));
    CHECK(oracle_condition1(f, q1, q2, r));
    CHECK(check_condition1(f, 3, q1, q2, r, *engine));
    CHECK(validate_witness({f, 3, q1, q2, r}, *engine));
  }
}

TEST_CASE("witness condition rejects tampered witnesses") {
  const u64 f = 9'999'999'673ULL;
  const auto engine = build_cubic_engine(make_spec(f, 3));
  CHECK_FALSE(validate_witness({f, 3, 5, 7, 19}, *engine));
  CHECK_FALSE(validate_witness({f, 3, 2, 7, 17}, *engine));  // q1 not minimal
  CHECK_FALSE(validate_witness({f, 3, 7, 5, 17}, *engine));
  CHECK_FALSE(validate_witness({f + 6, 3, 5, 7, 17}, *engine));
}

TEST_CASE("witness condition agrees with the oracle on small conductors") {
  int checked = 0;
  for (u64 f = 7; f < 3000; f += 6) {
    if (!is_prime(f)) continue;
    const auto engine = build_powmod_engine(make_spec(f, 3));
    std::vector<u64> nonres;
    for (u64 p : base_primes()) {
      if (p >= f || nonres.size() == 2) break;
      if (!engine->eval(p).is_one()) nonres.push_back(p);
    }
    if (nonres.size() < 2) continue;
    for (u64 r : base_primes()) {
      if (r >= f) break;
      if (r <= nonres[1]) continue;
      CHECK(check_condition1(f, 3, nonres[0], nonres[1], r, *engine) ==
            oracle_condition1(f, nonres[0], nonres[1], r));
      ++checked;
    }
  }
  CHECK(checked > 10'000);
}

TEST_CASE("sufficient conditions 2 to 5") {
  CHECK(check_condition_n(4, 9'999'999'781ULL, 2, 5, 7) == Applicability::Holds);
  CHECK(check_condition_n(5, 9'999'999'781ULL, 2, 5, 7) == Applicability::Inapplicable);
  CHECK(check_condition_n(3, 9'999'999'781ULL, 7, 11, 13) == Applicability::Inapplicable);
  CHECK(check_condition_n(4, 100, 2, 5, 7) == Applicability::Fails);
  CHECK_THROWS_AS(check_condition_n(6, 100, 2, 3, 5), Error);
}

TEST_CASE("forbidden residues") {
  // f q2^-1 k^-1 mod q1^2 for f = 9999999673, q1 = 5, q2 = 7
  const u64 f = 9'999'999'673ULL;
  std::vector<u64> expected;
  for (u64 k = 1; k < 5; ++k) {
    for (u64 x = 0; x < 25; ++x) {
      if ((x * 7 * k) % 25 == f % 25) expected.push_back(x);
    }
  }
  std::sort(expected.begin(), expected.end());
  CHECK(forbidden_residues(f, 5, 7) == expected);
  CHECK(forbidden_residues(f, 2, 3).size() == 1);
}

TEST_CASE("single conductor outcomes") {
  const auto& primes = base_primes();
  SUBCASE("157 survives") {
    const auto engine = build_powmod_engine(make_spec(157, 3));
    const SieveOutcome out = sieve_conductor(157, 3, primes.primes(), *engine);
    CHECK_FALSE(out.eliminated());
  }
  SUBCASE("163 is eliminated") {
    const auto engine = build_powmod_engine(make_spec(163, 3));
    const SieveOutcome out = sieve_conductor(163, 3, primes.primes(), *engine);
    REQUIRE(out.eliminated());
    CHECK(oracle_condition1(163, out.witness->q1, out.witness->q2, out.witness->r));
  }
  SUBCASE("9999999703") {
    const auto engine = build_cubic_engine(make_spec(9'999'999'703ULL, 3));
    const SieveOutcome out = sieve_conductor(9'999'999'703ULL, 3, primes.primes(), *engine);
    REQUIRE(out.eliminated());
    CHECK(*out.witness == Witness{9'999'999'703ULL, 3, 2, 3, 11});
    CHECK(out.evals > 0);
  }
  SUBCASE("engine mismatch is a usage error") {
    const auto engine = build_powmod_engine(make_spec(163, 3));
    CHECK_THROWS_AS(sieve_conductor(157, 3, primes.primes(), *engine), Error);
  }
}

TEST_CASE("candidate conductors up to 10^4 for ell = 3, 5, 7") {
  for (const auto& row : reference::candidate_conductors()) {
    if (row.ell > 7) continue;
    CHECK_MESSAGE(sieve_range(row.ell, 2, 10'000).survivors == row.conductors, "ell=" << row.ell);
  }
}

TEST_CASE("empty and degenerate ranges") {
  CHECK(sieve_range(3, 10, 12).survivors.empty());
  CHECK(sieve_range(3, 9, 9).survivors == std::vector<u64>{9});
  CHECK(sieve_range(5, 25, 25).survivors == std::vector<u64>{25});
  CHECK_THROWS_AS(sieve_range(3, 20, 10), Error);
  CHECK_THROWS_AS(sieve_range(4, 2, 10), Error);
  CHECK_THROWS_AS(sieve_range(3, 2, kMaxConductor + 1), Error);
}

TEST_CASE("results do not depend on worker count or engine") {
  SieveOptions base;
  base.chunk_width = 4096;
  const SieveReport ref = sieve_range(3, 2, 200'000, base);
  for (unsigned workers : {2u, 8u}) {
    SieveOptions opt = base;
    opt.workers = workers;
    CHECK(sieve_range(3, 2, 200'000, opt).survivors == ref.survivors);
  }
  for (EngineChoice e : {EngineChoice::Table, EngineChoice::PowMod, EngineChoice::Cubic}) {
    SieveOptions opt = base;
    opt.engine = e;
    opt.workers = 4;
    const SieveReport rep = sieve_range(3, 2, 200'000, opt);
    CHECK(rep.survivors == ref.survivors);
    CHECK(rep.evals == ref.evals);
  }
  for (std::uint32_t ell : {5u, 11u}) {
    SieveOptions a = base, b = base;
    a.engine = EngineChoice::Table;
    b.engine = EngineChoice::PowMod;
    b.workers = 3;
    CHECK(sieve_range(ell, 2, 100'000, a).survivors == sieve_range(ell, 2, 100'000, b).survivors);
  }
}

TEST_CASE("outcomes are complete and every witness validates") {
  SieveOptions opt;
  opt.keep_outcomes = true;
  const SieveReport rep = sieve_range(3, 2, 20'000, opt);
  u64 expected = 0;
  for (u64 f = 7; f <= 20'000; f += 6) expected += is_prime(f) ? 1 : 0;
  CHECK(rep.conductors == expected);
  CHECK(rep.outcomes.size() == expected + 1);  // plus the special conductor 9
  for (const auto& out : rep.outcomes) {
    if (!out.eliminated()) continue;
    const auto engine = build_powmod_engine(make_spec(out.f, 3));
    CHECK(validate_witness(*out.witness, *engine));
  }
  CHECK(rep.average_evals() > 0);
}

TEST_CASE("checkpoint interruption and resume") {
  const fs::path cp = temp_path("resume.ckpt");
  fs::remove(cp);
  SieveOptions opt;
  opt.chunk_width = 10'000;
  opt.checkpoint = cp;
  int chunks = 0;
  opt.on_chunk = [&](const ChunkReport&) {
    if (++chunks == 3) throw std::runtime_error("interrupted");
  };
  CHECK_THROWS_AS(sieve_range(3, 2, 100'000, opt), std::runtime_error);
  REQUIRE(fs::exists(cp));
  const Checkpoint saved = read_checkpoint(cp);
  CHECK(saved.ell == 3);
  CHECK(saved.done > 2);
  CHECK(saved.done < 100'000);

  opt.on_chunk = nullptr;
  const SieveReport resumed = sieve_range(3, 2, 100'000, opt);
  CHECK(resumed.resumed_from == saved.done + 1);
  CHECK(resumed.survivors == sieve_range(3, 2, 100'000).survivors);

  // a different run with the same checkpoint file is refused
  CHECK_THROWS_AS(sieve_range(3, 2, 50'000, opt), Error);
  fs::remove(cp);
}

TEST_CASE("checkpoint file round trip and parse errors") {
  const fs::path cp = temp_path("roundtrip.ckpt");
  write_checkpoint(cp, {3, 2, 10'000, 5000, {7, 9, 13}});
  const Checkpoint back = read_checkpoint(cp);
  CHECK(back.done == 5000);
  CHECK(back.survivors == std::vector<u64>{7, 9, 13});
  {
    std::ofstream out(cp);
    out << "ell=3 A=2 B=10000\ndone=x\n";
  }
  try {
    read_checkpoint(cp);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
  fs::remove(cp);
}

TEST_CASE("witness text format") {
  for (auto line : reference::kCubicWitnessLines) {
    const auto w = parse_witness(line);
    REQUIRE(w.has_value());
    CHECK(format_witness(*w) == line);
  }
  CHECK_FALSE(parse_witness("f=7, q1=2, q2=3").has_value());
  CHECK_FALSE(parse_witness("f=7,q1=2,q2=3,r=5").has_value());
  CHECK_FALSE(parse_witness("f=x, q1=2, q2=3, r=5").has_value());
  CHECK(parse_witness("  f=7, q1=2, q2=3, r=5 \n").has_value());
}

TEST_CASE("engine choice parsing") {
  CHECK(parse_engine_choice("auto") == EngineChoice::Auto);
  CHECK(parse_engine_choice("cubic") == EngineChoice::Cubic);
  CHECK_FALSE(parse_engine_choice("fast").has_value());
  CHECK(avg_eval_estimate(3) == doctest::Approx(9.0));
}
