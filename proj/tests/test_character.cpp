// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "nonne/character.hpp"
#include "nonne/eisenstein.hpp"
#include "nonne/error.hpp"
#include "oracles.hpp"

using namespace nonne;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Usage;
}

}  // namespace

TEST_CASE("canonical root examples") {
  const CharacterSpec s7 = make_spec(7, 3);
  CHECK(s7.w == 4);
  CHECK(s7.n0 == 2);
  CHECK(s7.root_powers == std::vector<u64>{1, 4, 2});

  const CharacterSpec s13 = make_spec(13, 3);
  CHECK(s13.w == 3);
  CHECK(s13.n0 == 2);

  // 2 is a cube mod 31, so n0 moves to 3
  const CharacterSpec s31 = make_spec(31, 3);
  CHECK(oracle::power_mod_ltr(2, 10, 31) == 1);
  CHECK(s31.n0 == 3);
  CHECK(s31.w == oracle::power_mod_ltr(3, 10, 31));
}

TEST_CASE("make_spec errors") {
  CHECK(kind_of([] { make_spec(11, 3); }) == ErrorKind::NoCharacter);
  CHECK(kind_of([] { make_spec(15, 3); }) == ErrorKind::Precondition);
  CHECK(kind_of([] { make_spec(7, 4); }) == ErrorKind::Precondition);
  CHECK(kind_of([] { make_spec(3, 3); }) == ErrorKind::NoCharacter);
}

TEST_CASE("powmod engine small example") {
  const auto engine = build_powmod_engine(make_spec(7, 3));
  CHECK(engine->kind() == EngineKind::PowMod);
  CHECK(engine->eval(2) == CharValue::root(1));
  CHECK(engine->eval(1) == CharValue::root(0));
  CHECK(engine->eval(0).is_zero());
  CHECK(engine->eval(14).is_zero());
  CHECK(engine->eval(6) == CharValue::root(0));  // -1 is a cube
  CHECK(engine->eval(3) == CharValue::root(2));
}

TEST_CASE("table engine errors") {
  const CharacterSpec spec = make_spec(1'000'003, 3);
  CHECK(kind_of([&] { build_table_engine(spec, 1000); }) == ErrorKind::Resource);
}

TEST_CASE("table engine honours the environment cap") {
  ::setenv("NONNE_TABLE_MAX", "500", 1);
  CHECK(table_max_from_env() == 500);
  ::unsetenv("NONNE_TABLE_MAX");
  CHECK(table_max_from_env() == kDefaultTableMax);
}

TEST_CASE("engines agree with the oracle for every f <= 3000 and ell in {3,5,7}") {
  const PrimeList primes = sieve_eratosthenes(100'000);
  std::size_t checked = 0;
  for (std::uint32_t ell : {3u, 5u, 7u}) {
    for (u64 f = ell + 1; f <= 3000; ++f) {
      if (f % ell != 1 || !is_prime(f)) continue;
      const CharacterSpec spec = make_spec(f, ell);
      const auto table = build_table_engine(spec, primes);
      const auto power = build_powmod_engine(spec);
      std::unique_ptr<CharacterEngine> cubic;
      if (ell == 3) cubic = build_cubic_engine(spec);
      for (u64 n = 0; n < 2 * f; ++n) {
        const int e = oracle::char_exponent(n, f, ell, spec.w);
        const CharValue expected = e < 0 ? CharValue::zero() : CharValue::root(e);
        CHECK_MESSAGE(table->eval(n) == expected, "f=" << f << " n=" << n);
        CHECK_MESSAGE(power->eval(n) == expected, "f=" << f << " n=" << n);
        if (cubic) CHECK_MESSAGE(cubic->eval(n) == expected, "f=" << f << " n=" << n);
        ++checked;
      }
    }
  }
  CHECK(checked > 100'000);
}

TEST_CASE("multiplicativity fuzz on large conductors") {
  std::mt19937_64 rng(17);
  for (std::uint32_t ell : {3u, 5u, 7u, 11u, 97u}) {
    u64 f = 9'999'999'000ULL / ell * ell + 1;
    while (!is_prime(f)) f += ell;
    const auto engine = build_powmod_engine(make_spec(f, ell));
    for (int i = 0; i < 2000; ++i) {
      const u64 m = rng() % (4 * f), n = rng() % (4 * f);
      const CharValue lhs = engine->eval(static_cast<u64>(static_cast<u128>(m) * n % f));
      CHECK(lhs == engine->eval(m).times(engine->eval(n), ell));
      CHECK(engine->eval(m + f) == engine->eval(m));
    }
  }
}

TEST_CASE("values are equidistributed over a full residue system") {
  for (auto [f, ell] : {std::pair<u64, std::uint32_t>{1009, 3}, {1021, 5}, {2003, 7}, {3499, 11}}) {
    const auto engine = build_powmod_engine(make_spec(f, ell));
    std::vector<u64> counts(ell, 0);
    u64 zeros = 0;
    for (u64 n = 0; n < f; ++n) {
      const CharValue v = engine->eval(n);
      if (v.is_zero()) ++zeros; else ++counts[v.exponent()];
    }
    CHECK(zeros == 1);
    for (u64 c : counts) CHECK(c == (f - 1) / ell);
  }
}

TEST_CASE("primitive root examples") {
  const PrimeList primes = sieve_eratosthenes(1000);
  CHECK(primitive_root(7, primes) == 3);
  CHECK(primitive_root(13, primes) == 2);
  CHECK(primitive_root(41, primes) == 6);
  CHECK(primitive_root(9'999'999'967ULL, primes) != 0);
}

TEST_CASE("interval sums match direct complex summation") {
  std::mt19937_64 rng(23);
  for (auto [f, ell] : {std::pair<u64, std::uint32_t>{7, 3}, {271, 3}, {1021, 5}, {20011, 3}}) {
    const CharacterSpec spec = make_spec(f, ell);
    const auto engine = build_powmod_engine(spec);
    for (int i = 0; i < 20; ++i) {
      const auto start = static_cast<std::int64_t>(rng() % (3 * f)) - static_cast<std::int64_t>(f);
      const u64 len = 1 + rng() % (2 * f);
      const IntervalSumResult got = interval_sum(*engine, start, len);
      CHECK(got.magnitude == doctest::Approx(oracle::brute_interval_sum(start, len, f, ell, spec.w)).epsilon(1e-9));
      u64 nonzero = 0;
      for (long long n = start + 1; n <= start + static_cast<long long>(len); ++n) {
        if (((n % static_cast<long long>(f)) + static_cast<long long>(f)) % static_cast<long long>(f) != 0) ++nonzero;
      }
      CHECK(got.total() == nonzero);
    }
  }
}

TEST_CASE("full-period interval sum vanishes") {
  const auto engine = build_powmod_engine(make_spec(1009, 3));
  CHECK(interval_sum(*engine, 0, 1009).magnitude == doctest::Approx(0.0).epsilon(1e-9));
}
