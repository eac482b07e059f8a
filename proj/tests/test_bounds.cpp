// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nonne/bounds.hpp"
#include "nonne/error.hpp"
#include "nonne/reference_values.hpp"
#include "oracles.hpp"

using namespace nonne;
using namespace nonne::bounds;

TEST_CASE("decimal rounding") {
  CHECK(round_up_decimals(10.03651, 4) == Decimal(100366, -4));
  CHECK(round_up_decimals(2.0, 4) == Decimal(20000, -4));
  CHECK(round_up_decimals(10.0366, 4).fixed() == "10.0366");
  CHECK(round_up_significant(3493.51, 5) == Decimal(34936, -1));
  CHECK(round_up_significant(0.12341, 2) == Decimal(13, -2));
  CHECK(round_up_significant(3493.6, 5).scientific() == "3.4936e3");
}

TEST_CASE("Burgess constants table") {
  for (auto [r, expected] : reference::kBurgessC) {
    const Decimal c = burgess_C({.r = r});
    CHECK_MESSAGE(c == Decimal(expected, -4), "r=" << r);
  }
  const BurgessConstant c2 = burgess_constant({});
  CHECK(c2.value.value() >= std::max({c2.h1, c2.h2, 1.0}));
  CHECK(c2.value.value() - std::max({c2.h1, c2.h2, 1.0}) < 1e-4);
}

TEST_CASE("Burgess constant domain errors") {
  CHECK_THROWS_AS(burgess_constant({.r = 1}), Error);
  CHECK_THROWS_AS(burgess_constant({.r = 2, .d = 4.0}), Error);
}

TEST_CASE("D1 and D2 tables") {
  for (auto [k, expected] : reference::kD1) CHECK_MESSAGE(d1(k) == Decimal(expected, -4), "k=" << k);
  for (auto [k, expected] : reference::kD2) CHECK_MESSAGE(d2(k) == Decimal(expected, -4), "k=" << k);
}

TEST_CASE("E table") {
  for (const auto& row : reference::kE) {
    CHECK_MESSAGE(e_constant(row.k) == Decimal(row.mantissa, row.exponent), "k=" << row.k);
  }
}

TEST_CASE("E' is 932 * 711 * D1^k rounded up to five figures") {
  for (int k = 2; k <= 8; ++k) {
    const double raw = 932.0 * 711.0 * std::pow(d1(k).value(), k);
    const Decimal e = eprime_constant(k);
    CHECK(e.value() >= raw * (1 - 1e-12));
    CHECK(e.value() < raw * (1 + 1e-4));
    CHECK(e.mantissa >= 10000);
    CHECK(e.mantissa <= 99999);
  }
}

TEST_CASE("k rule") {
  CHECK(cl_k(3) == 5);
  CHECK(cl_k(5) == 4);
  CHECK(cl_k(59) == 4);
  CHECK(cl_k(61) == 3);
  CHECK(cl_k(97) == 3);
}

TEST_CASE("C_ell bounds hold and sit at or below the published powers of ten") {
  for (auto [ell, published] : reference::kClExponent) {
    const ClResult res = cl_bound(ell);
    CHECK_MESSAGE(res.holds_at_bound, "ell=" << ell);
    CHECK_MESSAGE(res.monotone_beyond, "ell=" << ell);
    CHECK_MESSAGE(res.exponent <= published, "ell=" << ell);
    CHECK(res.k == cl_k(ell));
    CHECK(res.log10_crossing <= res.exponent);
    CHECK(res.log10_crossing > res.exponent - 1);
    CHECK(check_db_inequality_log(ell, res.k, res.exponent * std::log(10.0)));
    CHECK_FALSE(check_db_inequality_log(ell, res.k, (res.log10_crossing - 0.01) * std::log(10.0)));
  }
}

TEST_CASE("C_ell within one order for ell = 3 and 97") {
  CHECK(std::abs(cl_bound(3).exponent - 70) <= 1);
  CHECK(std::abs(cl_bound(97).exponent - 110) <= 1);
}

TEST_CASE("crossing decreases as the inequality loosens in ell") {
  double prev = 0.0;
  for (std::uint32_t ell : {5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    const double x = db_crossing_log10(ell, 4);
    CHECK(x > prev);
    prev = x;
  }
}

namespace {

// least f0 with the inequality true at every f >= f0, by integer bisection on
// an independent transcription
u64 oracle_threshold(double c, double a, double b, std::uint32_t ell) {
  auto holds = [&](double f) { return c * (ell - 1) * std::sqrt(f) * std::log(a * f) + b <= f; };
  u64 lo = 1, hi = 2;
  while (!holds(static_cast<double>(hi))) hi *= 2;
  while (hi - lo > 1) {
    const u64 mid = lo + (hi - lo) / 2;
    (holds(static_cast<double>(mid)) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

TEST_CASE("special thresholds") {
  for (std::uint32_t ell : {3u, 5u, 7u, 11u}) {
    const u64 t1 = special_threshold(1, ell), t2 = special_threshold(2, ell);
    CHECK(t1 == oracle_threshold(72, 4, 35, ell));
    CHECK(t2 == oracle_threshold(507, 9, 448, ell));
    CHECK(special_inequality(1, ell, static_cast<double>(t1)));
    CHECK_FALSE(special_inequality(1, ell, static_cast<double>(t1 - 1)));
    CHECK(special_inequality(2, ell, static_cast<double>(t2)));
    CHECK_FALSE(special_inequality(2, ell, static_cast<double>(t2 - 1)));
  }
  CHECK(special_threshold(1, 3) == 5'986'671);
  CHECK(special_threshold(1, 3) <= 10'000'000);
  CHECK(special_threshold(1, 5) > special_threshold(1, 3));
}

TEST_CASE("pisum small case") {
  // primes 2, 3, 5, 7: (0 + 1/3 + 2/5 + 3/7) / 4
  const PisumResult res = verify_pisum(10);
  CHECK(res.max_ratio == doctest::Approx((1.0 / 3 + 2.0 / 5 + 3.0 / 7) / 4).epsilon(1e-12));
  CHECK(res.argmax == 7);
  CHECK(res.checked == 4);
}

TEST_CASE("pisum stays below one third up to 10^5") {
  const PisumResult res = verify_pisum(100'000);
  CHECK(res.max_ratio < 1.0 / 3);
  CHECK(res.checked == 9592);
}

TEST_CASE("primorial") {
  CHECK(primorial_below(2.0) == 1);
  CHECK(primorial_below(7.5) == 210);
  CHECK(primorial_below(1000.0) == ~u128{0});
}

TEST_CASE("coprime lemma small ranges") {
  const CoprimeLemmaReport r5 = verify_prime_coprime_lemma(5);
  CHECK(r5.ok());
  const CoprimeLemmaReport r = verify_prime_coprime_lemma(100'000);
  CHECK(r.ok());
  CHECK(r.checked_3 == 9592 - 2);
  CHECK(r.checked_21 == 9592 - 3);
}
