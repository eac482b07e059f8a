// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "nonne/selfcheck.hpp"

#include <chrono>
#include <sstream>

#include "nonne/character.hpp"
#include "nonne/eisenstein.hpp"
#include "nonne/heilbronn.hpp"
#include "nonne/reference_values.hpp"

namespace nonne {

namespace {

class Suite {
 public:
  Suite(SelfcheckResult& result, std::ostream* log) : result_(result), log_(log) {}

  void check(bool ok, const std::string& name) {
    if (ok) return;
    result_.failures.push_back(name);
    if (log_) *log_ << "FAIL " << name << '\n';
  }

  void finish(const std::string& suite, std::size_t failures_before) {
    const bool ok = result_.failures.size() == failures_before;
    if (ok) result_.passed.push_back(suite);
    if (log_) *log_ << (ok ? "ok   " : "FAIL ") << suite << '\n';
  }

  std::size_t mark() const { return result_.failures.size(); }

 private:
  SelfcheckResult& result_;
  std::ostream* log_;
};

void engine_agreement(Suite& s, u64 fmax) {
  const std::size_t before = s.mark();
  const PrimeList primes = sieve_eratosthenes(std::max<u64>(fmax, 1000));
  for (std::uint32_t ell : {3u, 5u, 7u}) {
    for (u64 f : primes) {
      if (f > fmax) break;
      if (f % ell != 1) continue;
      const CharacterSpec spec = make_spec(f, ell);
      const auto table = build_table_engine(spec, primes);
      const auto powmod = build_powmod_engine(spec);
      const auto cubic = ell == 3 ? build_cubic_engine(spec) : nullptr;
      bool ok = true;
      for (u64 n = 0; n < 2 * f && ok; ++n) {
        const CharValue v = table->eval(n);
        ok = v == powmod->eval(n) && (!cubic || v == cubic->eval(n));
      }
      s.check(ok, "engine agreement ell=" + std::to_string(ell) + " f=" + std::to_string(f));
    }
  }
  s.finish("engine agreement (f <= " + std::to_string(fmax) + ")", before);
}

void cubic_oracle(Suite& s, u64 fmax) {
  const std::size_t before = s.mark();
  const PrimeList primes = sieve_eratosthenes(std::max<u64>(fmax, 10));
  for (u64 f : primes) {
    if (f > fmax) break;
    if (f % 3 != 1) continue;
    const CharacterSpec spec = make_spec(f, 3);
    const EisensteinInt pi = prime_over(f, spec.w);
    bool ok = true;
    for (u64 n = 1; n < f && ok; ++n) {
      const EisensteinInt x{static_cast<i64>(n), 0};
      ok = cubic_symbol(x, pi) == cubic_symbol_by_power(x, pi);
    }
    s.check(ok, "cubic symbol oracle f=" + std::to_string(f));
  }
  s.finish("cubic symbol vs power oracle (f <= " + std::to_string(fmax) + ")", before);
}

void candidate_lists(Suite& s) {
  const std::size_t before = s.mark();
  for (const auto& row : reference::candidate_conductors()) {
    if (row.ell != 3 && row.ell != 5) continue;
    const SieveReport report = sieve_range(row.ell, 2, 10'000);
    s.check(report.survivors == row.conductors, "candidates row ell=" + std::to_string(row.ell));
  }
  s.finish("candidate conductors f <= 10^4, ell in {3, 5}", before);
}

void constant_tables(Suite& s, const SelfcheckOptions& opt) {
  const std::size_t before = s.mark();
  auto burgess = opt.burgess_source ? opt.burgess_source
                                    : [](int r) { return bounds::burgess_C({.r = r}); };
  for (const auto& [r, units] : reference::kBurgessC) {
    s.check(burgess(r) == bounds::Decimal{units, -4}, "table c-burgess row r=" + std::to_string(r));
  }
  for (const auto& [k, units] : reference::kD1) {
    const auto c = burgess(k).value();
    s.check(bounds::d_constant(k, 2, 3, c) == bounds::Decimal{units, -4}, "table d1 row k=" + std::to_string(k));
  }
  for (const auto& [k, units] : reference::kD2) {
    const auto c = burgess(k).value();
    s.check(bounds::d_constant(k, 101, 103, c) == bounds::Decimal{units, -4},
            "table d2 row k=" + std::to_string(k));
  }
  for (const auto& e : reference::kE) {
    s.check(bounds::e_constant(e.k) == bounds::Decimal{e.mantissa, e.exponent},
            "table e row k=" + std::to_string(e.k));
  }
  s.finish("constant tables", before);
}

}  // namespace

SelfcheckResult run_selfcheck(const SelfcheckOptions& options, std::ostream* log) {
  SelfcheckResult result;
  Suite suite(result, log);
  engine_agreement(suite, options.quick ? 2'000 : 10'000);
  cubic_oracle(suite, options.quick ? 400 : 2'000);
  candidate_lists(suite);
  constant_tables(suite, options);
  return result;
}

}  // namespace nonne
