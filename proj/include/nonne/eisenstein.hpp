// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <utility>

#include "nonne/character.hpp"

namespace nonne {

using i64 = std::int64_t;
using i128 = __int128;

/// a + b*omega in Z[omega], omega^2 + omega + 1 = 0.
struct EisensteinInt {
  i64 a = 0;
  i64 b = 0;

  constexpr EisensteinInt() = default;
  constexpr EisensteinInt(i64 a_, i64 b_ = 0) : a(a_), b(b_) {}

  static constexpr EisensteinInt omega() { return {0, 1}; }
  static constexpr EisensteinInt lambda() { return {1, -1}; }  // 1 - omega, norm 3

  constexpr bool is_zero() const noexcept { return a == 0 && b == 0; }
  friend constexpr bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

/// a^2 - ab + b^2.
i128 norm(const EisensteinInt& x);
EisensteinInt conj(const EisensteinInt& x);  // (a - b) - b*omega

// Ring operations throw ErrorKind::Range when a coordinate leaves int64.
EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x);
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);

bool is_unit(const EisensteinInt& x);

/// (-omega)^k for k in [0, 6): 1, -w, w^2, -1, w, -w^2.
EisensteinInt unit_power(int k);

struct DivMod {
  EisensteinInt quotient;
  EisensteinInt remainder;
};

/// x = q*y + r with norm(r) < norm(y); q rounds both coordinates of
/// x*conj(y)/norm(y) to the nearest integer.
DivMod divmod(const EisensteinInt& x, const EisensteinInt& y);

/// True when y divides x exactly.
bool divides(const EisensteinInt& y, const EisensteinInt& x);

EisensteinInt gcd(EisensteinInt x, EisensteinInt y);

/// Primary means x == 2 (mod 3), i.e. a == 2 and b == 0 (mod 3).
bool is_primary(const EisensteinInt& x);

struct PrimaryAssociate {
  EisensteinInt primary;
  int unit = 0;  // input == unit_power(unit) * primary
};

/// Unique associate in the primary class. Requires 3 not dividing norm(x).
PrimaryAssociate primary_associate(const EisensteinInt& x);

/// Primary prime over f: gcd(omega - w, f) with w^2 + w + 1 == 0 (mod f).
EisensteinInt prime_over(u64 f, u64 w);

/// Exponent j of the cubic residue symbol (x/y)_3 = omega^j, extended
/// multiplicatively to composite y. Requires gcd(x, y) a unit and
/// 3 not dividing norm(y).
int cubic_symbol(const EisensteinInt& x, const EisensteinInt& y);

/// Exponentiation oracle for prime y: j with x^((norm(y)-1)/3) == omega^j (mod y).
int cubic_symbol_by_power(const EisensteinInt& x, const EisensteinInt& y);

/// Character engine for ell = 3 via chi(n) = (n/pi)_3, pi = prime_over(f, w).
std::unique_ptr<CharacterEngine> build_cubic_engine(const CharacterSpec& spec);

}  // namespace nonne
