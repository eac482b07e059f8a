// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "nonne/eisenstein.hpp"

#include <limits>
#include <string>

#include "nonne/error.hpp"

namespace nonne {

namespace {

[[noreturn]] void overflow() { fail(ErrorKind::Range, "Eisenstein integer arithmetic overflow"); }

i128 add128(i128 x, i128 y) {
  i128 r;
  if (__builtin_add_overflow(x, y, &r)) overflow();
  return r;
}

i128 sub128(i128 x, i128 y) {
  i128 r;
  if (__builtin_sub_overflow(x, y, &r)) overflow();
  return r;
}

i128 mul128(i128 x, i128 y) {
  i128 r;
  if (__builtin_mul_overflow(x, y, &r)) overflow();
  return r;
}

i64 narrow(i128 x) {
  if (x > std::numeric_limits<i64>::max() || x < std::numeric_limits<i64>::min()) overflow();
  return static_cast<i64>(x);
}

i128 floor_div(i128 x, i128 d) {  // d > 0
  i128 q = x / d;
  if ((x % d != 0) && (x < 0)) --q;
  return q;
}

// nearest integer to x / d, d > 0
i128 round_div(i128 x, i128 d) { return floor_div(add128(mul128(x, 2), d), mul128(d, 2)); }

int mod3(i64 v) { return static_cast<int>(((v % 3) + 3) % 3); }

}  // namespace

i128 norm(const EisensteinInt& x) {
  const i128 a = x.a, b = x.b;
  return add128(sub128(mul128(a, a), mul128(a, b)), mul128(b, b));
}

EisensteinInt conj(const EisensteinInt& x) {
  return {narrow(static_cast<i128>(x.a) - x.b), narrow(-static_cast<i128>(x.b))};
}

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
  return {narrow(static_cast<i128>(x.a) + y.a), narrow(static_cast<i128>(x.b) + y.b)};
}

EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
  return {narrow(static_cast<i128>(x.a) - y.a), narrow(static_cast<i128>(x.b) - y.b)};
}

EisensteinInt operator-(const EisensteinInt& x) {
  return {narrow(-static_cast<i128>(x.a)), narrow(-static_cast<i128>(x.b))};
}

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w
  const i128 ac = mul128(x.a, y.a), bd = mul128(x.b, y.b);
  const i128 ad = mul128(x.a, y.b), bc = mul128(x.b, y.a);
  return {narrow(sub128(ac, bd)), narrow(sub128(add128(ad, bc), bd))};
}

bool is_unit(const EisensteinInt& x) { return norm(x) == 1; }

EisensteinInt unit_power(int k) {
  static constexpr EisensteinInt kUnits[6] = {{1, 0}, {0, -1}, {-1, -1}, {-1, 0}, {0, 1}, {1, 1}};
  return kUnits[((k % 6) + 6) % 6];
}

DivMod divmod(const EisensteinInt& x, const EisensteinInt& y) {
  if (y.is_zero()) fail(ErrorKind::Domain, "Eisenstein division by zero");
  const i128 n = norm(y);
  // x * conj(y) with 128-bit coordinates
  const EisensteinInt cy = conj(y);
  const i128 ac = mul128(x.a, cy.a), bd = mul128(x.b, cy.b);
  const i128 ad = mul128(x.a, cy.b), bc = mul128(x.b, cy.a);
  const i128 p = sub128(ac, bd);
  const i128 q = sub128(add128(ad, bc), bd);
  const EisensteinInt quot{narrow(round_div(p, n)), narrow(round_div(q, n))};
  // remainder = x - quot * y, computed wide since quot * y may exceed int64 transiently
  const i128 qa = mul128(quot.a, y.a), qb = mul128(quot.b, y.b);
  const i128 qab = add128(mul128(quot.a, y.b), mul128(quot.b, y.a));
  const i128 ra = sub128(x.a, sub128(qa, qb));
  const i128 rb = sub128(x.b, sub128(qab, qb));
  return {quot, {narrow(ra), narrow(rb)}};
}

bool divides(const EisensteinInt& y, const EisensteinInt& x) {
  if (y.is_zero()) return x.is_zero();
  return divmod(x, y).remainder.is_zero();
}

EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
  if (x.is_zero() && y.is_zero()) fail(ErrorKind::Domain, "gcd(0, 0) is undefined");
  while (!y.is_zero()) {
    EisensteinInt r = divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return x;
}

bool is_primary(const EisensteinInt& x) { return mod3(x.a) == 2 && mod3(x.b) == 0; }

PrimaryAssociate primary_associate(const EisensteinInt& x) {
  if (norm(x) % 3 == 0) fail(ErrorKind::Precondition, "primary associate needs norm coprime to 3");
  for (int k = 0; k < 6; ++k) {
    const EisensteinInt candidate = unit_power(6 - k) * x;
    if (is_primary(candidate)) return {candidate, k};
  }
  fail(ErrorKind::Precondition, "no primary associate found");
}

EisensteinInt prime_over(u64 f, u64 w) {
  if (f < 2 || f > static_cast<u64>(std::numeric_limits<i64>::max())) {
    fail(ErrorKind::Range, "prime_over: f out of range");
  }
  w %= f;
  if ((mul_mod(w, w, f) + w + 1) % f != 0) {
    fail(ErrorKind::Precondition, "w=" + std::to_string(w) + " is not a root of x^2+x+1 mod " +
                                      std::to_string(f));
  }
  const EisensteinInt g = gcd(EisensteinInt{-static_cast<i64>(w), 1}, EisensteinInt{static_cast<i64>(f), 0});
  if (norm(g) != static_cast<i128>(f)) {
    fail(ErrorKind::Precondition, "gcd(omega - w, f) does not have norm f; is f prime?");
  }
  return primary_associate(g).primary;
}

int cubic_symbol(const EisensteinInt& x_in, const EisensteinInt& y_in) {
  if (y_in.is_zero()) fail(ErrorKind::Precondition, "cubic symbol modulo zero");
  if (norm(y_in) % 3 == 0) fail(ErrorKind::Precondition, "cubic symbol needs 3 not dividing norm(y)");
  EisensteinInt y = primary_associate(y_in).primary;
  EisensteinInt x = x_in;
  int e = 0;
  const EisensteinInt lambda_conj = conj(EisensteinInt::lambda());  // 2 + omega
  while (true) {
    if (is_unit(y)) return e;
    x = divmod(x, y).remainder;
    if (x.is_zero()) fail(ErrorKind::Precondition, "cubic symbol undefined: arguments not coprime");

    // x = lambda^j * x1, divide by lambda as x * (2 + omega) / 3
    int j = 0;
    while (mod3(x.a + x.b) == 0) {
      const EisensteinInt t = x * lambda_conj;
      x = {t.a / 3, t.b / 3};
      ++j;
    }
    const PrimaryAssociate pa = primary_associate(x);

    // y = (3m - 1) + 3n*omega: (omega/y) = omega^(m+n), (lambda/y) = omega^(2m)
    const i64 m = (y.a + 1) / 3;
    const i64 n = y.b / 3;
    // unit (-omega)^k contributes (omega/y)^k; -1 is a cube
    e = (e + mod3(2 * m) * j + mod3(m + n) * pa.unit) % 3;

    if (is_unit(pa.primary)) return e;
    x = y;
    y = pa.primary;
  }
}

int cubic_symbol_by_power(const EisensteinInt& x, const EisensteinInt& y) {
  const i128 n = norm(y);
  if (n % 3 != 1) fail(ErrorKind::Precondition, "power oracle needs norm(y) == 1 mod 3");
  auto reduce = [&](const EisensteinInt& v) { return divmod(v, y).remainder; };
  EisensteinInt base = reduce(x);
  EisensteinInt acc{1, 0};
  for (i128 e = (n - 1) / 3; e > 0; e >>= 1) {
    if (e & 1) acc = reduce(acc * base);
    base = reduce(base * base);
  }
  EisensteinInt root{1, 0};
  for (int j = 0; j < 3; ++j) {
    if (divides(y, acc - root)) return j;
    root = root * EisensteinInt::omega();
  }
  fail(ErrorKind::Precondition, "power residue is not a cube root of unity; is y prime and coprime to x?");
}

namespace {

class CubicEngine final : public CharacterEngine {
 public:
  explicit CubicEngine(const CharacterSpec& spec)
      : CharacterEngine(spec), pi_(prime_over(spec.f, spec.w)) {}

  EngineKind kind() const noexcept override { return EngineKind::Cubic; }

  CharValue eval(u64 n) const override {
    n %= modulus();
    if (n == 0) return CharValue::zero();
    return CharValue::root(static_cast<std::uint32_t>(cubic_symbol(EisensteinInt{static_cast<i64>(n), 0}, pi_)));
  }

 private:
  EisensteinInt pi_;
};

}  // namespace

std::unique_ptr<CharacterEngine> build_cubic_engine(const CharacterSpec& spec) {
  if (spec.ell != 3) fail(ErrorKind::Usage, "the cubic-reciprocity engine requires ell = 3");
  return std::make_unique<CubicEngine>(spec);
}

}  // namespace nonne
