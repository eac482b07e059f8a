// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Published values that the recomputations must reproduce.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace nonne::reference {

struct CandidateRow {
  std::uint32_t ell;
  std::vector<std::uint64_t> conductors;  // all candidates with f <= 10^4
};

inline const std::vector<CandidateRow>& candidate_conductors() {
  static const std::vector<CandidateRow> rows = {
      {3, {7, 9, 13, 19, 31, 37, 43, 61, 67, 73, 103, 109, 127, 157, 277, 439, 643, 997, 1597}},
      {5, {11, 25, 31, 41, 61, 71, 151, 311, 431}},
      {7, {29, 43, 49, 127, 239, 673, 701, 911}},
      {11, {23, 67, 89, 121, 331, 353, 419, 617}},
      {13, {53, 79, 131, 157, 169, 313, 443, 521, 937}},
      {17, {137, 289, 443, 1259, 2687}},
      {19, {191, 229, 361, 1103}},
      {23, {47, 139, 277, 461, 529, 599, 691, 967, 1013, 1289}},
      {29, {59, 233, 523, 841, 929, 2843, 3191}},
  };
  return rows;
}

/// The last ten cubic conductors below 10^10 with their witnesses.
inline constexpr std::array<std::string_view, 10> kCubicWitnessLines = {
    "f=9999999673, q1=5, q2=7, r=17",  "f=9999999679, q1=2, q2=3, r=19",
    "f=9999999703, q1=2, q2=3, r=11",  "f=9999999727, q1=7, q2=11, r=19",
    "f=9999999769, q1=3, q2=5, r=37",  "f=9999999781, q1=2, q2=5, r=7",
    "f=9999999787, q1=3, q2=5, r=29",  "f=9999999817, q1=2, q2=3, r=13",
    "f=9999999943, q1=5, q2=7, r=19",  "f=9999999967, q1=5, q2=7, r=11",
};

/// C(r), r = 2..15, in units of 10^-4.
inline constexpr std::array<std::pair<int, std::int64_t>, 14> kBurgessC = {{
    {2, 100366}, {3, 49539}, {4, 36493}, {5, 30356}, {6, 26765}, {7, 24400}, {8, 22721},
    {9, 21467}, {10, 20492}, {11, 19712}, {12, 19073}, {13, 18540}, {14, 18088}, {15, 17700},
}};

/// D1(k), k = 2..15, in units of 10^-4 (q1 arbitrary).
inline constexpr std::array<std::pair<int, std::int64_t>, 14> kD1 = {{
    {2, 891550}, {3, 431104}, {4, 319985}, {5, 269751}, {6, 241129}, {7, 222635}, {8, 209692},
    {9, 200133}, {10, 192768}, {11, 186920}, {12, 182160}, {13, 178211}, {14, 174877}, {15, 172028},
}};

/// D2(k), k = 2..15, in units of 10^-4 (q1 > 100).
inline constexpr std::array<std::pair<int, std::int64_t>, 14> kD2 = {{
    {2, 135958}, {3, 66415}, {4, 50420}, {5, 43220}, {6, 39103}, {7, 36430}, {8, 34550},
    {9, 33154}, {10, 32075}, {11, 31215}, {12, 30513}, {13, 29929}, {14, 29434}, {15, 29011},
}};

struct ScientificEntry {
  int k;
  std::int64_t mantissa;  // five significant digits
  int exponent;           // value = mantissa * 10^exponent
};

/// E(k), k = 2..8.
inline constexpr std::array<ScientificEntry, 7> kE = {{
    {2, 34936, -1}, {3, 55369, -1}, {4, 12215, 0}, {5, 28503, 0},
    {6, 67566, 0}, {7, 16095, 1}, {8, 38375, 1},
}};

/// C_ell = 10^exponent for odd primes ell < 100.
inline constexpr std::array<std::pair<std::uint32_t, int>, 24> kClExponent = {{
    {3, 70},   {5, 78},   {7, 82},   {11, 88},  {13, 89},  {17, 92},  {19, 94},  {23, 96},
    {29, 98},  {31, 99},  {37, 101}, {41, 102}, {43, 102}, {47, 103}, {53, 104}, {59, 105},
    {61, 106}, {67, 107}, {71, 107}, {73, 108}, {79, 108}, {83, 109}, {89, 109}, {97, 110},
}};

}  // namespace nonne::reference
