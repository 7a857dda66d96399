// Copyright 2026 The Bananaworld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bananaworld/correlation.hpp"

namespace bananaworld {

namespace {

RationalArray half_where(bool (*rule)(int, int, int, int)) {
  return RationalArray::from_function(
      [rule](int a, int b, int x, int y) { return rule(a, b, x, y) ? Rational(1, 2) : Rational(0); });
}

}  // namespace

RationalArray table1() {
  return half_where([](int a, int b, int x, int y) { return (a ^ b) == (x & y); });
}

RationalArray table2() {
  return RationalArray::from_function([](int a, int b, int, int) { return (a == 0 && b == 0) ? 1 : 0; });
}

RationalArray table3() {
  return RationalArray::from_function([](int a, int b, int x, int y) { return (a == y && b == x) ? 1 : 0; });
}

RationalArray table4() {
  return half_where([](int a, int b, int x, int y) { return (a ^ b) == (1 ^ (x & y)); });
}

std::array<int, 16> chsh_coefficients(int variant) {
  if (variant < 0 || variant >= kChshVariants) throw ArgumentError("CHSH variant must be in 0..7");
  std::array<int, 16> c{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          c[entry_index(a, b, x, y)] = chsh_term_sign(variant, x, y) * (a == b ? 1 : -1);
  return c;
}

std::vector<Relabeling> Relabeling::all() {
  std::vector<Relabeling> out;
  out.reserve(64);
  for (int code = 0; code < 64; ++code) {
    Relabeling r;
    r.swap_alice = code & 1;
    r.swap_bob = code & 2;
    r.flip_alice = {bool(code & 4), bool(code & 8)};
    r.flip_bob = {bool(code & 16), bool(code & 32)};
    out.push_back(r);
  }
  return out;
}

Relabeling relabeling_to_standard(int variant) {
  if (variant < 0 || variant >= kChshVariants) throw ArgumentError("CHSH variant must be in 0..7");
  const std::size_t minus = chsh_minus_context(variant);
  const int x0 = static_cast<int>(minus >> 1);
  const int y0 = static_cast<int>(minus & 1);
  Relabeling r;
  // Swapping settings moves the minus sign from BB onto (x0, y0).
  r.swap_alice = (1 ^ x0) != 0;
  r.swap_bob = (1 ^ y0) != 0;
  // Flipping all of Alice's outcomes negates every correlator.
  if (chsh_overall_sign(variant) < 0) r.flip_alice = {true, true};
  return r;
}

}  // namespace bananaworld
