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

/**
 * @file random.hpp
 * @brief The library's single pseudo-random generator.
 *
 * RandomSource wraps std::mt19937_64, whose output sequence is fixed by the
 * C++ standard. Only raw 64-bit outputs are consumed; bits and uniforms are
 * derived here rather than through the implementation-defined std
 * distributions, so a seed yields the same stream on every platform.
 */

#ifndef BANANAWORLD_RANDOM_HPP
#define BANANAWORLD_RANDOM_HPP

#include <cstdint>
#include <random>

namespace bananaworld {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return engine_(); }
  /// Top bit of the next output.
  int fair_bit() { return static_cast<int>(engine_() >> 63); }
  /// 53-bit uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace bananaworld

#endif  // BANANAWORLD_RANDOM_HPP
