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
 * @file banana_sim.hpp
 * @brief Seeded samplers for pure bananas, PR-box pairs, Klyachko bunches
 *        and LHV models, with aggregation into empirical correlation arrays.
 *
 * Every sampler draws from a RandomSource (see random.hpp), so identical
 * seeds reproduce identical streams.
 */

#ifndef BANANAWORLD_BANANA_SIM_HPP
#define BANANAWORLD_BANANA_SIM_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bananaworld/correlation.hpp"
#include "bananaworld/polytopes.hpp"
#include "bananaworld/random.hpp"

namespace bananaworld::sim {

using bananaworld::RandomSource;
using bananaworld::mix64;

/// Seed of trial block `block` in context (x, y):
///   seed XOR mix64(block * 4 + 2x + y + 1)
std::uint64_t context_seed(std::uint64_t seed, Setting x, Setting y, std::uint64_t block);

/// Seed of trial block `block` for draws shared by all four contexts:
///   seed XOR mix64(block * 4 + 0x5A5A5A5A5A5A5A5A)
std::uint64_t shared_seed(std::uint64_t seed, std::uint64_t block);

/// Trials per independently seeded block.
inline constexpr std::uint64_t kTrialBlock = 1u << 16;

using Taste = Outcome;
using TastePair = std::pair<Outcome, Outcome>;

// ---------------------------------------------------------------------------
// Pure bananas

enum class PureBananaState { Y0, Y1, B0, B1 };

const char *to_string(PureBananaState s);
PureBananaState parse_pure_state(const std::string &name);

/// Matching peel gives the state's taste; the other peel is a fair coin.
Outcome peel_pure(PureBananaState state, Setting peeling, RandomSource &rng);

// ---------------------------------------------------------------------------
// PR-box pairs

/// One fair bit u; returns (u, u XOR xy).
TastePair peel_epr(Setting x, Setting y, RandomSource &rng);

// ---------------------------------------------------------------------------
// Klyachko bunches

/// Five bananas on a cycle. Peeling an adjacent pair eats the bunch; any
/// other request spoils it.
class KlyachkoBunch {
 public:
  enum class Status { Fresh, Eaten, Inedible };

  Status status() const { return status_; }
  bool edible() const { return status_ == Status::Fresh; }
  const std::set<int> &peeled() const { return peeled_; }

 private:
  friend TastePair peel_klyachko(KlyachkoBunch &, int, int, RandomSource &);
  Status status_ = Status::Fresh;
  std::set<int> peeled_;
};

/// Peels adjacent bananas i and j of a fresh bunch: one tastes ordinary and
/// the other intense, each way with probability 1/2. Returns (taste_i,
/// taste_j). Non-adjacent pairs spoil the bunch and throw InediblePeelError;
/// a bunch that is no longer fresh throws BunchStateError.
TastePair peel_klyachko(KlyachkoBunch &bunch, int i, int j, RandomSource &rng);

struct KlyachkoEstimate {
  /// Estimated p(k tastes intense) for k = 0..4.
  std::array<double, 5> probabilities;
  double sum;
  std::uint64_t trials_per_edge;
  std::uint64_t seed;
};

/// Peels a fresh bunch `trials_per_edge` times on each of the five edges and
/// estimates each banana's probability of tasting intense.
KlyachkoEstimate estimate_klyachko_sum(std::uint64_t trials_per_edge, std::uint64_t seed);

/// Sum of p(k tastes intense) forced by the edge constraints
/// p_k + p_{k+1} = 1: every banana lies on two edges, so 2 sum = 5.
Rational klyachko_banana_sum();

// ---------------------------------------------------------------------------
// LHV sampling

/// Draws lambda by weight, then (a, b) from p(.|xy, lambda). Two uniforms
/// are consumed per call.
template <Scalar T>
TastePair sample_lhv(const LhvModel<T> &model, Setting x, Setting y, RandomSource &rng);

// ---------------------------------------------------------------------------
// Empirical arrays

struct EmpiricalArray {
  /// counts[entry_index(a, b, x, y)].
  std::array<std::uint64_t, 16> counts{};
  /// trials[context_index(x, y)].
  std::array<std::uint64_t, 4> trials{};
  std::uint64_t seed = 0;

  FloatArray probabilities() const;
  /// counts / trials as exact rationals.
  RationalArray rational() const;
};

using Sampler = std::function<TastePair(Setting, Setting, RandomSource &)>;

/// Runs `trials_per_context` draws in each context. Trial block k of
/// context (x, y) uses RandomSource(context_seed(seed, x, y, k)), so the
/// result does not depend on execution order. Throws ArgumentError on zero
/// trials.
EmpiricalArray empirical_array(const Sampler &sampler, std::uint64_t trials_per_context, std::uint64_t seed);

/// Empirical array of an LHV model with lambda shared across contexts:
/// trial t draws lambda from a stream seeded by shared_seed(seed, block)
/// and the outcome from the per-context stream. For deterministic models
/// the result is an exact convex combination of local vertices.
template <Scalar T>
EmpiricalArray empirical_lhv_array(const LhvModel<T> &model, std::uint64_t trials_per_context,
                                   std::uint64_t seed);

/// Sampler for a pair of independent pure bananas.
Sampler pure_pair_sampler(PureBananaState alice, PureBananaState bob);
Sampler epr_sampler();
template <Scalar T>
Sampler lhv_sampler(LhvModel<T> model) {
  return [m = std::move(model)](Setting x, Setting y, RandomSource &rng) { return sample_lhv(m, x, y, rng); };
}

// ---------------------------------------------------------------------------
// Inference from a cloned PR banana

/// j, k: Bob's tastes under peelings Y and B. Same taste means Alice peeled Y.
Setting infer_peeling_from_clone(Outcome j, Outcome k);

/// All (j, k) compatible with the standard PR box in contexts
/// (alice_peeling, Y) and (alice_peeling, B) given Alice's taste.
std::set<std::pair<Outcome, Outcome>> epr_counterfactual_assignments(Setting alice_peeling, Outcome alice_taste);

}  // namespace bananaworld::sim

#endif  // BANANAWORLD_BANANA_SIM_HPP
