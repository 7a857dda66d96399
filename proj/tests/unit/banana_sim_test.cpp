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

#include "bananaworld/banana_sim.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "bananaworld/io.hpp"

using namespace bananaworld;
using namespace bananaworld::sim;

namespace {

constexpr std::uint64_t kTrials = 100000;

double max_entry_gap(const FloatArray &p, const RationalArray &q) {
  double gap = 0;
  for (std::size_t i = 0; i < 16; ++i) gap = std::max(gap, std::abs(p.entries()[i] - to_double(q.entries()[i])));
  return gap;
}

LhvModel<Rational> uniform_local_model() {
  std::vector<std::pair<DeterministicVertex, Rational>> support;
  for (const auto &v : enumerate_deterministic(VertexKind::Local)) support.emplace_back(v, Rational(1, 16));
  return LhvModel<Rational>::deterministic(support);
}

}  // namespace

TEST(banana_sim, random_source_is_mt19937_64) {
  // First output of the reference 64-bit Mersenne Twister at its default seed.
  RandomSource a(5489);
  ASSERT_EQ(a.next_u64(), 14514284786278117030ULL);
  RandomSource b(9), c(9);
  for (int k = 0; k < 1000; ++k) {
    const std::uint64_t raw = b.next_u64();
    ASSERT_EQ(c.fair_bit(), int(raw >> 63));
  }
  RandomSource d(10), e(10);
  for (int k = 0; k < 1000; ++k) {
    const double u = d.uniform();
    ASSERT_EQ(u, double(e.next_u64() >> 11) * 0x1.0p-53);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(banana_sim, pure_states) {
  RandomSource rng(1);
  for (int k = 0; k < 100; ++k) {
    ASSERT_EQ(peel_pure(PureBananaState::Y0, Setting::Y, rng), Outcome::Ordinary);
    ASSERT_EQ(peel_pure(PureBananaState::Y1, Setting::Y, rng), Outcome::Intense);
    ASSERT_EQ(peel_pure(PureBananaState::B0, Setting::B, rng), Outcome::Ordinary);
    ASSERT_EQ(peel_pure(PureBananaState::B1, Setting::B, rng), Outcome::Intense);
  }
  int intense = 0;
  for (std::uint64_t k = 0; k < kTrials; ++k) intense += bit(peel_pure(PureBananaState::Y0, Setting::B, rng));
  ASSERT_NEAR(intense / double(kTrials), 0.5, 0.01);
  ASSERT_EQ(parse_pure_state("B1"), PureBananaState::B1);
  ASSERT_THROW(parse_pure_state("Q0"), ArgumentError);
}

TEST(banana_sim, epr_pairs) {
  RandomSource rng(2);
  std::array<int, 4> yy{}, bb{};
  for (std::uint64_t k = 0; k < kTrials; ++k) {
    const auto [a, b] = peel_epr(Setting::Y, Setting::Y, rng);
    ++yy[2 * bit(a) + bit(b)];
    const auto [c, d] = peel_epr(Setting::B, Setting::B, rng);
    ++bb[2 * bit(c) + bit(d)];
  }
  ASSERT_EQ(yy[1] + yy[2], 0);
  ASSERT_NEAR(yy[0] / double(kTrials), 0.5, 0.01);
  ASSERT_EQ(bb[0] + bb[3], 0);
}

TEST(banana_sim, epr_empirical_array) {
  const auto e = empirical_array(epr_sampler(), kTrials, 42);
  const FloatArray p = e.probabilities();
  ASSERT_TRUE(validate(p).empty());
  ASSERT_LE(max_entry_gap(p, table1()), 0.01);
  ASSERT_LE(no_signaling_check(p, 1.0).max_residual, 0.02);
  const double k0 = chsh(p, 0);
  ASSERT_GE(k0, 4 - 0.05);
  ASSERT_LE(k0, 4);

  // Marginals within 3 sigma of 1/2 for every party, setting and remote setting.
  const auto m = marginals(p);
  const double sigma = std::sqrt(0.25 / kTrials);
  for (double v : m.alice) ASSERT_NEAR(v, 0.5, 3 * sigma);
  for (double v : m.bob) ASSERT_NEAR(v, 0.5, 3 * sigma);

  for (int c = 0; c < 4; ++c) {
    std::uint64_t n = 0;
    for (int ab = 0; ab < 4; ++ab) n += e.counts[4 * c + ab];
    ASSERT_EQ(n, e.trials[c]);
  }
}

TEST(banana_sim, pure_pair_product_form) {
  const auto e = empirical_array(pure_pair_sampler(PureBananaState::Y0, PureBananaState::Y0), kTrials, 8);
  for (bool ok : product_form_check(e.probabilities(), 0.02)) ASSERT_TRUE(ok);
}

TEST(banana_sim, determinism) {
  const auto a = empirical_array(epr_sampler(), 70000, 123);
  const auto b = empirical_array(epr_sampler(), 70000, 123);
  ASSERT_EQ(a.counts, b.counts);
  const auto c = empirical_array(epr_sampler(), 70000, 124);
  ASSERT_NE(a.counts, c.counts);
  ASSERT_EQ(io::empirical_to_json(a).dump(), io::empirical_to_json(b).dump());

  const auto model = uniform_local_model();
  ASSERT_EQ(empirical_lhv_array(model, 5000, 9).counts, empirical_lhv_array(model, 5000, 9).counts);
  ASSERT_EQ(estimate_klyachko_sum(3000, 4).probabilities, estimate_klyachko_sum(3000, 4).probabilities);
}

TEST(banana_sim, zero_trials_rejected) {
  ASSERT_THROW(empirical_array(epr_sampler(), 0, 1), ArgumentError);
  ASSERT_THROW(empirical_lhv_array(uniform_local_model(), 0, 1), ArgumentError);
  ASSERT_THROW(estimate_klyachko_sum(0, 1), ArgumentError);
}

TEST(banana_sim, sub_seeds_are_distinct) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t block = 0; block < 4; ++block) {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) seeds.insert(context_seed(7, setting_from_bit(x), setting_from_bit(y), block));
    seeds.insert(shared_seed(7, block));
  }
  ASSERT_EQ(seeds.size(), 20u);
}

TEST(banana_sim, klyachko_bunch) {
  RandomSource rng(3);
  for (int k = 0; k < 5; ++k) {
    for (int t = 0; t < 200; ++t) {
      KlyachkoBunch bunch;
      const auto [a, b] = peel_klyachko(bunch, k, (k + 1) % 5, rng);
      ASSERT_NE(a, b);
      ASSERT_EQ(bunch.status(), KlyachkoBunch::Status::Eaten);
      ASSERT_FALSE(bunch.edible());
      ASSERT_THROW(peel_klyachko(bunch, k, (k + 1) % 5, rng), BunchStateError);
      ASSERT_EQ(bunch.status(), KlyachkoBunch::Status::Inedible);
    }
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j || quantum::cycle_adjacent(i, j)) continue;
      KlyachkoBunch bunch;
      ASSERT_THROW(peel_klyachko(bunch, i, j, rng), InediblePeelError);
      ASSERT_EQ(bunch.status(), KlyachkoBunch::Status::Inedible);
    }
  KlyachkoBunch bunch;
  ASSERT_THROW(peel_klyachko(bunch, 0, 5, rng), ArgumentError);
  ASSERT_THROW(peel_klyachko(bunch, 2, 2, rng), ArgumentError);
  ASSERT_TRUE(bunch.edible());
}

TEST(banana_sim, klyachko_banana_sum) {
  ASSERT_EQ(klyachko_banana_sum(), Rational(5, 2));
  const auto est = estimate_klyachko_sum(kTrials, 11);
  ASSERT_NEAR(est.sum, 2.5, 0.02);
  for (double p : est.probabilities) ASSERT_NEAR(p, 0.5, 0.01);
}

TEST(banana_sim, lhv_sampling) {
  RandomSource rng(4);
  const auto point = LhvModel<Rational>::deterministic({{DeterministicVertex(0), Rational(1)}});
  for (int k = 0; k < 100; ++k)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        const auto [a, b] = sample_lhv(point, setting_from_bit(x), setting_from_bit(y), rng);
        ASSERT_EQ(a, Outcome::Ordinary);
        ASSERT_EQ(b, Outcome::Ordinary);
      }

  const auto e = empirical_lhv_array(uniform_local_model(), kTrials, 5);
  const FloatArray p = e.probabilities();
  ASSERT_LE(chsh_max(p).value, 2 + 0.05);
  ASSERT_LE(no_signaling_check(p, 1.0).max_residual, 0.02);
}

TEST(banana_sim, lhv_empirical_arrays_are_local) {
  const std::vector<LhvModel<Rational>> models = {
      uniform_local_model(),
      LhvModel<Rational>::deterministic({{DeterministicVertex(0), Rational(1, 3)},
                                         {DeterministicVertex(0x3A), Rational(1, 6)},
                                         {DeterministicVertex(0xF5), Rational(1, 2)}}),
  };
  std::uint64_t seed = 100;
  for (const auto &model : models) {
    const auto e = empirical_lhv_array(model, 20000, seed++);
    const auto r = membership(e.rational(), PolytopeKind::Local);
    ASSERT_EQ(r.status, MembershipStatus::In);
  }
}

TEST(banana_sim, lhv_sampler_matches_mixture) {
  const auto model = LhvModel<Rational>::general({{table1(), Rational(1, 2)}, {table2(), Rational(1, 2)}});
  const auto e = empirical_array(lhv_sampler(model), kTrials, 77);
  ASSERT_LE(max_entry_gap(e.probabilities(), lhv_mixture(model)), 0.01);
}

TEST(banana_sim, clone_inference) {
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      ASSERT_EQ(infer_peeling_from_clone(outcome_from_bit(j), outcome_from_bit(k)), j == k ? Setting::Y : Setting::B);
}

TEST(banana_sim, counterfactual_assignments) {
  using P = std::pair<Outcome, Outcome>;
  ASSERT_EQ(epr_counterfactual_assignments(Setting::Y, Outcome::Ordinary),
            (std::set<P>{{Outcome::Ordinary, Outcome::Ordinary}}));
  ASSERT_EQ(epr_counterfactual_assignments(Setting::B, Outcome::Ordinary),
            (std::set<P>{{Outcome::Ordinary, Outcome::Intense}}));
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) {
      const auto s = epr_counterfactual_assignments(setting_from_bit(x), outcome_from_bit(a));
      ASSERT_EQ(s.size(), 1u);
      const auto [j, k] = *s.begin();
      ASSERT_EQ(j == k, x == 0);
      ASSERT_EQ(infer_peeling_from_clone(j, k), setting_from_bit(x));
    }
}
