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

#include <algorithm>

#include "bananaworld/quantum.hpp"

namespace bananaworld::sim {

std::uint64_t context_seed(std::uint64_t seed, Setting x, Setting y, std::uint64_t block) {
  return seed ^ mix64(block * 4 + 2 * bit(x) + bit(y) + 1);
}

std::uint64_t shared_seed(std::uint64_t seed, std::uint64_t block) {
  return seed ^ mix64(block * 4 + 0x5A5A5A5A5A5A5A5AULL);
}

const char *to_string(PureBananaState s) {
  switch (s) {
    case PureBananaState::Y0:
      return "Y0";
    case PureBananaState::Y1:
      return "Y1";
    case PureBananaState::B0:
      return "B0";
    case PureBananaState::B1:
      return "B1";
  }
  return "?";
}

PureBananaState parse_pure_state(const std::string &name) {
  for (auto s : {PureBananaState::Y0, PureBananaState::Y1, PureBananaState::B0, PureBananaState::B1}) {
    if (name == to_string(s)) return s;
  }
  throw ArgumentError("unknown pure banana state '" + name + "' (expected Y0, Y1, B0 or B1)");
}

Outcome peel_pure(PureBananaState state, Setting peeling, RandomSource &rng) {
  const Setting sharp = (state == PureBananaState::Y0 || state == PureBananaState::Y1) ? Setting::Y : Setting::B;
  const Outcome taste =
      (state == PureBananaState::Y0 || state == PureBananaState::B0) ? Outcome::Ordinary : Outcome::Intense;
  if (peeling == sharp) return taste;
  return outcome_from_bit(rng.fair_bit());
}

TastePair peel_epr(Setting x, Setting y, RandomSource &rng) {
  const int u = rng.fair_bit();
  return {outcome_from_bit(u), outcome_from_bit(u ^ (bit(x) & bit(y)))};
}

TastePair peel_klyachko(KlyachkoBunch &bunch, int i, int j, RandomSource &rng) {
  if (i < 0 || i > 4 || j < 0 || j > 4 || i == j) {
    throw ArgumentError("Klyachko banana indices must be two distinct values in 0..4");
  }
  if (bunch.status_ != KlyachkoBunch::Status::Fresh) {
    bunch.status_ = KlyachkoBunch::Status::Inedible;
    throw BunchStateError("bunch already peeled; further bananas are inedible");
  }
  if (!quantum::cycle_adjacent(i, j)) {
    bunch.status_ = KlyachkoBunch::Status::Inedible;
    bunch.peeled_ = {i, j};
    throw InediblePeelError("bananas " + std::to_string(i) + " and " + std::to_string(j) +
                            " are not adjacent; the bunch is inedible");
  }
  const int u = rng.fair_bit();
  bunch.peeled_ = {i, j};
  bunch.status_ = KlyachkoBunch::Status::Eaten;
  return {outcome_from_bit(u), outcome_from_bit(1 - u)};
}

KlyachkoEstimate estimate_klyachko_sum(std::uint64_t trials_per_edge, std::uint64_t seed) {
  if (trials_per_edge == 0) throw ArgumentError("trials per edge must be at least 1");
  std::array<std::uint64_t, 5> intense{};
  std::array<std::uint64_t, 5> tasted{};
  for (int k = 0; k < 5; ++k) {
    const int i = k, j = (k + 1) % 5;
    for (std::uint64_t block = 0; block * kTrialBlock < trials_per_edge; ++block) {
      RandomSource rng(seed ^ mix64(block * 8 + static_cast<std::uint64_t>(k) + 0x4B4C59ULL));
      const std::uint64_t n = std::min(kTrialBlock, trials_per_edge - block * kTrialBlock);
      for (std::uint64_t t = 0; t < n; ++t) {
        KlyachkoBunch bunch;
        const auto [ti, tj] = peel_klyachko(bunch, i, j, rng);
        intense[i] += bit(ti);
        intense[j] += bit(tj);
        ++tasted[i];
        ++tasted[j];
      }
    }
  }
  KlyachkoEstimate out{};
  out.trials_per_edge = trials_per_edge;
  out.seed = seed;
  out.sum = 0.0;
  for (int k = 0; k < 5; ++k) {
    out.probabilities[k] = static_cast<double>(intense[k]) / static_cast<double>(tasted[k]);
    out.sum += out.probabilities[k];
  }
  return out;
}

Rational klyachko_banana_sum() {
  // Summing p_k + p_{k+1} = 1 over the five edges counts each p_k twice.
  Rational edge_total(0);
  for (int k = 0; k < 5; ++k) edge_total += 1;
  return edge_total / 2;
}

namespace {

template <Scalar T>
TastePair draw_from(const CorrelationArray<T> &p, Setting x, Setting y, double u) {
  double acc = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      acc += to_double(p(a, b, bit(x), bit(y)));
      if (u < acc) return {outcome_from_bit(a), outcome_from_bit(b)};
    }
  // Rounding left u above the cumulative total: take the last supported cell.
  for (int c = 3; c >= 0; --c) {
    if (to_double(p(c >> 1, c & 1, bit(x), bit(y))) > 0.0) return {outcome_from_bit(c >> 1), outcome_from_bit(c & 1)};
  }
  return {Outcome::Intense, Outcome::Intense};
}

template <Scalar T>
std::size_t draw_component(const LhvModel<T> &model, double u) {
  const auto &comps = model.components();
  double acc = 0.0;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    acc += to_double(comps[k].weight);
    if (u < acc) return k;
  }
  for (std::size_t k = comps.size(); k-- > 0;) {
    if (comps[k].weight > T(0)) return k;
  }
  return comps.size() - 1;
}

}  // namespace

template <Scalar T>
TastePair sample_lhv(const LhvModel<T> &model, Setting x, Setting y, RandomSource &rng) {
  const std::size_t k = draw_component(model, rng.uniform());
  return draw_from(model.components()[k].conditional, x, y, rng.uniform());
}

template TastePair sample_lhv<Rational>(const LhvModel<Rational> &, Setting, Setting, RandomSource &);
template TastePair sample_lhv<double>(const LhvModel<double> &, Setting, Setting, RandomSource &);

FloatArray EmpiricalArray::probabilities() const {
  return FloatArray::from_function([this](int a, int b, int x, int y) {
    return static_cast<double>(counts[entry_index(a, b, x, y)]) /
           static_cast<double>(trials[context_index(x, y)]);
  });
}

RationalArray EmpiricalArray::rational() const {
  return RationalArray::from_function([this](int a, int b, int x, int y) {
    return Rational(boost::multiprecision::mpz_int(counts[entry_index(a, b, x, y)]),
                    boost::multiprecision::mpz_int(trials[context_index(x, y)]));
  });
}

EmpiricalArray empirical_array(const Sampler &sampler, std::uint64_t trials_per_context, std::uint64_t seed) {
  if (trials_per_context == 0) throw ArgumentError("trials per context must be at least 1");
  EmpiricalArray out;
  out.seed = seed;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const Setting sx = setting_from_bit(x), sy = setting_from_bit(y);
      for (std::uint64_t block = 0; block * kTrialBlock < trials_per_context; ++block) {
        RandomSource rng(context_seed(seed, sx, sy, block));
        const std::uint64_t n = std::min(kTrialBlock, trials_per_context - block * kTrialBlock);
        for (std::uint64_t t = 0; t < n; ++t) {
          const auto [a, b] = sampler(sx, sy, rng);
          ++out.counts[entry_index(bit(a), bit(b), x, y)];
        }
      }
      out.trials[context_index(x, y)] = trials_per_context;
    }
  return out;
}

template <Scalar T>
EmpiricalArray empirical_lhv_array(const LhvModel<T> &model, std::uint64_t trials_per_context,
                                   std::uint64_t seed) {
  if (trials_per_context == 0) throw ArgumentError("trials per context must be at least 1");
  EmpiricalArray out;
  out.seed = seed;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const Setting sx = setting_from_bit(x), sy = setting_from_bit(y);
      for (std::uint64_t block = 0; block * kTrialBlock < trials_per_context; ++block) {
        RandomSource lambda_rng(shared_seed(seed, block));
        RandomSource outcome_rng(context_seed(seed, sx, sy, block));
        const std::uint64_t n = std::min(kTrialBlock, trials_per_context - block * kTrialBlock);
        for (std::uint64_t t = 0; t < n; ++t) {
          const std::size_t k = draw_component(model, lambda_rng.uniform());
          const auto [a, b] = draw_from(model.components()[k].conditional, sx, sy, outcome_rng.uniform());
          ++out.counts[entry_index(bit(a), bit(b), x, y)];
        }
      }
      out.trials[context_index(x, y)] = trials_per_context;
    }
  return out;
}

template EmpiricalArray empirical_lhv_array<Rational>(const LhvModel<Rational> &, std::uint64_t, std::uint64_t);
template EmpiricalArray empirical_lhv_array<double>(const LhvModel<double> &, std::uint64_t, std::uint64_t);

Sampler pure_pair_sampler(PureBananaState alice, PureBananaState bob) {
  return [alice, bob](Setting x, Setting y, RandomSource &rng) {
    const Outcome a = peel_pure(alice, x, rng);
    const Outcome b = peel_pure(bob, y, rng);
    return TastePair{a, b};
  };
}

Sampler epr_sampler() { return [](Setting x, Setting y, RandomSource &rng) { return peel_epr(x, y, rng); }; }

Setting infer_peeling_from_clone(Outcome j, Outcome k) { return j == k ? Setting::Y : Setting::B; }

std::set<std::pair<Outcome, Outcome>> epr_counterfactual_assignments(Setting alice_peeling, Outcome alice_taste) {
  const RationalArray pr = table1();
  const int x = bit(alice_peeling), a = bit(alice_taste);
  std::set<std::pair<Outcome, Outcome>> out;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      // j must be possible when Bob peels Y, k when Bob peels B.
      if (pr(a, j, x, 0) > 0 && pr(a, k, x, 1) > 0) out.emplace(outcome_from_bit(j), outcome_from_bit(k));
    }
  return out;
}

}  // namespace bananaworld::sim
