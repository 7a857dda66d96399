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

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "bananaworld/polytopes.hpp"
#include "oracles.hpp"

using namespace bananaworld;

namespace {

RationalArray from_transcription(int k) {
  const auto t = oracle::transcribed_table(k);
  return RationalArray::from_function(
      [&](int a, int b, int x, int y) { return Rational(t.at(oracle::key(a, b, x, y))) / 2; });
}

RationalArray random_local_mixture(std::mt19937_64 &gen) {
  std::vector<RationalArray> arrays;
  std::vector<Rational> weights;
  Rational total(0);
  for (const auto &v : enumerate_deterministic(VertexKind::Local)) {
    arrays.push_back(v.array<Rational>());
    weights.emplace_back(static_cast<long>(gen() % 7));
    total += weights.back();
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  for (auto &w : weights) w /= total;
  return combine(arrays, weights);
}

}  // namespace

TEST(correlation, encodings) {
  ASSERT_EQ(bit(Setting::Y), 0);
  ASSERT_EQ(bit(Setting::B), 1);
  ASSERT_EQ(bit(Outcome::Ordinary), 0);
  ASSERT_EQ(bit(Outcome::Intense), 1);
  ASSERT_EQ(signed_value(Outcome::Ordinary), -1);
  ASSERT_EQ(signed_value(Outcome::Intense), 1);
}

TEST(correlation, tables_match_transcription) {
  ASSERT_EQ(table1(), from_transcription(1));
  ASSERT_EQ(table2(), from_transcription(2));
  ASSERT_EQ(table3(), from_transcription(3));
  ASSERT_EQ(table4(), from_transcription(4));
  for (const auto &t : {table1(), table2(), table3(), table4()}) ASSERT_TRUE(validate(t).empty());
}

TEST(correlation, validate_violations) {
  const RationalArray zeros;
  const auto v = validate(zeros);
  ASSERT_EQ(v.size(), 4u);
  for (const auto &e : v) {
    ASSERT_EQ(e.kind, ViolationKind::Normalization);
    ASSERT_EQ(e.magnitude, Rational(1));
  }

  auto entries = to_float(table1()).entries();
  entries[entry_index(0, 0, 0, 0)] = 0.6;
  const auto w = validate(FloatArray(entries));
  ASSERT_EQ(w.size(), 1u);
  ASSERT_EQ(w[0].kind, ViolationKind::Normalization);
  ASSERT_EQ(w[0].x, 0);
  ASSERT_EQ(w[0].y, 0);
  ASSERT_NEAR(w[0].magnitude, 0.1, 1e-12);

  auto neg = table2().entries();
  neg[entry_index(0, 0, 1, 1)] = Rational(3, 2);
  neg[entry_index(0, 1, 1, 1)] = Rational(-1, 2);
  const auto n = validate(RationalArray(neg));
  ASSERT_EQ(n.size(), 2u);
  ASSERT_EQ(n[0].kind, ViolationKind::OutOfRange);
  ASSERT_THROW(require_valid(RationalArray(neg)), InvalidArrayError);
}

TEST(correlation, marginals) {
  const auto m1 = marginals(table1());
  for (const auto &p : m1.alice) ASSERT_EQ(p, Rational(1, 2));
  for (const auto &p : m1.bob) ASSERT_EQ(p, Rational(1, 2));

  const auto m2 = marginals(table2());
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      ASSERT_EQ(m2.alice_p(0, x, y), Rational(1));
      ASSERT_EQ(m2.bob_p(0, x, y), Rational(1));
    }

  const auto m3 = marginals(table3());
  ASSERT_EQ(m3.alice_p(0, 0, 0), Rational(1));
  ASSERT_EQ(m3.alice_p(0, 0, 1), Rational(0));

  ASSERT_THROW(marginals(RationalArray()), InvalidArrayError);
}

TEST(correlation, no_signaling) {
  auto r1 = no_signaling_check(table1());
  ASSERT_TRUE(r1.passes);
  ASSERT_EQ(r1.max_residual, Rational(0));
  auto r3 = no_signaling_check(table3());
  ASSERT_FALSE(r3.passes);
  ASSERT_EQ(r3.max_residual, Rational(1));
  auto ru = no_signaling_check(uniform_array<Rational>());
  ASSERT_TRUE(ru.passes);
  ASSERT_EQ(ru.max_residual, Rational(0));
}

TEST(correlation, expectation) {
  ASSERT_EQ(expectation(table1(), Setting::Y, Setting::Y), Rational(1));
  ASSERT_EQ(expectation(table1(), Setting::B, Setting::B), Rational(-1));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      ASSERT_EQ(expectation(uniform_array<Rational>(), setting_from_bit(x), setting_from_bit(y)), Rational(0));
}

TEST(correlation, chsh_values) {
  ASSERT_EQ(chsh(table1(), 0), Rational(4));
  ASSERT_EQ(chsh(table2(), 0), Rational(2));
  ASSERT_THROW(chsh(table1(), 8), ArgumentError);
}

TEST(correlation, chsh_variants_match_hand_written_forms) {
  for (int k = 1; k <= 4; ++k) {
    const auto forms = oracle::chsh_forms(oracle::transcribed_table(k));
    const auto array = from_transcription(k);
    for (int v = 0; v < kChshVariants; ++v) ASSERT_EQ(to_double(chsh(array, v)), forms[v]) << k << " " << v;
  }
}

TEST(correlation, table4_chsh_max) {
  const auto forms = oracle::chsh_forms(oracle::transcribed_table(4));
  int argmax = 0;
  for (int v = 1; v < 8; ++v)
    if (forms[v] > forms[argmax]) argmax = v;
  // Frozen from the hand-written forms: minus sign on BB, overall sign -.
  ASSERT_EQ(argmax, 4);
  const auto best = chsh_max(table4());
  ASSERT_EQ(best.value, Rational(4));
  ASSERT_EQ(best.variant, argmax);
}

TEST(correlation, chsh_max_ties_go_to_lowest_variant) {
  const auto best = chsh_max(uniform_array<Rational>());
  ASSERT_EQ(best.value, Rational(0));
  ASSERT_EQ(best.variant, 0);
}

TEST(correlation, chsh_coefficients_agree_with_chsh) {
  for (int v = 0; v < 8; ++v) {
    const auto c = chsh_coefficients(v);
    for (const auto &t : {table1(), table3(), table4(), uniform_array<Rational>()}) {
      Rational s(0);
      for (std::size_t i = 0; i < 16; ++i) s += c[i] * t.entries()[i];
      ASSERT_EQ(s, chsh(t, v));
    }
  }
}

TEST(correlation, product_form) {
  for (bool b : product_form_check(table2())) ASSERT_TRUE(b);
  for (bool b : product_form_check(table1())) ASSERT_FALSE(b);
  for (bool b : product_form_check(uniform_array<Rational>())) ASSERT_TRUE(b);
}

TEST(correlation, expectation_identity_on_random_arrays) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_local_mixture(gen);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        const Rational e = expectation(p, setting_from_bit(x), setting_from_bit(y));
        ASSERT_GE(e, Rational(-1));
        ASSERT_LE(e, Rational(1));
        ASSERT_EQ(e, 2 * (p(0, 0, x, y) + p(1, 1, x, y)) - 1);
      }
  }
}

TEST(correlation, relabeling_to_standard_is_invariant) {
  const std::vector<RationalArray> arrays = {table1(), table2(), table3(), table4(), uniform_array<Rational>()};
  for (int v = 0; v < kChshVariants; ++v) {
    const Relabeling r = relabeling_to_standard(v);
    for (const auto &p : arrays) ASSERT_EQ(chsh(r.apply(p), 0), chsh(p, v)) << v;
  }
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_local_mixture(gen);
    for (int v = 0; v < kChshVariants; ++v) ASSERT_EQ(chsh(relabeling_to_standard(v).apply(p), 0), chsh(p, v));
  }
}

TEST(correlation, relabelings_are_distinct) {
  const auto all = Relabeling::all();
  ASSERT_EQ(all.size(), 64u);
  std::set<std::vector<Rational>> images;
  // Distinct entries make every relabeling visible.
  const RationalArray generic = RationalArray::from_function(
      [](int a, int b, int x, int y) { return Rational(static_cast<long>(entry_index(a, b, x, y)) + 1); });
  for (const auto &r : all) {
    const auto e = r.apply(generic).entries();
    images.insert(std::vector<Rational>(e.begin(), e.end()));
  }
  ASSERT_EQ(images.size(), 64u);
}

TEST(correlation, convex_mixtures_stay_no_signaling) {
  std::mt19937_64 gen(3);
  std::vector<RationalArray> ns;
  for (const auto &v : enumerate_deterministic(VertexKind::Local)) ns.push_back(v.array<Rational>());
  for (const auto &pr : pr_boxes()) ns.push_back(pr.array<Rational>());
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> w;
    Rational total(0);
    for (std::size_t k = 0; k < ns.size(); ++k) {
      w.emplace_back(static_cast<long>(gen() % 5));
      total += w.back();
    }
    if (total == 0) continue;
    for (auto &x : w) x /= total;
    const auto p = combine(ns, w);
    ASSERT_TRUE(validate(p).empty());
    ASSERT_TRUE(no_signaling_check(p).passes);
  }
}
