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

#include "bananaworld/polytopes.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"

#include "bananaworld/quantum.hpp"
#include "oracles.hpp"

using namespace bananaworld;

namespace {

std::array<double, 16> as_vector(const RationalArray &p) {
  std::array<double, 16> out;
  for (std::size_t i = 0; i < 16; ++i) out[i] = to_double(p.entries()[i]);
  return out;
}

std::vector<RationalArray> arrays_of(VertexKind kind) {
  std::vector<RationalArray> out;
  for (const auto &v : enumerate_deterministic(kind)) out.push_back(v.array<Rational>());
  return out;
}

RationalArray vertex_array(int id) {
  if (id >= 256) return pr_boxes()[id - 256].array<Rational>();
  return DeterministicVertex(static_cast<std::uint8_t>(id)).array<Rational>();
}

RationalArray reconstruct(const std::vector<std::pair<int, Rational>> &weights) {
  std::vector<RationalArray> arrays;
  std::vector<Rational> w;
  for (const auto &[id, x] : weights) {
    arrays.push_back(vertex_array(id));
    w.push_back(x);
  }
  return combine(arrays, w);
}

template <Scalar T>
void expect_certificate_valid(const CorrelationArray<T> &p, const SeparatingCertificate<T> &c, PolytopeKind kind) {
  T value(0);
  for (std::size_t i = 0; i < 16; ++i) value += c.coefficients[i] * p.entries()[i];
  ASSERT_EQ(value, c.value);
  ASSERT_GT(c.value, c.bound);
  for (const auto &v : polytope_vertices<T>(kind)) {
    T s(0);
    for (std::size_t i = 0; i < 16; ++i) s += c.coefficients[i] * v.array.entries()[i];
    ASSERT_LE(s, c.bound) << "vertex " << v.id;
  }
}

LhvModel<Rational> random_model(std::mt19937_64 &gen) {
  const auto local = enumerate_deterministic(VertexKind::Local);
  std::vector<std::pair<DeterministicVertex, Rational>> support;
  std::vector<long> raw;
  long total = 0;
  for (std::size_t k = 0; k < local.size(); ++k) {
    raw.push_back(gen() % 3 == 0 ? 0 : static_cast<long>(gen() % 97));
    total += raw.back();
  }
  if (total == 0) {
    raw[gen() % 16] = 1;
    total = 1;
  }
  for (std::size_t k = 0; k < local.size(); ++k)
    if (raw[k] > 0) support.emplace_back(local[k], Rational(raw[k]) / total);
  return LhvModel<Rational>::deterministic(support);
}

}  // namespace

TEST(polytopes, vertex_census) {
  const auto all = enumerate_deterministic(VertexKind::All);
  const auto local = enumerate_deterministic(VertexKind::Local);
  const auto signaling = enumerate_deterministic(VertexKind::Signaling);
  ASSERT_EQ(all.size(), 256u);
  ASSERT_EQ(local.size(), 16u);
  ASSERT_EQ(signaling.size(), 240u);

  std::set<int> ids;
  for (const auto &v : local) ids.insert(v.index());
  for (const auto &v : signaling) ASSERT_TRUE(ids.insert(v.index()).second);
  ASSERT_EQ(ids.size(), 256u);
  ASSERT_TRUE(std::is_sorted(all.begin(), all.end()));

  ASSERT_EQ(local.front().array<Rational>(), table2());
  const auto t3 = std::find_if(signaling.begin(), signaling.end(),
                               [](const auto &v) { return v.template array<Rational>() == table3(); });
  ASSERT_NE(t3, signaling.end());
  ASSERT_EQ(t3->index(), 0x53);
}

TEST(polytopes, vertex_index_packing) {
  // f(YY) is the most significant bit, g(BB) the least.
  const DeterministicVertex v(0b10000001);
  ASSERT_EQ(v.alice(Setting::Y, Setting::Y), Outcome::Intense);
  ASSERT_EQ(v.alice(Setting::Y, Setting::B), Outcome::Ordinary);
  ASSERT_EQ(v.bob(Setting::B, Setting::B), Outcome::Intense);
  ASSERT_EQ(v.bob(Setting::B, Setting::Y), Outcome::Ordinary);
  const auto w = DeterministicVertex::from_functions(
      {Outcome::Intense, Outcome::Ordinary, Outcome::Ordinary, Outcome::Ordinary},
      {Outcome::Ordinary, Outcome::Ordinary, Outcome::Ordinary, Outcome::Intense});
  ASSERT_EQ(v, w);
}

TEST(polytopes, local_vertices_match_oracle) {
  std::set<std::array<double, 16>> expected;
  for (const auto &v : oracle::local_deterministic()) expected.insert(v);
  std::set<std::array<double, 16>> got;
  for (const auto &p : arrays_of(VertexKind::Local)) got.insert(as_vector(p));
  ASSERT_EQ(got, expected);

  std::set<std::array<double, 16>> every;
  for (const auto &p : arrays_of(VertexKind::All)) every.insert(as_vector(p));
  std::set<std::array<double, 16>> oracle_all;
  for (const auto &v : oracle::all_deterministic()) oracle_all.insert(v);
  ASSERT_EQ(every, oracle_all);
}

TEST(polytopes, deterministic_invariants) {
  for (const auto &v : enumerate_deterministic(VertexKind::All)) {
    const auto p = v.array<Rational>();
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        int ones = 0;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            ASSERT_TRUE(p(a, b, x, y) == 0 || p(a, b, x, y) == 1);
            ones += p(a, b, x, y) == 1;
          }
        ASSERT_EQ(ones, 1);
      }
    ASSERT_EQ(no_signaling_check(p).passes, v.is_local()) << int(v.index());
  }
}

TEST(polytopes, local_vertices_from_table2_by_relabeling) {
  std::set<std::array<double, 16>> generated;
  for (const auto &r : Relabeling::all()) generated.insert(as_vector(r.apply(table2())));
  std::set<std::array<double, 16>> local;
  for (const auto &p : arrays_of(VertexKind::Local)) local.insert(as_vector(p));
  ASSERT_EQ(generated, local);
}

TEST(polytopes, pr_boxes) {
  const auto boxes = pr_boxes();
  ASSERT_EQ(boxes.size(), 8u);
  ASSERT_EQ(boxes[0].code(), 0);
  ASSERT_EQ(boxes[0].array<Rational>(), table1());
  std::set<std::array<double, 16>> seen;
  bool has_table4 = false;
  for (const auto &box : boxes) {
    const auto p = box.array<Rational>();
    for (const auto &e : p.entries()) ASSERT_TRUE(e == 0 || e == Rational(1, 2));
    ASSERT_TRUE(no_signaling_check(p).passes);
    ASSERT_EQ(chsh_max(p).value, Rational(4));
    seen.insert(as_vector(p));
    has_table4 = has_table4 || p == table4();
  }
  ASSERT_EQ(seen.size(), 8u);
  ASSERT_TRUE(has_table4);
  std::set<std::array<double, 16>> oracle_boxes;
  for (const auto &v : oracle::pr_family()) oracle_boxes.insert(v);
  ASSERT_EQ(seen, oracle_boxes);
}

TEST(polytopes, chsh_extremes) {
  for (const auto &p : arrays_of(VertexKind::Local)) ASSERT_LE(chsh_max(p).value, Rational(2));
  Rational best(-100);
  for (const auto &p : arrays_of(VertexKind::Local)) best = std::max(best, chsh_max(p).value);
  ASSERT_EQ(best, Rational(2));
}

TEST(polytopes, affine_dimensions) {
  ASSERT_EQ(affine_dimension(arrays_of(VertexKind::All)), 12u);
  ASSERT_EQ(affine_dimension(arrays_of(VertexKind::Local)), 8u);
  auto ns = arrays_of(VertexKind::Local);
  for (const auto &box : pr_boxes()) ns.push_back(box.array<Rational>());
  ASSERT_EQ(affine_dimension(ns), 8u);
  ASSERT_EQ(affine_dimension(std::vector<RationalArray>{table2()}), 0u);
  ASSERT_THROW(affine_dimension(std::vector<RationalArray>{}), ArgumentError);

  // Cross-check with a floating rank oracle.
  ASSERT_EQ(oracle::affine_dim(oracle::all_deterministic()), 12);
  ASSERT_EQ(oracle::affine_dim(oracle::local_deterministic()), 8);
  auto ns_oracle = oracle::local_deterministic();
  for (const auto &v : oracle::pr_family()) ns_oracle.push_back(v);
  ASSERT_EQ(oracle::affine_dim(ns_oracle), 8);
}

TEST(polytopes, membership_table1_local_out) {
  const auto r = membership(table1(), PolytopeKind::Local);
  ASSERT_EQ(r.status, MembershipStatus::Out);
  ASSERT_TRUE(r.certificate.has_value());
  ASSERT_EQ(r.certificate->source, "chsh");
  ASSERT_EQ(r.certificate->chsh_variant, 0);
  ASSERT_EQ(r.certificate->value, Rational(4));
  ASSERT_EQ(r.certificate->bound, Rational(2));
  expect_certificate_valid(table1(), *r.certificate, PolytopeKind::Local);
}

TEST(polytopes, membership_vertices) {
  for (const auto &v : enumerate_deterministic(VertexKind::Local)) {
    const auto r = membership(v.array<Rational>(), PolytopeKind::Local);
    ASSERT_EQ(r.status, MembershipStatus::In);
    ASSERT_EQ(r.weights.size(), 1u);
    ASSERT_EQ(r.weights[0].first, v.index());
    ASSERT_EQ(r.weights[0].second, Rational(1));
  }
  for (const auto &box : pr_boxes()) {
    const auto p = box.array<Rational>();
    const auto r = membership(p, PolytopeKind::Local);
    ASSERT_EQ(r.status, MembershipStatus::Out);
    ASSERT_EQ(r.certificate->bound, Rational(2));
    expect_certificate_valid(p, *r.certificate, PolytopeKind::Local);
    const auto n = membership(p, PolytopeKind::NoSignaling);
    ASSERT_EQ(n.status, MembershipStatus::In);
    ASSERT_EQ(reconstruct(n.weights), p);
  }
}

TEST(polytopes, membership_boundary_mixture) {
  const auto half = combine<Rational>({table1(), uniform_array<Rational>()}, {Rational(1, 2), Rational(1, 2)});
  for (int v = 0; v < kChshVariants; ++v) ASSERT_LE(chsh(half, v), Rational(2));
  ASSERT_EQ(chsh(half, 0), Rational(2));
  const auto r = membership(half, PolytopeKind::Local);
  ASSERT_EQ(r.status, MembershipStatus::In);
  ASSERT_EQ(reconstruct(r.weights), half);
}

TEST(polytopes, membership_signaling_array_gets_farkas_certificate) {
  for (auto kind : {PolytopeKind::Local, PolytopeKind::NoSignaling}) {
    const auto r = membership(table3(), kind);
    ASSERT_EQ(r.status, MembershipStatus::Out);
    ASSERT_EQ(r.certificate->source, "farkas");
    expect_certificate_valid(table3(), *r.certificate, kind);
  }
}

TEST(polytopes, membership_rejects_invalid_arrays) {
  ASSERT_THROW(membership(RationalArray(), PolytopeKind::Local), InvalidArrayError);
}

TEST(polytopes, membership_singlet) {
  const auto s = quantum::tsirelson_settings();
  const FloatArray p = quantum::born_array(quantum::bell_state(1), s.alice, s.bob);
  const auto local = membership(p, PolytopeKind::Local);
  ASSERT_EQ(local.status, MembershipStatus::Out);
  ASSERT_EQ(local.certificate->source, "chsh");
  ASSERT_NEAR(local.certificate->value, quantum::kTsirelsonBound, 1e-9);
  const auto ns = membership(p, PolytopeKind::NoSignaling);
  ASSERT_EQ(ns.status, MembershipStatus::In);
  double total = 0;
  for (const auto &[id, w] : ns.weights) total += w;
  ASSERT_NEAR(total, 1.0, 1e-12);
}

TEST(polytopes, membership_float_boundary_band) {
  // CHSH = 2 + 4e-10: a hair outside, closer than the tolerance.
  const double eps = 1e-10;
  const FloatArray p = combine<double>({to_float(table1()), uniform_array<double>()}, {0.5 + eps, 0.5 - eps});
  ASSERT_NEAR(chsh(p, 0), 2 + 4 * eps, 1e-15);
  const auto r = membership(p, PolytopeKind::Local);
  ASSERT_EQ(r.status, MembershipStatus::BoundaryIndeterminate);

  const FloatArray far = combine<double>({to_float(table1()), uniform_array<double>()}, {0.75, 0.25});
  ASSERT_EQ(membership(far, PolytopeKind::Local).status, MembershipStatus::Out);
  const FloatArray inside = combine<double>({to_float(table1()), uniform_array<double>()}, {0.25, 0.75});
  ASSERT_EQ(membership(inside, PolytopeKind::Local).status, MembershipStatus::In);
}

TEST(polytopes, random_lhv_mixtures_are_members) {
  std::mt19937_64 gen(20260101);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto model = random_model(gen);
    const auto p = lhv_mixture(model);
    ASSERT_TRUE(no_signaling_check(p).passes);
    for (int v = 0; v < kChshVariants; ++v) {
      ASSERT_LE(chsh(p, v), Rational(2));
      ASSERT_GE(chsh(p, v), Rational(-2));
    }
    const auto r = membership(p, PolytopeKind::Local);
    ASSERT_EQ(r.status, MembershipStatus::In);
    ASSERT_EQ(reconstruct(r.weights), p);
  }
}

TEST(polytopes, lhv_mixture) {
  const auto point = LhvModel<Rational>::deterministic({{DeterministicVertex(0), Rational(1)}});
  ASSERT_EQ(lhv_mixture(point), table2());

  std::vector<std::pair<DeterministicVertex, Rational>> uniform;
  for (const auto &v : enumerate_deterministic(VertexKind::Local)) uniform.emplace_back(v, Rational(1, 16));
  const auto mix = lhv_mixture(LhvModel<Rational>::deterministic(uniform));
  std::array<double, 16> avg{};
  for (const auto &v : oracle::local_deterministic())
    for (int i = 0; i < 16; ++i) avg[i] += v[i] / 16;
  ASSERT_EQ(as_vector(mix), avg);
  ASSERT_EQ(mix, uniform_array<Rational>());
}

TEST(polytopes, lhv_model_validation) {
  using Support = std::vector<std::pair<DeterministicVertex, Rational>>;
  ASSERT_THROW(LhvModel<Rational>::deterministic(Support{{DeterministicVertex(0x53), Rational(1)}}),
               InvalidModelError);
  ASSERT_THROW(LhvModel<Rational>::deterministic(
                   Support{{DeterministicVertex(0), Rational(1, 2)}, {DeterministicVertex(0), Rational(1, 2)}}),
               InvalidModelError);
  ASSERT_THROW(LhvModel<Rational>::deterministic(Support{{DeterministicVertex(0), Rational(1, 2)}}),
               InvalidModelError);
  ASSERT_THROW(LhvModel<Rational>::deterministic(
                   Support{{DeterministicVertex(0), Rational(3, 2)}, {DeterministicVertex(5), Rational(-1, 2)}}),
               InvalidModelError);
  ASSERT_THROW(LhvModel<Rational>::deterministic(Support{}), InvalidModelError);
  ASSERT_THROW(LhvModel<Rational>::general({{RationalArray(), Rational(1)}}), InvalidModelError);
}

TEST(polytopes, independence_checks) {
  const auto det = LhvModel<Rational>::deterministic(
      {{DeterministicVertex(0), Rational(1, 3)}, {DeterministicVertex(255), Rational(2, 3)}});
  const auto d = lhv_independence_checks(det);
  ASSERT_TRUE(d.parameter_independence);
  ASSERT_TRUE(d.outcome_independence);
  ASSERT_TRUE(d.factorizes());

  const auto pr = lhv_independence_checks(LhvModel<Rational>::general({{table1(), Rational(1)}}));
  ASSERT_TRUE(pr.parameter_independence);
  ASSERT_FALSE(pr.outcome_independence);

  const auto sig = lhv_independence_checks(
      LhvModel<Rational>::general({{table3(), Rational(1, 2)}, {table2(), Rational(1, 2)}}));
  ASSERT_FALSE(sig.parameter_independence);
  ASSERT_FALSE(sig.factorizes());
}
