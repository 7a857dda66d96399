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
 * @file polytopes.hpp
 * @brief Deterministic vertex catalog, PR boxes, local and no-signaling
 *        polytopes, LP membership with certificates, and finite LHV models.
 */

#ifndef BANANAWORLD_POLYTOPES_HPP
#define BANANAWORLD_POLYTOPES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bananaworld/correlation.hpp"
#include "bananaworld/simplex.hpp"

namespace bananaworld {

/// A pair of response functions a = f(x, y), b = g(x, y).
///
/// The index packs the eight function values most-significant first:
///   bit 7..4 = f(Y,Y), f(Y,B), f(B,Y), f(B,B)
///   bit 3..0 = g(Y,Y), g(Y,B), g(B,Y), g(B,B)
class DeterministicVertex {
 public:
  explicit DeterministicVertex(std::uint8_t index) : index_(index) {}

  /// alice[2x + y] = f(x, y), bob[2x + y] = g(x, y).
  static DeterministicVertex from_functions(const std::array<Outcome, 4> &alice, const std::array<Outcome, 4> &bob);

  std::uint8_t index() const { return index_; }
  Outcome alice(Setting x, Setting y) const { return outcome_from_bit(alice_bit(bit(x), bit(y))); }
  Outcome bob(Setting x, Setting y) const { return outcome_from_bit(bob_bit(bit(x), bit(y))); }

  int alice_bit(int x, int y) const { return (index_ >> (7 - context_index(x, y))) & 1; }
  int bob_bit(int x, int y) const { return (index_ >> (3 - context_index(x, y))) & 1; }

  /// f independent of y and g independent of x.
  bool is_local() const;

  template <Scalar T>
  CorrelationArray<T> array() const {
    return CorrelationArray<T>::from_function([this](int a, int b, int x, int y) {
      return (a == alice_bit(x, y) && b == bob_bit(x, y)) ? T(1) : T(0);
    });
  }

  friend bool operator==(const DeterministicVertex &, const DeterministicVertex &) = default;
  friend auto operator<=>(const DeterministicVertex &, const DeterministicVertex &) = default;

 private:
  std::uint8_t index_;
};

enum class VertexKind { All, Local, Signaling };

/// Vertices in increasing index order: 256 / 16 / 240 for all / local / signaling.
std::vector<DeterministicVertex> enumerate_deterministic(VertexKind kind);

/// PR box: p(ab|xy) = 1/2 iff a ^ b = xy ^ alpha x ^ beta y ^ gamma.
struct PrBox {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;

  int code() const { return (alpha << 2) | (beta << 1) | gamma; }
  /// Polytope vertex id: deterministic vertices use their index 0..255, PR
  /// boxes use 256 + code.
  int vertex_id() const { return 256 + code(); }

  template <Scalar T>
  CorrelationArray<T> array() const {
    return CorrelationArray<T>::from_function([this](int a, int b, int x, int y) {
      return (a ^ b) == ((x & y) ^ (alpha & x) ^ (beta & y) ^ gamma) ? T(1) / T(2) : T(0);
    });
  }
};

/// The 8 PR boxes ordered by code = 4 alpha + 2 beta + gamma.
std::vector<PrBox> pr_boxes();

// ---------------------------------------------------------------------------
// Polytopes

enum class PolytopeKind { Local, NoSignaling };

template <Scalar T>
struct PolytopeVertex {
  int id;
  CorrelationArray<T> array;
};

/// Local: the 16 local deterministic vertices. No-signaling: those plus the
/// 8 PR boxes.
template <Scalar T>
std::vector<PolytopeVertex<T>> polytope_vertices(PolytopeKind kind) {
  std::vector<PolytopeVertex<T>> out;
  for (const auto &v : enumerate_deterministic(VertexKind::Local)) out.push_back({v.index(), v.array<T>()});
  if (kind == PolytopeKind::NoSignaling) {
    for (const auto &pr : pr_boxes()) out.push_back({pr.vertex_id(), pr.array<T>()});
  }
  return out;
}

enum class MembershipStatus { In, Out, BoundaryIndeterminate };

const char *to_string(MembershipStatus status);
const char *to_string(PolytopeKind kind);

/// A linear functional c with c . v <= bound on every polytope vertex v and
/// c . array = value > bound.
template <Scalar T>
struct SeparatingCertificate {
  std::array<T, 16> coefficients;
  T bound;
  T value;
  /// "chsh" when a CHSH variant separates, otherwise "farkas".
  std::string source;
  std::optional<int> chsh_variant;
};

template <Scalar T>
struct MembershipResult {
  MembershipStatus status = MembershipStatus::BoundaryIndeterminate;
  /// Convex weights (vertex id, weight) with positive weight; set for In.
  std::vector<std::pair<int, T>> weights;
  /// Set for Out.
  std::optional<SeparatingCertificate<T>> certificate;
  /// Phase-one optimum of the membership LP (0 for exact members).
  T infeasibility = T(0);
};

namespace detail {

template <Scalar T>
T dot(const std::array<T, 16> &c, const CorrelationArray<T> &p) {
  T s(0);
  for (std::size_t i = 0; i < 16; ++i) s += c[i] * p.entries()[i];
  return s;
}

/// max_v c . v over the polytope vertices.
template <Scalar T>
T max_over_vertices(const std::array<T, 16> &c, const std::vector<PolytopeVertex<T>> &vertices) {
  T best = dot(c, vertices.front().array);
  for (const auto &v : vertices) best = std::max(best, dot(c, v.array));
  return best;
}

}  // namespace detail

/// Fraction of the tolerance below which a float phase-one optimum counts
/// as exactly feasible; optima between this floor and the tolerance are
/// reported as BoundaryIndeterminate.
inline constexpr double kFloatFeasibleFraction = 1e-3;

/// Decides whether `array` lies in the chosen polytope by solving
///   sum_i w_i v_i = array,  sum_i w_i = 1,  w >= 0.
///
/// Rational input is decided exactly. In-weights are checked by
/// reconstruction and Out-certificates against every vertex before return.
/// For the local polytope a violated CHSH variant is preferred as the
/// certificate; otherwise the Farkas witness of the LP is used.
template <Scalar T>
MembershipResult<T> membership(const CorrelationArray<T> &array, PolytopeKind kind,
                               const T &tolerance = ScalarTraits<T>::default_tolerance()) {
  constexpr bool kExact = ScalarTraits<T>::kExact;
  require_valid(array, tolerance);
  const auto vertices = polytope_vertices<T>(kind);

  lp::DenseMatrix<T> a(17, vertices.size());
  std::vector<T> b(17);
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    for (std::size_t i = 0; i < 16; ++i) a(i, j) = vertices[j].array.entries()[i];
    a(16, j) = T(1);
  }
  for (std::size_t i = 0; i < 16; ++i) b[i] = array.entries()[i];
  b[16] = T(1);

  const T pivot_eps = kExact ? T(0) : T(1e-12);
  const T feasible_tol = kExact ? T(0) : T(tolerance * kFloatFeasibleFraction);
  const auto lp = lp::solve_feasibility(a, b, pivot_eps, feasible_tol);

  MembershipResult<T> result;
  result.infeasibility = lp.infeasibility;

  if (lp.feasible) {
    std::vector<std::pair<int, T>> weights;
    T total(0);
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      T w = lp.solution[j];
      if (!kExact && w < T(0)) w = T(0);
      if (w > T(0)) {
        weights.emplace_back(vertices[j].id, w);
        total += w;
      }
    }
    if constexpr (!kExact) {
      for (auto &w : weights) w.second /= total;
    }
    // Reconstruction check.
    typename CorrelationArray<T>::Entries rec;
    rec.fill(T(0));
    for (const auto &[id, w] : weights) {
      const auto it = std::find_if(vertices.begin(), vertices.end(), [id = id](const auto &v) { return v.id == id; });
      for (std::size_t i = 0; i < 16; ++i) rec[i] += w * it->array.entries()[i];
    }
    T residual(0);
    for (std::size_t i = 0; i < 16; ++i) residual = std::max(residual, magnitude(T(rec[i] - array.entries()[i])));
    if (kExact) {
      if (residual != T(0)) throw std::logic_error("membership: exact weights failed reconstruction");
      result.status = MembershipStatus::In;
      result.weights = std::move(weights);
    } else if (residual <= tolerance) {
      result.status = MembershipStatus::In;
      result.weights = std::move(weights);
    } else {
      result.status = MembershipStatus::BoundaryIndeterminate;
    }
    return result;
  }

  if (!kExact && !(lp.infeasibility > tolerance)) {
    result.status = MembershipStatus::BoundaryIndeterminate;
    return result;
  }

  std::optional<SeparatingCertificate<T>> cert;
  if (kind == PolytopeKind::Local) {
    const auto best = chsh_max(array);
    if (best.value - T(2) > (kExact ? T(0) : tolerance)) {
      SeparatingCertificate<T> c;
      const auto coeffs = chsh_coefficients(best.variant);
      for (std::size_t i = 0; i < 16; ++i) c.coefficients[i] = T(coeffs[i]);
      c.bound = T(2);
      c.value = best.value;
      c.source = "chsh";
      c.chsh_variant = best.variant;
      cert = c;
    }
  }
  if (!cert) {
    // y = (c, t): c . v + t <= 0 on vertices, c . p + t > 0.
    SeparatingCertificate<T> c;
    T scale(1);
    if constexpr (!kExact) {
      scale = T(0);
      for (std::size_t i = 0; i < 16; ++i) scale = std::max(scale, magnitude(lp.farkas[i]));
      if (scale == T(0)) scale = T(1);
    }
    for (std::size_t i = 0; i < 16; ++i) c.coefficients[i] = lp.farkas[i] / scale;
    c.bound = T(-lp.farkas[16] / scale);
    c.value = detail::dot(c.coefficients, array);
    c.source = "farkas";
    cert = c;
  }

  // Verify against every vertex before returning.
  const T vertex_max = detail::max_over_vertices(cert->coefficients, vertices);
  const T slack = kExact ? T(0) : tolerance;
  if (vertex_max > cert->bound + slack) {
    if (kExact) throw std::logic_error("membership: certificate fails on a polytope vertex");
    result.status = MembershipStatus::BoundaryIndeterminate;
    return result;
  }
  if (!(cert->value - cert->bound > slack)) {
    if (kExact) throw std::logic_error("membership: certificate does not separate the array");
    result.status = MembershipStatus::BoundaryIndeterminate;
    return result;
  }
  result.status = MembershipStatus::Out;
  result.certificate = std::move(cert);
  return result;
}

// ---------------------------------------------------------------------------
// Affine dimension

/// Rank of a row set by Gaussian elimination; exact for rationals, partial
/// pivoting with `eps` for floats.
template <Scalar T>
std::size_t matrix_rank(std::vector<std::array<T, 16>> rows, const T &eps) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 16 && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    T best(0);
    for (std::size_t r = rank; r < rows.size(); ++r) {
      const T mag = magnitude(rows[r][col]);
      if (mag > eps && (pivot == rows.size() || mag > best)) {
        pivot = r;
        best = mag;
        if constexpr (ScalarTraits<T>::kExact) break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == T(0)) continue;
      const T f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < 16; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// Dimension of the affine hull of the arrays as points of R^16.
template <Scalar T>
std::size_t affine_dimension(const std::vector<CorrelationArray<T>> &arrays,
                             const T &tolerance = ScalarTraits<T>::default_tolerance()) {
  if (arrays.empty()) throw ArgumentError("affine_dimension requires at least one array");
  for (const auto &p : arrays) require_valid(p, tolerance);
  std::vector<std::array<T, 16>> diffs;
  diffs.reserve(arrays.size() - 1);
  for (std::size_t k = 1; k < arrays.size(); ++k) {
    std::array<T, 16> d;
    for (std::size_t i = 0; i < 16; ++i) d[i] = arrays[k].entries()[i] - arrays[0].entries()[i];
    diffs.push_back(d);
  }
  return matrix_rank(std::move(diffs), tolerance);
}

// ---------------------------------------------------------------------------
// Local hidden variable models

template <Scalar T>
struct LhvComponent {
  /// p(ab|xy, lambda).
  CorrelationArray<T> conditional;
  T weight;
  /// Deterministic vertex index when the component is a vertex.
  std::optional<std::uint8_t> vertex;
};

/// A finite distribution rho(lambda) over per-lambda correlation arrays.
/// Deterministic models restrict lambda to distinct local vertices.
template <Scalar T>
class LhvModel {
 public:
  /// Throws InvalidModelError unless the vertices are local and distinct and
  /// the weights are nonnegative and sum to one.
  static LhvModel deterministic(const std::vector<std::pair<DeterministicVertex, T>> &support) {
    std::set<std::uint8_t> seen;
    std::vector<LhvComponent<T>> comps;
    for (const auto &[v, w] : support) {
      if (!v.is_local()) throw InvalidModelError("vertex " + std::to_string(v.index()) + " is not local");
      if (!seen.insert(v.index()).second)
        throw InvalidModelError("vertex " + std::to_string(v.index()) + " listed twice");
      comps.push_back({v.template array<T>(), w, v.index()});
    }
    return LhvModel(std::move(comps), true);
  }

  /// General per-lambda arrays; each must be a valid correlation array.
  static LhvModel general(const std::vector<std::pair<CorrelationArray<T>, T>> &support) {
    std::vector<LhvComponent<T>> comps;
    for (const auto &[p, w] : support) {
      if (!validate(p).empty()) throw InvalidModelError("per-lambda array is not a valid correlation array");
      comps.push_back({p, w, std::nullopt});
    }
    return LhvModel(std::move(comps), false);
  }

  const std::vector<LhvComponent<T>> &components() const { return components_; }
  bool is_deterministic() const { return deterministic_; }

 private:
  LhvModel(std::vector<LhvComponent<T>> comps, bool deterministic)
      : components_(std::move(comps)), deterministic_(deterministic) {
    if (components_.empty()) throw InvalidModelError("LHV model needs at least one component");
    T total(0);
    for (const auto &c : components_) {
      if (c.weight < T(0)) throw InvalidModelError("negative LHV weight");
      total += c.weight;
    }
    if (magnitude(T(total - T(1))) > ScalarTraits<T>::default_tolerance())
      throw InvalidModelError("LHV weights do not sum to one");
  }

  std::vector<LhvComponent<T>> components_;
  bool deterministic_;
};

/// sum_lambda rho(lambda) p(.|., lambda).
template <Scalar T>
CorrelationArray<T> lhv_mixture(const LhvModel<T> &model) {
  std::vector<CorrelationArray<T>> arrays;
  std::vector<T> weights;
  for (const auto &c : model.components()) {
    arrays.push_back(c.conditional);
    weights.push_back(c.weight);
  }
  return combine(arrays, weights);
}

struct IndependenceChecks {
  bool parameter_independence;
  bool outcome_independence;
  /// Both hold: p(ab|xy,l) = p(a|x,l) p(b|y,l) for every lambda.
  bool factorizes() const { return parameter_independence && outcome_independence; }
};

/// Parameter independence: every per-lambda array is no-signaling.
/// Outcome independence: every per-lambda array is a product in each context.
template <Scalar T>
IndependenceChecks lhv_independence_checks(const LhvModel<T> &model,
                                           const T &tolerance = ScalarTraits<T>::default_tolerance()) {
  IndependenceChecks out{true, true};
  for (const auto &c : model.components()) {
    if (!no_signaling_check(c.conditional, tolerance).passes) out.parameter_independence = false;
    const auto prod = product_form_check(c.conditional, tolerance);
    if (!std::all_of(prod.begin(), prod.end(), [](bool v) { return v; })) out.outcome_independence = false;
  }
  return out;
}

}  // namespace bananaworld

#endif  // BANANAWORLD_POLYTOPES_HPP
