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
 * @file correlation.hpp
 * @brief Correlation arrays p(ab|xy) of the two-party, two-setting,
 *        two-outcome scenario and the elementary functionals on them.
 *
 * Encodings are fixed for the lifetime of the library:
 *
 *   Setting  Y -> 0, B -> 1          (peeling)
 *   Outcome  Ordinary -> 0, Intense -> 1   (taste); signed view -1 / +1
 *
 * With these encodings the standard PR box reads a XOR b = x AND y.
 *
 * Entries are stored context-major: index = 8x + 4y + 2a + b, so the four
 * entries of context (x, y) are contiguous in the order 00, 01, 10, 11.
 */

#ifndef BANANAWORLD_CORRELATION_HPP
#define BANANAWORLD_CORRELATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bananaworld/errors.hpp"
#include "bananaworld/scalar.hpp"

namespace bananaworld {

enum class Setting : std::uint8_t { Y = 0, B = 1 };
enum class Outcome : std::uint8_t { Ordinary = 0, Intense = 1 };

constexpr int bit(Setting s) { return static_cast<int>(s); }
constexpr int bit(Outcome o) { return static_cast<int>(o); }
constexpr Setting setting_from_bit(int v) { return v ? Setting::B : Setting::Y; }
constexpr Outcome outcome_from_bit(int v) { return v ? Outcome::Intense : Outcome::Ordinary; }

/// Ordinary -> -1, Intense -> +1.
constexpr int signed_value(Outcome o) { return o == Outcome::Intense ? 1 : -1; }

constexpr char setting_name(Setting s) { return s == Setting::Y ? 'Y' : 'B'; }

constexpr std::size_t entry_index(int a, int b, int x, int y) {
  return static_cast<std::size_t>(8 * x + 4 * y + 2 * a + b);
}
constexpr std::size_t context_index(int x, int y) { return static_cast<std::size_t>(2 * x + y); }

template <Scalar T>
class CorrelationArray {
 public:
  using value_type = T;
  using Entries = std::array<T, 16>;

  CorrelationArray() { entries_.fill(T(0)); }
  explicit CorrelationArray(Entries entries) : entries_(std::move(entries)) {}

  /// Builds an array from a callable f(a, b, x, y) -> T over bit encodings.
  template <class F>
  static CorrelationArray from_function(F &&f) {
    Entries e;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) e[entry_index(a, b, x, y)] = T(f(a, b, x, y));
    return CorrelationArray(std::move(e));
  }

  const T &operator()(int a, int b, int x, int y) const { return entries_[entry_index(a, b, x, y)]; }
  const T &p(Outcome a, Outcome b, Setting x, Setting y) const {
    return (*this)(bit(a), bit(b), bit(x), bit(y));
  }
  const Entries &entries() const { return entries_; }

  friend bool operator==(const CorrelationArray &, const CorrelationArray &) = default;

 private:
  Entries entries_;
};

using RationalArray = CorrelationArray<Rational>;
using FloatArray = CorrelationArray<double>;

inline FloatArray to_float(const RationalArray &array) {
  FloatArray::Entries e;
  for (std::size_t i = 0; i < 16; ++i) e[i] = to_double(array.entries()[i]);
  return FloatArray(e);
}

/// Convex (or any linear) combination sum_i w_i * arrays_i, entrywise.
template <Scalar T>
CorrelationArray<T> combine(const std::vector<CorrelationArray<T>> &arrays, const std::vector<T> &weights) {
  if (arrays.size() != weights.size()) throw ArgumentError("combine: arrays and weights differ in length");
  typename CorrelationArray<T>::Entries e;
  e.fill(T(0));
  for (std::size_t k = 0; k < arrays.size(); ++k)
    for (std::size_t i = 0; i < 16; ++i) e[i] += weights[k] * arrays[k].entries()[i];
  return CorrelationArray<T>(e);
}

// ---------------------------------------------------------------------------
// Reference arrays

/// Standard PR box: p(ab|xy) = 1/2 iff a XOR b = x AND y.
RationalArray table1();
/// Local deterministic array with both tastes ordinary in every context.
RationalArray table2();
/// Signaling deterministic array: Alice's taste equals Bob's peeling and
/// vice versa.
RationalArray table3();
/// PR box relabeled: a XOR b = NOT (x AND y).
RationalArray table4();

template <Scalar T>
CorrelationArray<T> uniform_array() {
  return CorrelationArray<T>::from_function([](int, int, int, int) { return T(1) / T(4); });
}

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind { OutOfRange, Normalization };

template <Scalar T>
struct Violation {
  ViolationKind kind;
  int x;
  int y;
  std::optional<std::pair<int, int>> outcomes;  // set for OutOfRange
  T magnitude;

  std::string describe() const {
    std::string ctx = std::string(1, setting_name(setting_from_bit(x))) + setting_name(setting_from_bit(y));
    if (kind == ViolationKind::Normalization) {
      return "context " + ctx + ": probabilities sum off by " + std::to_string(to_double(magnitude));
    }
    return "entry p(" + std::to_string(outcomes->first) + std::to_string(outcomes->second) + "|" + ctx +
           ") outside [0,1] by " + std::to_string(to_double(magnitude));
  }
};

/// Lists every range and normalization violation exceeding the tolerance.
/// An empty result means the array is a valid correlation array.
template <Scalar T>
std::vector<Violation<T>> validate(const CorrelationArray<T> &array,
                                   const T &tolerance = ScalarTraits<T>::default_tolerance()) {
  std::vector<Violation<T>> out;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      T sum(0);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const T &v = array(a, b, x, y);
          sum += v;
          T excess(0);
          if (v < T(0)) excess = T(-v);
          if (v > T(1)) excess = T(v - T(1));
          if (excess > tolerance) out.push_back({ViolationKind::OutOfRange, x, y, std::pair{a, b}, excess});
        }
      }
      T off = magnitude(T(sum - T(1)));
      if (off > tolerance) out.push_back({ViolationKind::Normalization, x, y, std::nullopt, off});
    }
  }
  return out;
}

template <Scalar T>
void require_valid(const CorrelationArray<T> &array, const T &tolerance = ScalarTraits<T>::default_tolerance()) {
  auto violations = validate(array, tolerance);
  if (!violations.empty()) {
    std::string msg = "invalid correlation array: " + violations.front().describe();
    if (violations.size() > 1) msg += " (+" + std::to_string(violations.size() - 1) + " more)";
    throw InvalidArrayError(msg);
  }
}

// ---------------------------------------------------------------------------
// Marginals and no-signaling

template <Scalar T>
struct Marginals {
  // alice[4a + 2x + y] = p_A(a|x,y); bob[4b + 2x + y] = p_B(b|x,y)
  std::array<T, 8> alice;
  std::array<T, 8> bob;

  const T &alice_p(int a, int x, int y) const { return alice[4 * a + 2 * x + y]; }
  const T &bob_p(int b, int x, int y) const { return bob[4 * b + 2 * x + y]; }
};

template <Scalar T>
Marginals<T> marginals(const CorrelationArray<T> &array) {
  require_valid(array);
  Marginals<T> m;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int o = 0; o < 2; ++o) {
        m.alice[4 * o + 2 * x + y] = array(o, 0, x, y) + array(o, 1, x, y);
        m.bob[4 * o + 2 * x + y] = array(0, o, x, y) + array(1, o, x, y);
      }
  return m;
}

template <Scalar T>
struct NoSignalingReport {
  // alice_residuals[2a + x] = |p_A(a|x,Y) - p_A(a|x,B)|
  std::array<T, 4> alice_residuals;
  // bob_residuals[2b + y] = |p_B(b|Y,y) - p_B(b|B,y)|
  std::array<T, 4> bob_residuals;
  T max_residual;
  T tolerance;
  bool passes;
};

template <Scalar T>
NoSignalingReport<T> no_signaling_check(const CorrelationArray<T> &array,
                                        const T &tolerance = ScalarTraits<T>::default_tolerance()) {
  const Marginals<T> m = marginals(array);
  NoSignalingReport<T> r;
  r.max_residual = T(0);
  for (int o = 0; o < 2; ++o) {
    for (int s = 0; s < 2; ++s) {
      r.alice_residuals[2 * o + s] = magnitude(T(m.alice_p(o, s, 0) - m.alice_p(o, s, 1)));
      r.bob_residuals[2 * o + s] = magnitude(T(m.bob_p(o, 0, s) - m.bob_p(o, 1, s)));
      if (r.alice_residuals[2 * o + s] > r.max_residual) r.max_residual = r.alice_residuals[2 * o + s];
      if (r.bob_residuals[2 * o + s] > r.max_residual) r.max_residual = r.bob_residuals[2 * o + s];
    }
  }
  r.tolerance = tolerance;
  r.passes = !(r.max_residual > tolerance);
  return r;
}

// ---------------------------------------------------------------------------
// Correlators and CHSH

/// <xy> = p(00|xy) + p(11|xy) - p(01|xy) - p(10|xy).
template <Scalar T>
T expectation(const CorrelationArray<T> &array, Setting x, Setting y) {
  require_valid(array);
  const int xi = bit(x), yi = bit(y);
  return array(0, 0, xi, yi) + array(1, 1, xi, yi) - array(0, 1, xi, yi) - array(1, 0, xi, yi);
}

/// CHSH variants. A variant v in 0..7 carries the minus sign on one context
/// and an overall sign:
///
///   v   minus on   overall        v   minus on   overall
///   0   BB         +              4   BB         -
///   1   BY         +              5   BY         -
///   2   YB         +              6   YB         -
///   3   YY         +              7   YY         -
///
/// Variant 0 is K = <YY> + <YB> + <BY> - <BB>.
inline constexpr int kChshVariants = 8;

constexpr std::size_t chsh_minus_context(int variant) { return static_cast<std::size_t>(3 - (variant & 3)); }
constexpr int chsh_overall_sign(int variant) { return (variant & 4) ? -1 : 1; }

/// Sign of the correlator of context (x, y) in the given variant.
constexpr int chsh_term_sign(int variant, int x, int y) {
  return chsh_overall_sign(variant) * (context_index(x, y) == chsh_minus_context(variant) ? -1 : 1);
}

/// The variant as a linear functional on the 16 entries.
std::array<int, 16> chsh_coefficients(int variant);

template <Scalar T>
T chsh(const CorrelationArray<T> &array, int variant = 0) {
  if (variant < 0 || variant >= kChshVariants) throw ArgumentError("CHSH variant must be in 0..7");
  require_valid(array);
  T k(0);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      T e = array(0, 0, x, y) + array(1, 1, x, y) - array(0, 1, x, y) - array(1, 0, x, y);
      if (chsh_term_sign(variant, x, y) > 0)
        k += e;
      else
        k -= e;
    }
  return k;
}

template <Scalar T>
struct ChshMax {
  T value;
  int variant;
};

/// Maximum over all 8 variants; ties resolve to the lowest index.
template <Scalar T>
ChshMax<T> chsh_max(const CorrelationArray<T> &array) {
  ChshMax<T> best{chsh(array, 0), 0};
  for (int v = 1; v < kChshVariants; ++v) {
    T k = chsh(array, v);
    if (k > best.value) best = {k, v};
  }
  return best;
}

/// True for context (x, y) iff p(ab|xy) = p_A(a|x,y) p_B(b|x,y) for all a, b.
template <Scalar T>
std::array<bool, 4> product_form_check(const CorrelationArray<T> &array,
                                       const T &tolerance = ScalarTraits<T>::default_tolerance()) {
  const Marginals<T> m = marginals(array);
  std::array<bool, 4> out{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      bool ok = true;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          if (magnitude(T(array(a, b, x, y) - m.alice_p(a, x, y) * m.bob_p(b, x, y))) > tolerance) ok = false;
      out[context_index(x, y)] = ok;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Local relabelings

/// A local reversible relabeling:
///   p'(a b | x y) = p(a ^ flip_alice[x], b ^ flip_bob[y] | x ^ swap_alice, y ^ swap_bob)
/// Outcome flips are conditioned on the party's own (new) setting.
struct Relabeling {
  bool swap_alice = false;
  bool swap_bob = false;
  std::array<bool, 2> flip_alice{false, false};
  std::array<bool, 2> flip_bob{false, false};

  template <Scalar T>
  CorrelationArray<T> apply(const CorrelationArray<T> &p) const {
    return CorrelationArray<T>::from_function([&](int a, int b, int x, int y) {
      return p(a ^ int(flip_alice[x]), b ^ int(flip_bob[y]), x ^ int(swap_alice), y ^ int(swap_bob));
    });
  }

  /// All 64 relabelings in a fixed order.
  static std::vector<Relabeling> all();
};

/// The relabeling R with chsh(R.apply(p), 0) == chsh(p, variant) for every p.
Relabeling relabeling_to_standard(int variant);

}  // namespace bananaworld

#endif  // BANANAWORLD_CORRELATION_HPP
