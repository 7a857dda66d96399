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
 * @file quantum.hpp
 * @brief Small dense complex linear algebra for qubit pairs and a qutrit:
 *        Bell states, Born-rule correlation arrays, the five-vector
 *        Klyachko frame and the two-qubit PBR measurement basis.
 *
 * Two-qubit amplitudes are ordered |00>, |01>, |10>, |11> with Alice's
 * qubit first.
 */

#ifndef BANANAWORLD_QUANTUM_HPP
#define BANANAWORLD_QUANTUM_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "bananaworld/correlation.hpp"
#include "bananaworld/random.hpp"

namespace bananaworld::quantum {

using Complex = std::complex<double>;

/// Tolerance for algebraic identities (norms, orthogonality, projectors).
inline constexpr double kAlgebraicTolerance = 1e-12;
/// Tolerance for Born-rule aggregates.
inline constexpr double kBornTolerance = 1e-9;

class StateVector {
 public:
  /// Dimension must be 2, 3 or 4. Normalization is not enforced here;
  /// operations that need it throw NormalizationError.
  explicit StateVector(std::vector<Complex> amplitudes);

  /// Rescales to unit norm; throws on the zero vector.
  static StateVector normalized(std::vector<Complex> amplitudes);

  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Complex> &amplitudes() const { return amplitudes_; }
  const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  bool is_normalized(double tol = kAlgebraicTolerance) const;

  /// <this|other>.
  Complex inner(const StateVector &other) const;

  /// this (x) other for two qubits.
  StateVector tensor(const StateVector &other) const;

 private:
  std::vector<Complex> amplitudes_;
};

/// kind 1..4: (|01>-|10>)/sqrt2, (|01>+|10>)/sqrt2, (|00>+|11>)/sqrt2,
/// (|00>-|11>)/sqrt2.
StateVector bell_state(int kind);

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Two-outcome projective qubit measurement along the direction at `angle`
/// in the x-z great circle of the Bloch sphere. Outcome 0 projects onto
/// cos(angle/2)|0> + sin(angle/2)|1>, outcome 1 onto its orthogonal
/// complement.
struct BinaryMeasurement {
  double angle = 0.0;

  Matrix2 projector(int outcome) const;
};

/// p(ab|xy) = <psi| P_a^x (x) P_b^y |psi>.
FloatArray born_array(const StateVector &state, const std::array<BinaryMeasurement, 2> &alice,
                      const std::array<BinaryMeasurement, 2> &bob);

struct MeasurementSettings {
  std::array<BinaryMeasurement, 2> alice;
  std::array<BinaryMeasurement, 2> bob;
};

/// Singlet settings at which CHSH variant 0 attains 2 sqrt 2:
/// Alice {0, pi/2}, Bob {5pi/4, 3pi/4}. For these measurements the singlet
/// correlator is -cos(theta_x - theta_y).
MeasurementSettings tsirelson_settings();

inline constexpr double kTsirelsonBound = 2.0 * std::numbers::sqrt2;

/// Uniformly random amplitudes (real and imaginary parts in [-1, 1),
/// then normalized) of the given dimension.
StateVector random_state(std::size_t dim, RandomSource &rng);

struct SweepResult {
  double maximum;
  std::size_t samples;
  std::uint64_t seed;
};

/// Largest chsh_max of born_array over random two-qubit states and random
/// measurement angles.
SweepResult random_chsh_sweep(std::size_t samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Klyachko pentagram

/// Five unit vectors v_k = (s cos(4 pi k / 5), s sin(4 pi k / 5), r) on a
/// circle around the north pole, chosen so that consecutive vectors are
/// orthogonal. Consecutive means k -> k+1 (mod 5), the step of the
/// pentagram.
struct KlyachkoFrame {
  /// Angle subtended at the center by an edge of the pentagram on the
  /// equator; only scaffolding for the construction, never used at runtime.
  static constexpr double kEquatorEdgeAngle = 4.0 * std::numbers::pi / 5.0;

  std::array<std::array<double, 3>, 5> vectors;
  /// Height of the circle's center above the origin; r^2 = 1/sqrt5.
  double r;
  /// Distance of each vertex from the circle's center.
  double s;
  /// Half-angle of the cone; cos^2(phi) = r^2.
  double phi;
};

KlyachkoFrame klyachko_frame();

/// Vertices i and j are joined by an orthogonality edge (5-cycle in
/// construction order). The same graph constrains Klyachko bananas.
constexpr bool cycle_adjacent(int i, int j) {
  const int d = ((j - i) % 5 + 5) % 5;
  return d == 1 || d == 4;
}

struct KlyachkoSum {
  std::array<double, 5> probabilities;
  double sum;
};

/// p_k = |<v_k|psi>|^2 for a normalized qutrit psi.
KlyachkoSum klyachko_sum(const KlyachkoFrame &frame, const StateVector &psi);

struct NoncontextualMax {
  int maximum;
  /// First maximizing 0/1 assignment in enumeration order.
  std::array<int, 5> witness;
  /// Number of assignments with no edge carrying two ones.
  int feasible_assignments;
};

/// Largest klyachko_sum over random normalized qutrit states.
SweepResult random_klyachko_sweep(const KlyachkoFrame &frame, std::size_t samples, std::uint64_t seed);

/// Exhaustive search over the 32 value assignments of the 5-cycle.
NoncontextualMax noncontextual_max();

// ---------------------------------------------------------------------------
// PBR

enum class PbrPreparation { Zero, Plus };

/// The entangled measurement basis, in the order
///   (|0>|1> + |1>|0>)/sqrt2, (|0>|-> + |1>|+>)/sqrt2,
///   (|+>|1> + |->|0>)/sqrt2, (|+>|-> + |->|+>)/sqrt2.
std::array<StateVector, 4> pbr_basis();

struct PbrOutcome {
  std::array<double, 4> probabilities;
  /// Index of the outcome with probability <= kAlgebraicTolerance.
  int blocked;
};

/// Outcome excluded by each product preparation: |00> -> 0, |0+> -> 1,
/// |+0> -> 2, |++> -> 3.
constexpr int pbr_designated_outcome(PbrPreparation first, PbrPreparation second) {
  return 2 * static_cast<int>(first) + static_cast<int>(second);
}

PbrOutcome pbr_probabilities(PbrPreparation first, PbrPreparation second);

StateVector ket_zero();
StateVector ket_one();
StateVector ket_plus();
StateVector ket_minus();

}  // namespace bananaworld::quantum

#endif  // BANANAWORLD_QUANTUM_HPP
