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

#include "bananaworld/quantum.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace bananaworld::quantum {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_normalized(const StateVector &v, const char *what) {
  if (!v.is_normalized()) {
    throw NormalizationError(std::string(what) + ": state is not normalized (norm " + std::to_string(v.norm()) +
                             ")");
  }
}

StateVector add_scaled(const StateVector &u, const StateVector &v, double scale) {
  std::vector<Complex> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = scale * (u[i] + v[i]);
  return StateVector(std::move(out));
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 2 || amplitudes_.size() > 4) {
    throw ArgumentError("state dimension must be 2, 3 or 4, got " + std::to_string(amplitudes_.size()));
  }
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  StateVector v(std::move(amplitudes));
  const double n = v.norm();
  if (n == 0.0) throw NormalizationError("cannot normalize the zero vector");
  for (auto &c : v.amplitudes_) c /= n;
  return v;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto &c : amplitudes_) s += std::norm(c);
  return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

Complex StateVector::inner(const StateVector &other) const {
  if (other.dim() != dim()) throw ArgumentError("inner product of states with different dimensions");
  Complex s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) s += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  return s;
}

StateVector StateVector::tensor(const StateVector &other) const {
  if (dim() != 2 || other.dim() != 2) throw ArgumentError("tensor product is defined for two qubits only");
  return StateVector({amplitudes_[0] * other[0], amplitudes_[0] * other[1], amplitudes_[1] * other[0],
                      amplitudes_[1] * other[1]});
}

StateVector ket_zero() { return StateVector({1.0, 0.0}); }
StateVector ket_one() { return StateVector({0.0, 1.0}); }
StateVector ket_plus() { return StateVector({kInvSqrt2, kInvSqrt2}); }
StateVector ket_minus() { return StateVector({kInvSqrt2, -kInvSqrt2}); }

StateVector bell_state(int kind) {
  switch (kind) {
    case 1:
      return StateVector({0.0, kInvSqrt2, -kInvSqrt2, 0.0});
    case 2:
      return StateVector({0.0, kInvSqrt2, kInvSqrt2, 0.0});
    case 3:
      return StateVector({kInvSqrt2, 0.0, 0.0, kInvSqrt2});
    case 4:
      return StateVector({kInvSqrt2, 0.0, 0.0, -kInvSqrt2});
    default:
      throw ArgumentError("Bell state kind must be 1..4, got " + std::to_string(kind));
  }
}

Matrix2 BinaryMeasurement::projector(int outcome) const {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Matrix2 p0{{{c * c, c * s}, {c * s, s * s}}};
  if (outcome == 0) return p0;
  return Matrix2{{{1.0 - p0[0][0], -p0[0][1]}, {-p0[1][0], 1.0 - p0[1][1]}}};
}

FloatArray born_array(const StateVector &state, const std::array<BinaryMeasurement, 2> &alice,
                      const std::array<BinaryMeasurement, 2> &bob) {
  if (state.dim() != 4) throw ArgumentError("born_array needs a two-qubit state");
  require_normalized(state, "born_array");
  return FloatArray::from_function([&](int a, int b, int x, int y) {
    const Matrix2 pa = alice[x].projector(a);
    const Matrix2 pb = bob[y].projector(b);
    // <psi| (pa (x) pb) |psi> with index i = 2 i_A + i_B.
    Complex acc = 0.0;
    for (int r = 0; r < 4; ++r) {
      Complex row = 0.0;
      for (int c = 0; c < 4; ++c) row += pa[r >> 1][c >> 1] * pb[r & 1][c & 1] * state[c];
      acc += std::conj(state[r]) * row;
    }
    return acc.real();
  });
}

MeasurementSettings tsirelson_settings() {
  constexpr double pi = std::numbers::pi;
  return {{BinaryMeasurement{0.0}, BinaryMeasurement{pi / 2.0}},
          {BinaryMeasurement{5.0 * pi / 4.0}, BinaryMeasurement{3.0 * pi / 4.0}}};
}

StateVector random_state(std::size_t dim, RandomSource &rng) {
  for (;;) {
    std::vector<Complex> amps(dim);
    for (auto &c : amps) {
      const double re = 2.0 * rng.uniform() - 1.0;
      const double im = 2.0 * rng.uniform() - 1.0;
      c = {re, im};
    }
    StateVector v(amps);
    if (v.norm() > 1e-6) return StateVector::normalized(std::move(amps));
  }
}

SweepResult random_chsh_sweep(std::size_t samples, std::uint64_t seed) {
  RandomSource rng(seed);
  SweepResult out{0.0, samples, seed};
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t n = 0; n < samples; ++n) {
    const StateVector state = random_state(4, rng);
    std::array<BinaryMeasurement, 2> alice, bob;
    for (auto &m : alice) m.angle = two_pi * rng.uniform();
    for (auto &m : bob) m.angle = two_pi * rng.uniform();
    const double k = chsh_max(born_array(state, alice, bob)).value;
    if (n == 0 || k > out.maximum) out.maximum = k;
  }
  return out;
}

KlyachkoFrame klyachko_frame() {
  constexpr double pi = std::numbers::pi;
  KlyachkoFrame f;
  f.s = 1.0 / (std::numbers::sqrt2 * std::cos(pi / 10.0));
  f.r = std::sqrt(1.0 - f.s * f.s);
  f.phi = std::acos(f.r);
  for (int k = 0; k < 5; ++k) {
    const double t = 4.0 * pi * k / 5.0;
    f.vectors[k] = {f.s * std::cos(t), f.s * std::sin(t), f.r};
  }
  return f;
}

KlyachkoSum klyachko_sum(const KlyachkoFrame &frame, const StateVector &psi) {
  if (psi.dim() != 3) throw ArgumentError("klyachko_sum needs a qutrit state");
  require_normalized(psi, "klyachko_sum");
  KlyachkoSum out{};
  out.sum = 0.0;
  for (int k = 0; k < 5; ++k) {
    Complex amp = 0.0;
    for (int i = 0; i < 3; ++i) amp += frame.vectors[k][i] * psi[i];
    out.probabilities[k] = std::norm(amp);
    out.sum += out.probabilities[k];
  }
  return out;
}

SweepResult random_klyachko_sweep(const KlyachkoFrame &frame, std::size_t samples, std::uint64_t seed) {
  RandomSource rng(seed);
  SweepResult out{0.0, samples, seed};
  for (std::size_t n = 0; n < samples; ++n) {
    const double sum = klyachko_sum(frame, random_state(3, rng)).sum;
    if (n == 0 || sum > out.maximum) out.maximum = sum;
  }
  return out;
}

NoncontextualMax noncontextual_max() {
  NoncontextualMax out{-1, {}, 0};
  for (int mask = 0; mask < 32; ++mask) {
    bool feasible = true;
    for (int k = 0; k < 5 && feasible; ++k) {
      if ((mask >> k & 1) && (mask >> ((k + 1) % 5) & 1)) feasible = false;
    }
    if (!feasible) continue;
    ++out.feasible_assignments;
    const int total = std::popcount(static_cast<unsigned>(mask));
    if (total > out.maximum) {
      out.maximum = total;
      for (int k = 0; k < 5; ++k) out.witness[k] = mask >> k & 1;
    }
  }
  return out;
}

std::array<StateVector, 4> pbr_basis() {
  const StateVector z = ket_zero(), o = ket_one(), p = ket_plus(), m = ket_minus();
  return {add_scaled(z.tensor(o), o.tensor(z), kInvSqrt2), add_scaled(z.tensor(m), o.tensor(p), kInvSqrt2),
          add_scaled(p.tensor(o), m.tensor(z), kInvSqrt2), add_scaled(p.tensor(m), m.tensor(p), kInvSqrt2)};
}

PbrOutcome pbr_probabilities(PbrPreparation first, PbrPreparation second) {
  auto prep = [](PbrPreparation p) { return p == PbrPreparation::Zero ? ket_zero() : ket_plus(); };
  const StateVector input = prep(first).tensor(prep(second));
  const auto basis = pbr_basis();
  PbrOutcome out{};
  out.blocked = -1;
  int blocked_count = 0;
  for (int i = 0; i < 4; ++i) {
    out.probabilities[i] = std::norm(basis[i].inner(input));
    if (out.probabilities[i] <= kAlgebraicTolerance) {
      out.blocked = i;
      ++blocked_count;
    }
  }
  if (blocked_count != 1) throw std::logic_error("pbr_probabilities: expected exactly one blocked outcome");
  return out;
}

}  // namespace bananaworld::quantum
