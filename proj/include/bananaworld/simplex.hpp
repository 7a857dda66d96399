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

#ifndef BANANAWORLD_SIMPLEX_HPP
#define BANANAWORLD_SIMPLEX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bananaworld/errors.hpp"
#include "bananaworld/scalar.hpp"

namespace bananaworld::lp {

template <Scalar T>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

template <Scalar T>
struct FeasibilityResult {
  bool feasible = false;
  /// Basic feasible solution x >= 0 with A x = b (when feasible).
  std::vector<T> solution;
  /// Farkas witness y with y^T A_j <= 0 for every column and y^T b > 0
  /// (when infeasible). Always filled from the phase-one duals.
  std::vector<T> farkas;
  /// Optimal phase-one objective: the total artificial infeasibility.
  T infeasibility = T(0);
  std::size_t pivots = 0;
};

/// Decides feasibility of { x >= 0 : A x = b } with a phase-one primal
/// simplex on a dense tableau. Bland's rule is used for both the entering and
/// the leaving variable, so degenerate problems terminate.
///
/// `pivot_eps` is the zero threshold for pivot and reduced-cost tests (0 for
/// exact scalars). `feasibility_tol` bounds the phase-one optimum accepted as
/// feasible.
template <Scalar T>
FeasibilityResult<T> solve_feasibility(const DenseMatrix<T> &a, const std::vector<T> &b, const T &pivot_eps,
                                       const T &feasibility_tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw ArgumentError("solve_feasibility: dimension mismatch");

  // Columns: n structural, m artificial, 1 right-hand side. Row m is the
  // phase-one reduced-cost row; its rhs holds -z.
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  DenseMatrix<T> tab(m + 1, width);
  std::vector<int> row_sign(m, 1);
  std::vector<std::size_t> basis(m);

  for (std::size_t i = 0; i < m; ++i) {
    row_sign[i] = b[i] < T(0) ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab(i, j) = row_sign[i] > 0 ? a(i, j) : T(-a(i, j));
    tab(i, n + i) = T(1);
    tab(i, rhs) = row_sign[i] > 0 ? b[i] : T(-b[i]);
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) {
    T s(0);
    for (std::size_t i = 0; i < m; ++i) s += tab(i, j);
    tab(m, j) = T(-s);
  }
  {
    T s(0);
    for (std::size_t i = 0; i < m; ++i) s += tab(i, rhs);
    tab(m, rhs) = T(-s);
  }

  FeasibilityResult<T> result;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (tab(m, j) < T(-pivot_eps)) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    T best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!(tab(i, enter) > pivot_eps)) continue;
      T ratio = tab(i, rhs) / tab(i, enter);
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an unbounded ray cannot occur.
    if (leave == m) throw std::logic_error("solve_feasibility: unbounded phase-one problem");

    const T piv = tab(leave, enter);
    for (std::size_t j = 0; j < width; ++j) tab(leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const T factor = tab(i, enter);
      if (factor == T(0)) continue;
      for (std::size_t j = 0; j < width; ++j) {
        if (tab(leave, j) != T(0)) tab(i, j) -= factor * tab(leave, j);
      }
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  result.infeasibility = T(-tab(m, rhs));
  result.feasible = !(result.infeasibility > feasibility_tol);
  result.solution.assign(n, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) result.solution[basis[i]] = tab(i, rhs);
  }
  // Artificial k has cost 1, so its reduced cost is 1 - y_k.
  result.farkas.assign(m, T(0));
  for (std::size_t k = 0; k < m; ++k) {
    T y = T(1) - tab(m, n + k);
    result.farkas[k] = row_sign[k] > 0 ? y : T(-y);
  }
  return result;
}

}  // namespace bananaworld::lp

#endif  // BANANAWORLD_SIMPLEX_HPP
