// Copyright 2026 The symcontain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMCONTAIN_RATIONAL_LP_HPP
#define SYMCONTAIN_RATIONAL_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "symcontain/errors.hpp"

namespace symcontain {

/// Solution of a packing LP together with the optimal dual vector.
template <class Scalar>
struct PackingSolution {
  Scalar value{};
  std::vector<Scalar> primal;  // y
  std::vector<Scalar> dual;    // x, optimal for min b.x s.t. A^T x >= c, x >= 0
};

/// Dense tableau simplex for
///
///     maximize c.y  subject to  A y <= b,  y >= 0,
///
/// with b >= 0 so the origin is a feasible starting basis. Bland's rule
/// guarantees termination; with an exact Scalar the result is exact.
template <class Scalar>
class PackingSimplex {
 public:
  PackingSimplex(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b, std::vector<Scalar> c)
      : rows_(a.size()), cols_(c.size()) {
    if (b.size() != rows_) throw invalid_input("LP: rhs length mismatch");
    for (const auto& row : a) {
      if (row.size() != cols_) throw invalid_input("LP: row length mismatch");
    }
    for (const auto& bi : b) {
      if (bi < 0) throw invalid_input("LP: rhs must be nonnegative");
    }
    const std::size_t width = cols_ + rows_ + 1;
    tableau_.assign(rows_ + 1, std::vector<Scalar>(width, Scalar(0)));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) tableau_[i][j] = a[i][j];
      tableau_[i][cols_ + i] = Scalar(1);
      tableau_[i][width - 1] = b[i];
    }
    for (std::size_t j = 0; j < cols_; ++j) tableau_[rows_][j] = -c[j];
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) basis_[i] = cols_ + i;
  }

  /// Runs to optimality. Returns nullopt when the LP is unbounded.
  std::optional<PackingSolution<Scalar>> solve() {
    const std::size_t width = cols_ + rows_ + 1;
    auto& obj = tableau_[rows_];
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j + 1 < width; ++j) {
        if (obj[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) break;

      std::optional<std::size_t> leaving;
      Scalar best_ratio{};
      for (std::size_t i = 0; i < rows_; ++i) {
        const Scalar& pivot = tableau_[i][*entering];
        if (!(pivot > 0)) continue;
        Scalar ratio = tableau_[i][width - 1] / pivot;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return std::nullopt;
      pivot(*leaving, *entering);
    }

    PackingSolution<Scalar> sol;
    sol.value = obj[width - 1];
    sol.primal.assign(cols_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) sol.primal[basis_[i]] = tableau_[i][width - 1];
    }
    sol.dual.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) sol.dual[i] = obj[cols_ + i];
    return sol;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Scalar p = tableau_[row][col];
    for (auto& v : tableau_[row]) v /= p;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      const Scalar f = tableau_[i][col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < tableau_[i].size(); ++j) tableau_[i][j] -= f * tableau_[row][j];
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Scalar>> tableau_;
  std::vector<std::size_t> basis_;
};

}  // namespace symcontain

#endif  // SYMCONTAIN_RATIONAL_LP_HPP
