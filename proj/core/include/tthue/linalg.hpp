// Copyright 2026 The twisted-thue authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "tthue/ball.hpp"

namespace tthue {

// Exact rational matrix helpers (row-major).
using QMatrix = std::vector<std::vector<Rat>>;

std::size_t exact_rank(QMatrix m);
std::optional<std::vector<Rat>> exact_solve(QMatrix a, std::vector<Rat> rhs);
Rat exact_det(QMatrix m);
// Basis of the right kernel (each vector scaled to coprime integers).
std::vector<std::vector<Rat>> exact_kernel(QMatrix m);

// Interval matrix with certified operations. All results are enclosures of
// the corresponding exact objects for every point matrix inside the
// intervals; pivots that cannot be certified nonzero fail the operation.
class BallMatrix {
 public:
  BallMatrix() = default;
  BallMatrix(std::size_t rows, std::size_t cols, prec_t prec);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Ball& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Ball& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  BallMatrix transpose() const;
  BallMatrix operator*(const BallMatrix& o) const;

  // max absolute row sum (upper end); the operator norm for the sup vector
  // norm, consistent with ||Ax|| <= ||A|| ||x||
  Ball inf_norm() const;
  // max absolute column sum (upper end); operator norm for the l1 norm
  Ball l1_norm() const;

  // certified determinant: interval Gaussian elimination; nullopt when a
  // pivot cannot be certified nonzero at this precision
  std::optional<Ball> det() const;
  // certified inverse enclosure; nullopt when a pivot is undecided
  std::optional<BallMatrix> inverse() const;
  // certified full column rank: some maximal minor is certified nonzero
  bool certifies_full_column_rank() const;
  // enclosure of the Moore-Penrose pseudoinverse (A^T A)^{-1} A^T for a
  // full-column-rank matrix; nullopt if nonsingularity cannot be certified
  std::optional<BallMatrix> pseudo_inverse() const;
  // solve A x = b with square A; nullopt if a pivot is undecided
  std::optional<std::vector<Ball>> solve(const std::vector<Ball>& rhs) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  prec_t prec_ = kPrecDefault;
  std::vector<Ball> data_;
};

// LLL reduction (delta = 3/4) of an integer lattice basis given by rows.
// Exact rational Gram-Schmidt; fine at desk scale.
void lll_reduce(std::vector<std::vector<Int>>& basis);

}  // namespace tthue
