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

#include "tthue/linalg.hpp"

#include <algorithm>

#include "tthue/errors.hpp"

namespace tthue {

std::size_t exact_rank(QMatrix m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    Rat inv = 1 / m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rat>> exact_solve(QMatrix a, std::vector<Rat> rhs) {
  const std::size_t n = a.size();
  if (n == 0 || a[0].size() != n || rhs.size() != n)
    throw Error(errc::internal, "exact_solve shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(rhs[col], rhs[piv]);
    Rat inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

Rat exact_det(QMatrix m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[col], m[piv]);
      det = -det;
    }
    det *= m[col][col];
    Rat inv = 1 / m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

std::vector<std::vector<Rat>> exact_kernel(QMatrix m) {
  if (m.empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    Rat inv = 1 / m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_of_col[col] = static_cast<long>(rank);
    ++rank;
  }
  std::vector<std::vector<Rat>> kernel;
  for (std::size_t freec = 0; freec < cols; ++freec) {
    if (pivot_of_col[freec] >= 0) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[freec] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -m[static_cast<std::size_t>(pivot_of_col[c])][freec];
    // scale to coprime integers
    Int den = 1;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    Int g = 0;
    for (auto& q : v) {
      q *= Rat(den);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    }
    if (g > 1)
      for (auto& q : v) q /= Rat(g);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// ---------- BallMatrix ----------

BallMatrix::BallMatrix(std::size_t rows, std::size_t cols, prec_t prec)
    : rows_(rows), cols_(cols), prec_(prec), data_(rows * cols, Ball::zero(prec)) {}

BallMatrix BallMatrix::transpose() const {
  BallMatrix t(cols_, rows_, prec_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

BallMatrix BallMatrix::operator*(const BallMatrix& o) const {
  if (cols_ != o.rows_) throw Error(errc::internal, "matrix product shape mismatch");
  BallMatrix r(rows_, o.cols_, std::max(prec_, o.prec_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Ball s = Ball::zero(std::max(prec_, o.prec_));
      for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Ball BallMatrix::inf_norm() const {
  Ball best = Ball::zero(prec_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Ball s = Ball::zero(prec_);
    for (std::size_t j = 0; j < cols_; ++j) s = s + at(i, j).abs();
    best = Ball::max(best, s);
  }
  return best;
}

Ball BallMatrix::l1_norm() const {
  Ball best = Ball::zero(prec_);
  for (std::size_t j = 0; j < cols_; ++j) {
    Ball s = Ball::zero(prec_);
    for (std::size_t i = 0; i < rows_; ++i) s = s + at(i, j).abs();
    best = Ball::max(best, s);
  }
  return best;
}

namespace {

// Interval Gaussian elimination with certified-nonzero pivoting. Row
// operations are applied to the tied matrices as well. Returns false when
// some column has no pivot certified away from zero.
bool eliminate(BallMatrix& m, std::vector<BallMatrix*> tied, Ball* det, prec_t prec) {
  const std::size_t n = m.rows();
  if (det) *det = Ball::exact(1L, prec);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    Ball best_low = Ball::zero(prec);
    for (std::size_t i = col; i < n; ++i) {
      const Ball& cand = m.at(i, col);
      if (cand.contains_zero()) continue;
      Ball lowabs = cand.abs();
      if (best == n || best_low.definitely_lt(lowabs)) {
        best = i;
        best_low = lowabs;
      }
    }
    if (best == n) return false;
    if (best != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(best, j));
      for (auto* t : tied)
        for (std::size_t j = 0; j < t->cols(); ++j) std::swap(t->at(col, j), t->at(best, j));
      if (det) *det = -*det;
    }
    Ball piv = m.at(col, col);
    if (det) *det = *det * piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      if (m.at(i, col).is_exact_zero()) continue;
      Ball f = m.at(i, col) / piv;
      for (std::size_t j = col + 1; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
      m.at(i, col) = Ball::zero(prec);
      for (auto* t : tied)
        for (std::size_t j = 0; j < t->cols(); ++j)
          t->at(i, j) = t->at(i, j) - f * t->at(col, j);
    }
  }
  return true;
}

}  // namespace

std::optional<Ball> BallMatrix::det() const {
  if (rows_ != cols_) throw Error(errc::internal, "det of non-square matrix");
  if (rows_ == 0) return Ball::exact(1L, prec_);
  BallMatrix work = *this;
  Ball d = Ball::zero(prec_);
  if (!eliminate(work, {}, &d, prec_)) return std::nullopt;
  return d;
}

std::optional<BallMatrix> BallMatrix::inverse() const {
  if (rows_ != cols_) throw Error(errc::internal, "inverse of non-square matrix");
  BallMatrix work = *this;
  BallMatrix inv(rows_, rows_, prec_);
  for (std::size_t i = 0; i < rows_; ++i) inv.at(i, i) = Ball::exact(1L, prec_);
  std::vector<BallMatrix*> tied{&inv};
  if (!eliminate(work, tied, nullptr, prec_)) return std::nullopt;
  for (std::size_t i = 0; i < rows_; ++i) {
    Ball piv = work.at(i, i);
    for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = inv.at(i, j) / piv;
  }
  return inv;
}

std::optional<std::vector<Ball>> BallMatrix::solve(const std::vector<Ball>& rhs) const {
  if (rows_ != cols_ || rhs.size() != rows_) throw Error(errc::internal, "solve shape mismatch");
  BallMatrix b(rows_, 1, prec_);
  for (std::size_t i = 0; i < rows_; ++i) b.at(i, 0) = rhs[i];
  BallMatrix work = *this;
  std::vector<BallMatrix*> tied{&b};
  if (!eliminate(work, tied, nullptr, prec_)) return std::nullopt;
  std::vector<Ball> out(rows_, Ball::zero(prec_));
  for (std::size_t i = 0; i < rows_; ++i) out[i] = b.at(i, 0) / work.at(i, i);
  return out;
}

bool BallMatrix::certifies_full_column_rank() const {
  if (cols_ > rows_) return false;
  if (cols_ == 0) return true;
  // Gram matrix route first: A^T A nonsingular iff full column rank
  BallMatrix gram = transpose() * (*this);
  if (auto d = gram.det(); d && !d->contains_zero()) return true;
  // fall back to maximal minors (dimensions here are tiny)
  if (rows_ <= 12) {
    std::vector<std::size_t> idx(cols_);
    for (std::size_t i = 0; i < cols_; ++i) idx[i] = i;
    while (true) {
      BallMatrix minor(cols_, cols_, prec_);
      for (std::size_t i = 0; i < cols_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) minor.at(i, j) = at(idx[i], j);
      if (auto d = minor.det(); d && !d->contains_zero()) return true;
      std::size_t k = cols_;
      while (k > 0 && idx[k - 1] == rows_ - cols_ + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < cols_; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

std::optional<BallMatrix> BallMatrix::pseudo_inverse() const {
  BallMatrix gram = transpose() * (*this);
  auto inv = gram.inverse();
  if (!inv) return std::nullopt;
  return *inv * transpose();
}

// ---------- LLL ----------

void lll_reduce(std::vector<std::vector<Int>>& basis) {
  const std::size_t n = basis.size();
  if (n == 0) return;
  const std::size_t dim = basis[0].size();
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> B(n, Rat(0));
  std::vector<std::vector<Rat>> gs(n, std::vector<Rat>(dim, Rat(0)));
  auto recompute = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < dim; ++k) gs[i][k] = Rat(basis[i][k]);
      for (std::size_t j = 0; j < i; ++j) {
        Rat num = 0;
        for (std::size_t k = 0; k < dim; ++k) num += Rat(basis[i][k]) * gs[j][k];
        mu[i][j] = B[j] == 0 ? Rat(0) : num / B[j];
        for (std::size_t k = 0; k < dim; ++k) gs[i][k] -= mu[i][j] * gs[j][k];
      }
      B[i] = 0;
      for (std::size_t k = 0; k < dim; ++k) B[i] += gs[i][k] * gs[i][k];
    }
  };
  recompute();
  auto size_reduce = [&](std::size_t i, std::size_t j) {
    // subtract the nearest-integer multiple
    Rat m = mu[i][j] + Rat(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), m.get_num().get_mpz_t(), m.get_den().get_mpz_t());
    if (q != 0)
      for (std::size_t k = 0; k < dim; ++k) basis[i][k] -= q * basis[j][k];
  };
  const Rat delta(3, 4);
  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < n && ++guard < 200000) {
    for (std::size_t j = k; j-- > 0;) size_reduce(k, j);
    recompute();
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      recompute();
      if (k > 1) --k;
    }
  }
  if (guard >= 200000) throw Error(errc::internal, "LLL iteration guard tripped");
}

}  // namespace tthue
