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

#include <random>

#include "doctest.h"

using namespace tthue;

TEST_CASE("exact rank, det, solve, kernel") {
  QMatrix m{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(exact_rank(m) == 1);
  QMatrix id{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(exact_rank(id) == 2);
  CHECK(exact_det(QMatrix{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}) == Rat(-2));
  auto sol = exact_solve(QMatrix{{Rat(2), Rat(1)}, {Rat(1), Rat(3)}}, {Rat(5), Rat(10)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rat(1));
  CHECK((*sol)[1] == Rat(3));
  CHECK(!exact_solve(m, {Rat(1), Rat(1)}).has_value());
  auto ker = exact_kernel(m);
  REQUIRE(ker.size() == 1);
  Rat combo = ker[0][0] * Rat(1) + ker[0][1] * Rat(2);
  CHECK(combo == 0);
}

TEST_CASE("ball matrix inverse is a certified enclosure") {
  BallMatrix a(2, 2, 128);
  a.at(0, 0) = Ball::exact(2L, 128);
  a.at(0, 1) = Ball::exact(1L, 128);
  a.at(1, 0) = Ball::exact(1L, 128);
  a.at(1, 1) = Ball::exact(3L, 128);
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  // exact inverse of [[2,1],[1,3]] is [[3/5,-1/5],[-1/5,2/5]]
  CHECK(inv->at(0, 0).contains(Rat(3, 5)));
  CHECK(inv->at(0, 1).contains(Rat(-1, 5)));
  CHECK(inv->at(1, 1).contains(Rat(2, 5)));
  auto d = a.det();
  REQUIRE(d.has_value());
  CHECK(d->contains(Rat(5)));
}

TEST_CASE("singular ball matrix yields nullopt, not a wrong answer") {
  BallMatrix a(2, 2, 96);
  a.at(0, 0) = Ball::exact(1L, 96);
  a.at(0, 1) = Ball::exact(2L, 96);
  a.at(1, 0) = Ball::exact(2L, 96);
  a.at(1, 1) = Ball::exact(4L, 96);
  auto det = a.det();
  bool det_undecided_or_zero = !det.has_value() || det->contains_zero();
  CHECK(det_undecided_or_zero);
  CHECK(!a.inverse().has_value());
  CHECK(!a.certifies_full_column_rank());
}

TEST_CASE("norms") {
  BallMatrix a(2, 2, 96);
  a.at(0, 0) = Ball::exact(1L, 96);
  a.at(0, 1) = Ball::exact(-2L, 96);
  a.at(1, 0) = Ball::exact(3L, 96);
  a.at(1, 1) = Ball::exact(1L, 96);
  CHECK(a.inf_norm().contains(Rat(4)));  // row 1: 3 + 1
  CHECK(a.l1_norm().contains(Rat(4)));   // col 0: 1 + 3
}

TEST_CASE("pseudo inverse of a thin full-rank matrix") {
  // A = (1; 2): pinv = (1/5, 2/5)
  BallMatrix a(2, 1, 128);
  a.at(0, 0) = Ball::exact(1L, 128);
  a.at(1, 0) = Ball::exact(2L, 128);
  CHECK(a.certifies_full_column_rank());
  auto p = a.pseudo_inverse();
  REQUIRE(p.has_value());
  CHECK(p->rows() == 1);
  CHECK(p->cols() == 2);
  CHECK(p->at(0, 0).contains(Rat(1, 5)));
  CHECK(p->at(0, 1).contains(Rat(2, 5)));
}

TEST_CASE("random solve enclosures contain the exact solution") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3;
    QMatrix aq(n, std::vector<Rat>(n));
    std::vector<Rat> bq(n);
    BallMatrix ab(n, n, 128);
    std::vector<Ball> bb(n, Ball::zero(128));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long v = d(rng);
        aq[i][j] = Rat(v);
        ab.at(i, j) = Ball::exact(v, 128);
      }
      long v = d(rng);
      bq[i] = Rat(v);
      bb[i] = Ball::exact(v, 128);
    }
    auto exact = exact_solve(aq, bq);
    auto balls = ab.solve(bb);
    if (!exact.has_value()) continue;  // singular sample
    if (!balls.has_value()) continue;  // pivot undecided (fine for enclosures)
    for (std::size_t i = 0; i < n; ++i) CHECK(balls->at(i).contains((*exact)[i]));
  }
}

TEST_CASE("LLL finds an obvious short relation") {
  // rows generate a lattice with the short vector (1, -1, 0) hidden in it
  std::vector<std::vector<Int>> basis{
      {Int(1), Int(0), Int(1000003)},
      {Int(0), Int(1), Int(1000000)},
      {Int(0), Int(0), Int(7)},
  };
  lll_reduce(basis);
  // the reduced basis must contain a vector with tiny entries
  bool small_found = false;
  for (auto& row : basis) {
    Int norm = 0;
    for (auto& x : row) norm += x * x;
    if (norm <= 50) small_found = true;
  }
  CHECK(small_found);
}
