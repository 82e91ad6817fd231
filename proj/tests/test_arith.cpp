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

#include "tthue/arith.hpp"

#include "doctest.h"
#include "tthue/errors.hpp"

using namespace tthue;

TEST_CASE("factorize small and medium integers") {
  auto f = factorize(Int(360));
  CHECK(f[Int(2)] == 3);
  CHECK(f[Int(3)] == 2);
  CHECK(f[Int(5)] == 1);

  // a semiprime past the trial-division range
  Int p("1000003"), q("2000029");
  auto g = factorize(p * q);
  CHECK(g.size() == 2);
  CHECK(g[p] == 1);
  CHECK(g[q] == 1);

  auto h = factorize(Int(-8));
  CHECK(h[Int(2)] == 3);
}

TEST_CASE("valuation") {
  Int cof;
  CHECK(valuation(Int(48), Int(2), &cof) == 4);
  CHECK(cof == 3);
  CHECK(valuation(Int(7), Int(2)) == 0);
}

TEST_CASE("euler phi and torsion candidates") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  auto cands = torsion_order_candidates(3);
  // phi(m) | 3 means phi(m) in {1, 3}; phi is even for m > 2
  CHECK(cands == std::vector<unsigned long>{1, 2});
  auto c4 = torsion_order_candidates(4);
  CHECK(std::find(c4.begin(), c4.end(), 5ul) != c4.end());
  CHECK(std::find(c4.begin(), c4.end(), 12ul) != c4.end());
  CHECK(std::find(c4.begin(), c4.end(), 7ul) == c4.end());
}

TEST_CASE("exact rational parsing") {
  CHECK(parse_exact_rational("3/4") == Rat(3, 4));
  CHECK(parse_exact_rational("-2/6") == Rat(-1, 3));
  CHECK(parse_exact_rational("5") == Rat(5));
  CHECK_THROWS_AS(parse_exact_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_exact_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_exact_rational(""), Error);
}
