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

#include "tthue/poly_factor.hpp"

#include "doctest.h"
#include "tthue/errors.hpp"
#include "tthue/modpoly.hpp"

using namespace tthue;

namespace {
ZPoly zp(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return ZPoly(std::move(v));
}
}  // namespace

TEST_CASE("mod-p factorization basics") {
  Int p(7);
  // x^2 - 2 splits mod 7 (3^2 = 2)
  auto fs = factor_mod_p(FpPoly::from(zp({-2, 0, 1}), p));
  CHECK(fs.size() == 2);
  CHECK(fs[0].factor.degree() == 1);
  // x^3 + x^2 + 1 irreducible mod 2
  auto g = factor_mod_p(FpPoly::from(zp({1, 0, 1, 1}), Int(2)));
  CHECK(g.size() == 1);
  CHECK(g[0].factor.degree() == 3);
  // multiplicities: (x+1)^2 * x mod 5
  auto h = factor_mod_p(FpPoly::from(zp({0, 1, 2, 1}), Int(5)));
  unsigned long total = 0;
  for (auto& fac : h) total += fac.multiplicity * static_cast<unsigned long>(fac.factor.degree());
  CHECK(total == 3);
}

TEST_CASE("squarefree detection mod p") {
  CHECK(is_squarefree_mod_p(zp({-1, -2, 1, 1}), Int(2)));
  CHECK(!is_squarefree_mod_p(zp({-1, -2, 1, 1}), Int(7)));  // disc = 49
  CHECK(!is_squarefree_mod_p(zp({1, 2, 1}), Int(5)));       // (x+1)^2
}

TEST_CASE("hensel lifting reconstructs factors") {
  ZPoly f = zp({-2, 0, 1});  // x^2 - 2 = (x-3)(x+3) mod 7
  auto base = factor_mod_p(FpPoly::from(f, Int(7)));
  std::vector<FpPoly> mods{base[0].factor, base[1].factor};
  auto lifted = hensel_lift(f, mods, Int(7), 5);
  REQUIRE(lifted.size() == 2);
  ZPoly prod = lifted[0] * lifted[1];
  Int p5 = int_pow(Int(7), 5);
  for (int i = 0; i <= f.degree(); ++i) {
    Int diff = (prod[static_cast<std::size_t>(i)] - f[static_cast<std::size_t>(i)]) % p5;
    CHECK(diff == 0);
  }
}

TEST_CASE("irreducibility with certificates") {
  CHECK(check_irreducible_monic(zp({-1, -2, 1, 1})));
  CHECK(check_irreducible_monic(zp({-2, 0, 0, 1})));
  CHECK(check_irreducible_monic(zp({1, 0, 0, 0, 1})));  // x^4+1: reducible mod every p
  CHECK_THROWS_AS(check_irreducible_monic(zp({-1, 0, 1})), ReducibleError);
  CHECK_THROWS_AS(check_irreducible_monic(zp({1, 2, 1})), ReducibleError);  // square
  try {
    check_irreducible_monic(zp({-6, 11, -6, 1}));  // (x-1)(x-2)(x-3)
    FAIL("expected ReducibleError");
  } catch (const ReducibleError& e) {
    CHECK(!e.factor().empty());
  }
}

TEST_CASE("factorization recombination across primes") {
  // (x^2 - 2)(x^2 - 3): irreducible quadratics that split or stay prime
  // differently depending on p; recombination must sort it out
  ZPoly f = zp({-2, 0, 1}) * zp({-3, 0, 1});
  auto fs = factor_monic_squarefree(f);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] * fs[1] == f);
  CHECK(fs[0].degree() == 2);
}
