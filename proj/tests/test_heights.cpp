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

#include "tthue/heights.hpp"

#include <random>

#include "doctest.h"
#include "test_fixtures.hpp"
#include "tthue/errors.hpp"

using namespace tthue;

TEST_CASE("mahler measure fixtures") {
  CHECK(mahler_measure(fx::zpoly({-2, 1}), 128).contains(Rat(2)));
  CHECK(mahler_measure(fx::zpoly({1, 1, 1}), 128).contains(Rat(1)));  // roots on unit circle
  CHECK(fx::close(mahler_measure(fx::zpoly({-1, -2, 1, 1}), 128), "2.2469796037174670610"));
  // multiplicity: M(g^2) = M(g)^2
  ZPoly g = fx::zpoly({-2, 1});
  CHECK(mahler_measure(g * g, 128).contains(Rat(4)));
  // leading coefficient enters linearly: M(3x - 6) = 3 * 2
  CHECK(mahler_measure(fx::zpoly({-6, 3}), 128).contains(Rat(6)));
}

TEST_CASE("heights: fixtures from the simplest cubic") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 192);
  CHECK(abs_log_height(FieldElement::one(K), ctx).h.contains(Rat(0)));
  // h(2) = log 2 (ball containment of the true value)
  HeightResult h2 = abs_log_height(FieldElement::rational(K, Rat(2)), ctx);
  CHECK(fx::close(h2.h, "0.6931471805599453094172321", "1e-24"));
  CHECK(h2.mahler.contains(Rat(2)));
  // h(alpha) = (1/3) log M(f)
  HeightResult ha = abs_log_height(FieldElement::generator(K), ctx);
  CHECK(fx::close(ha.h, "0.2698623053482375708529605", "1e-12"));
  CHECK(fx::close(ha.mahler, "2.2469796037174670610", "1e-12"));
  CHECK(fx::close(ha.house, "1.8019377358048382525", "1e-12"));
  CHECK_THROWS_AS(abs_log_height(FieldElement::zero(K), ctx), Error);
}

TEST_CASE("height scaling h(beta^n) = n h(beta)") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 192);
  FieldElement a = FieldElement::generator(K);
  Ball h1 = abs_log_height(a, ctx).h;
  for (unsigned long n : {2ul, 3ul, 4ul, 5ul, 6ul}) {
    Ball hn = abs_log_height(a.pow(n), ctx).h;
    Ball scaled = h1 * Ball::exact(static_cast<long>(n), 192);
    CHECK(hn.overlaps(scaled));
  }
}

TEST_CASE("h(beta) = 0 iff root of unity (torsion and non-torsion fixtures)") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  Ball hm1 = abs_log_height(FieldElement::rational(K, Rat(-1)), ctx).h;
  CHECK(hm1.contains(Rat(0)));
  CHECK(!hm1.is_positive());
  Ball h1 = abs_log_height(FieldElement::one(K), ctx).h;
  CHECK(h1.contains(Rat(0)));
  // non-torsion: strictly positive certified
  CHECK(abs_log_height(FieldElement::generator(K), ctx).h.is_positive());
  CHECK(abs_log_height(FieldElement::rational(K, Rat(1, 2)), ctx).h.is_positive());
}

TEST_CASE("dedekind criterion and prime splitting in the simplest cubic") {
  ZPoly f = fx::zpoly({-1, -2, 1, 1});
  // disc f = 49; only p = 7 could divide the index, and Dedekind clears it
  CHECK(dedekind_index_free(f, Int(2)));
  CHECK(dedekind_index_free(f, Int(7)));
  auto s2 = split_prime(f, Int(2));
  REQUIRE(s2.size() == 1);  // inert
  CHECK(s2[0].e == 1);
  CHECK(s2[0].f_degree == 3);
  auto s7 = split_prime(f, Int(7));
  REQUIRE(s7.size() == 1);  // totally ramified: f = (x+3)^3 mod 7
  CHECK(s7[0].e == 3);
  CHECK(s7[0].f_degree == 1);
  // 13 splits completely (13 = 1 mod 7... check by counting)
  auto s13 = split_prime(f, Int(13));
  CHECK(s13.size() == 3);
}

TEST_CASE("valuations above rational primes") {
  auto K = fx::simplest_cubic();
  FieldElement two = FieldElement::rational(K, Rat(2));
  auto v2 = valuations_above(two, Int(2));
  REQUIRE(v2.size() == 1);
  CHECK(v2[0] == 1);
  FieldElement half = FieldElement::rational(K, Rat(1, 2));
  auto vh = valuations_above(half, Int(2));
  CHECK(vh[0] == -1);
  // v_P(7) = 3 at the ramified prime above 7
  auto v7 = valuations_above(FieldElement::rational(K, Rat(7)), Int(7));
  REQUIRE(v7.size() == 1);
  CHECK(v7[0] == 3);
  // a unit has valuation zero everywhere it could matter
  FieldElement a = FieldElement::generator(K);
  auto va = valuations_above(a, Int(2));
  for (long v : va) CHECK(v == 0);
}

TEST_CASE("valuation vector: unit gamma = alpha") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 192);
  FieldElement a = FieldElement::generator(K);
  ValuationVector v = valuation_vector(a, true, ctx);
  CHECK(v.finite.empty());
  REQUIRE(v.archimedean.size() == 3);
  CHECK(fx::close(v.archimedean[0], "0.0735747700943443269083464"));
  CHECK(fx::close(v.archimedean[1], "-0.2698623053482375708529605"));
  CHECK(fx::close(v.archimedean[2], "0.1962875352538932439446141"));
  CHECK(v.sum().contains_zero());
  // |v|_1 = 2 h(gamma)
  Ball twoh = abs_log_height(a, ctx).h * Ball::exact(2L, 192);
  CHECK(v.l1_norm().overlaps(twoh));
}

TEST_CASE("valuation vector: beta = 2 and beta = 1") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 192);
  ValuationVector v2 = valuation_vector(FieldElement::rational(K, Rat(2)), true, ctx);
  REQUIRE(v2.finite.size() == 1);
  CHECK(v2.finite[0].p == 2);
  CHECK(v2.finite[0].valuation == 1);
  CHECK(fx::close(v2.finite[0].log_value, "-0.6931471805599453094172321", "1e-24"));
  for (const auto& b : v2.archimedean) CHECK(fx::close(b, "0.2310490601866484364724107", "1e-24"));
  CHECK(v2.sum().contains_zero());

  ValuationVector v1 = valuation_vector(FieldElement::one(K), true, ctx);
  CHECK(v1.finite.empty());
  for (const auto& b : v1.archimedean) CHECK(b.contains_zero());
  CHECK_THROWS_AS(valuation_vector(FieldElement::zero(K), true, ctx), Error);
}

TEST_CASE("product formula and l1 = 2h on random norm-factorable elements") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 192);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
  int done = 0;
  for (int trial = 0; trial < 300 && done < 100; ++trial) {
    std::vector<Rat> c;
    for (int j = 0; j < 3; ++j) c.emplace_back(num(rng), den(rng));
    FieldElement beta(K, std::move(c));
    if (beta.is_zero()) continue;
    ValuationVector v = valuation_vector(beta, true, ctx);
    CHECK(v.sum().contains_zero());
    Ball twoh = abs_log_height(beta, ctx).h * Ball::exact(2L, 192);
    CHECK(v.l1_norm().overlaps(twoh));
    ++done;
  }
  CHECK(done == 100);
}
