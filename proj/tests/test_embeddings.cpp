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

#include "tthue/embeddings.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_fixtures.hpp"
#include "tthue/errors.hpp"

using namespace tthue;

TEST_CASE("simplest cubic: three certified real roots in descending order") {
  auto K = fx::simplest_cubic();
  Embeddings E = compute_embeddings(K, 128);
  REQUIRE(E.count() == 3);
  CHECK(E.is_real(0));
  CHECK(E.is_real(1));
  CHECK(E.is_real(2));
  // roots are 2cos(2 pi k / 7)
  CHECK(fx::close(E.root(0).re(), "1.24697960371746706105001"));
  CHECK(fx::close(E.root(1).re(), "-0.4450418679126288085778051"));
  CHECK(fx::close(E.root(2).re(), "-1.801937735804838252472205"));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(E.root(i).im().is_exact_zero());
    CHECK(E.conjugate_index(i) == i);
  }
  CHECK(!E.root(0).overlaps(E.root(1)));
  CHECK(!E.root(1).overlaps(E.root(2)));
}

TEST_CASE("x^3 - 2: one real root and a certified conjugate pair") {
  auto K = fx::cbrt2_field();
  Embeddings E = compute_embeddings(K, 128);
  REQUIRE(E.count() == 3);
  CHECK(E.is_real(0));
  CHECK(!E.is_real(1));
  CHECK(!E.is_real(2));
  CHECK(fx::close(E.root(0).re(), "1.259921049894873164767211"));
  // complex pair sorted by ascending imaginary midpoint
  CHECK(E.root(1).im().is_negative());
  CHECK(E.root(2).im().is_positive());
  CHECK(fx::close(E.root(1).re(), "-0.6299605249474365823836053"));
  CHECK(fx::close(E.root(1).im(), "-1.091123635971721403560073"));
  CHECK(fx::close(E.root(2).im(), "1.091123635971721403560073"));
  CHECK(E.conjugate_index(1) == 2);
  CHECK(E.conjugate_index(2) == 1);
  CHECK(E.conjugate_index(0) == 0);
}

TEST_CASE("radius contract and monotone refinement") {
  auto K = fx::cbrt2_field();
  for (prec_t p : {kPrecMin, static_cast<prec_t>(128), static_cast<prec_t>(256)}) {
    Embeddings E = compute_embeddings(K, p);
    for (std::size_t i = 0; i < E.count(); ++i) {
      mpfr_t t;
      mpfr_init2(t, 64);
      mpfr_sub(t, E.root(i).re().hi(), E.root(i).re().lo(), MPFR_RNDU);
      double rad = mpfr_get_d(t, MPFR_RNDU) / 2;
      mpfr_sub(t, E.root(i).im().hi(), E.root(i).im().lo(), MPFR_RNDU);
      rad = std::max(rad, mpfr_get_d(t, MPFR_RNDU) / 2);
      mpfr_clear(t);
      double mid = std::abs(E.root(i).re().mid_double()) + std::abs(E.root(i).im().mid_double());
      CHECK(rad <= std::ldexp(1.0 + mid + 1e-9, static_cast<int>(1 - p)) * (1 + 1e-9));
    }
  }
  Embeddings E1 = compute_embeddings(K, 128);
  Embeddings E2 = refine_embeddings(E1, 512);
  for (std::size_t i = 0; i < 3; ++i) CHECK(E2.root(i).overlaps(E1.root(i)));
}

TEST_CASE("embed: rational elements and generator powers") {
  auto K = fx::simplest_cubic();
  Embeddings E = compute_embeddings(K, 128);
  CBall b = E.embed(FieldElement::one(K), 0);
  CHECK(b.re().contains(Rat(1)));
  // exact-rational constant evaluates to a zero-radius enclosure
  CHECK(mpfr_equal_p(b.re().lo(), b.re().hi()));
  CHECK(b.im().is_exact_zero());
  FieldElement a = FieldElement::generator(K);
  CHECK(fx::close(E.embed(a, 0).re(), "1.24697960371746706105001"));
  // alpha^2 at the third embedding: (-1.80193...)^2
  CHECK(fx::close(E.embed(a.pow(2), 2).re(), "3.24697960371746706105001"));
}

TEST_CASE("embedding is multiplicative up to enclosure") {
  auto K = fx::cbrt2_field();
  Embeddings E = compute_embeddings(K, 160);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-8, 8);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rat> c1, c2;
    for (int j = 0; j < 3; ++j) c1.emplace_back(d(rng));
    for (int j = 0; j < 3; ++j) c2.emplace_back(d(rng));
    FieldElement x(K, c1), y(K, c2);
    for (std::size_t i = 0; i < 3; ++i) {
      CBall lhs = E.embed(x * y, i);
      CBall rhs = E.embed(x, i) * E.embed(y, i);
      CHECK(lhs.re().overlaps(rhs.re()));
      CHECK(lhs.im().overlaps(rhs.im()));
    }
  }
}

TEST_CASE("full log matrix: fixtures and unit column sum") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  FieldElement a = FieldElement::generator(K);
  LogMatrix M = full_log_matrix({a}, ctx);
  REQUIRE(M.mat.rows() == 3);
  REQUIRE(M.mat.cols() == 1);
  CHECK(fx::close(M.mat.at(0, 0), "0.2207243102830329807250391"));
  CHECK(fx::close(M.mat.at(1, 0), "-0.8095869160447127125588814"));
  CHECK(fx::close(M.mat.at(2, 0), "0.5888626057616797318338423"));
  // alpha is a unit: column sums to a ball containing 0
  Ball sum = M.mat.at(0, 0) + M.mat.at(1, 0) + M.mat.at(2, 0);
  CHECK(sum.contains_zero());
  // rational gamma embeds identically in every row
  LogMatrix M2 = full_log_matrix({FieldElement::rational(K, Rat(2))}, ctx);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(fx::close(M2.mat.at(i, 0), "0.6931471805599453094"));
}

TEST_CASE("conjugate pair rows share the modulus entry exactly") {
  auto K = fx::cbrt2_field();
  EmbeddingContext ctx(K, 128);
  FieldElement g = FieldElement::generator(K);
  LogMatrix M = full_log_matrix({g + FieldElement::one(K)}, ctx);
  // rows 1 and 2 are the conjugate pair: identical balls by construction
  CHECK(mpfr_equal_p(M.mat.at(1, 0).lo(), M.mat.at(2, 0).lo()));
  CHECK(mpfr_equal_p(M.mat.at(1, 0).hi(), M.mat.at(2, 0).hi()));
}

TEST_CASE("ratio log matrix: values and symbolic zeros") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  FieldElement a = FieldElement::generator(K);
  // leave out embedding 1, reference 2: single row log(|r0| / |r2|)
  LogMatrix M = ratio_log_matrix({a}, ctx, 1, 2);
  REQUIRE(M.mat.rows() == 1);
  REQUIRE(M.row_embeddings == std::vector<std::size_t>{0});
  CHECK(fx::close(M.mat.at(0, 0), "-0.3681382954786467511088031"));

  // rational gamma: every ratio is exactly 1
  LogMatrix M2 = ratio_log_matrix({FieldElement::rational(K, Rat(2))}, ctx, 0, 1);
  CHECK(M2.mat.at(0, 0).contains_zero());

  // conjugate pair in x^3 - 2: symbolic exact-zero entry
  auto K2 = fx::cbrt2_field();
  EmbeddingContext ctx2(K2, 128);
  FieldElement g = FieldElement::generator(K2);
  LogMatrix M3 = ratio_log_matrix({g}, ctx2, 0, 1);  // leave out the real embedding
  REQUIRE(M3.mat.rows() == 1);
  CHECK(M3.mat.at(0, 0).is_exact_zero());
}

TEST_CASE("zero gamma raises ZeroConjugate") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  CHECK_THROWS_AS(full_log_matrix({FieldElement::zero(K)}, ctx), Error);
}

TEST_CASE("precision cap raises PrecisionExhausted") {
  CHECK_THROWS_AS(compute_embeddings(fx::simplest_cubic(), kPrecCap * 2), Error);
}
