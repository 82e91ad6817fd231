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

#include "tthue/search.hpp"

#include <set>

#include "doctest.h"
#include "test_fixtures.hpp"
#include "tthue/errors.hpp"

using namespace tthue;

namespace {
std::set<std::pair<long, long>> as_set(const std::vector<std::pair<Int, Int>>& v) {
  std::set<std::pair<long, long>> out;
  for (const auto& [x, y] : v) out.insert({x.get_si(), y.get_si()});
  return out;
}
}  // namespace

TEST_CASE("solve_fixed_t at t = 1 finds the classical orbit list") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  std::vector<FieldElement> gammas{FieldElement::generator(K)};
  auto sols = solve_fixed_t(gammas, {1}, Int(10), ctx);
  auto got = as_set(sols);
  std::set<std::pair<long, long>> expect{
      {1, 0},  {-1, 0}, {0, 1},  {0, -1}, {-1, 1}, {1, -1}, {1, 1},  {-1, -1}, {-2, 1},
      {2, -1}, {-1, 2}, {1, -2}, {5, 4},  {-5, -4}, {-4, 9}, {4, -9}, {-9, 5},  {9, -5}};
  CHECK(got == expect);
}

TEST_CASE("solve_fixed_t at t = 2 includes the (1,1) and (3,2) fixtures") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  std::vector<FieldElement> gammas{FieldElement::generator(K)};
  auto got = as_set(solve_fixed_t(gammas, {2}, Int(10), ctx));
  CHECK(got.count({1, 1}) == 1);
  CHECK(got.count({3, 2}) == 1);
  CHECK(got.count({13, 4}) == 1);
}

TEST_CASE("solve_fixed_t rejects y_cap = 0") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  std::vector<FieldElement> gammas{FieldElement::generator(K)};
  CHECK_THROWS_AS(solve_fixed_t(gammas, {1}, Int(0), ctx), Error);
}

TEST_CASE("search_box skips non-generating exponent vectors") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  std::vector<FieldElement> gammas{FieldElement::generator(K)};
  SearchConfig cfg;
  cfg.T = 2;
  cfg.y_cap = 10;
  SearchOutcome out = search_box(gammas, cfg, ctx);
  REQUIRE(out.skipped.size() == 1);
  CHECK(out.skipped[0].exps == std::vector<long>{0});
  CHECK(out.skipped[0].reason == "NotGenerating");
  // union of the fixed-t sets, tagged
  for (const auto& s : out.solutions) {
    CHECK((s.exps == std::vector<long>{1} || s.exps == std::vector<long>{2}));
    CHECK(s.generating);
  }
  // report_trivial = false hides the (+-1, 0) and (0, +-1) rows
  SearchConfig cfg2 = cfg;
  cfg2.report_trivial = false;
  SearchOutcome out2 = search_box(gammas, cfg2, ctx);
  for (const auto& s : out2.solutions) CHECK(!s.trivial);
  CHECK(out2.solutions.size() < out.solutions.size());
}

TEST_CASE("search completeness against the brute-force oracle") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  std::vector<FieldElement> gammas{FieldElement::generator(K)};
  SearchConfig cfg;
  cfg.T = 4;
  cfg.y_cap = 40;
  SearchOutcome fast = search_box(gammas, cfg, ctx);

  // oracle x-range: |x| <= max|sigma_i|^T y_cap + 1
  Int x_cap(430);
  SearchOutcome slow = brute_force_oracle(gammas, 4, x_cap, Int(40));
  // restrict the fast output to the oracle's x-range before comparing
  std::vector<Solution> fast_restricted;
  for (const auto& s : fast.solutions)
    if (abs(s.x) <= x_cap) fast_restricted.push_back(s);
  CHECK(fast_restricted == slow.solutions);
  CHECK(fast.skipped.size() == slow.skipped.size());
}

TEST_CASE("candidate rule soundness: min_i |x - sigma_i y| <= 1 on oracle solutions") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 160);
  std::vector<FieldElement> gammas{FieldElement::generator(K)};
  SearchOutcome slow = brute_force_oracle(gammas, 3, Int(250), Int(25));
  const Embeddings& E = ctx.current();
  Ball one = Ball::exact(1L, 160);
  for (const auto& s : slow.solutions) {
    if (s.y == 0) continue;
    FieldElement gt = FieldElement::one(K);
    for (std::size_t k = 0; k < gammas.size(); ++k)
      gt = gt * gammas[k].pow_signed(s.exps[k]);
    Ball best = Ball::exact(Int(Int(1) << 40), 160);
    for (std::size_t i = 0; i < 3; ++i) {
      CBall diff = CBall(Ball::exact(Rat(s.x), 160), Ball::zero(160)) -
                   E.embed(gt, i) * CBall(Ball::exact(Rat(s.y), 160), Ball::zero(160));
      best = Ball::min(best, diff.abs());
    }
    CHECK(!best.definitely_gt(one));
  }
}

TEST_CASE("multithreaded search matches single-threaded output") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  std::vector<FieldElement> gammas{FieldElement::generator(K)};
  SearchConfig cfg;
  cfg.T = 3;
  cfg.y_cap = 15;
  cfg.threads = 1;
  SearchOutcome seq = search_box(gammas, cfg, ctx);
  cfg.threads = 4;
  SearchOutcome par = search_box(gammas, cfg, ctx);
  CHECK(seq.solutions == par.solutions);
  CHECK(seq.skipped.size() == par.skipped.size());
}

TEST_CASE("negative exponent box is reachable behind its flag") {
  auto K = fx::simplest_cubic();
  EmbeddingContext ctx(K, 128);
  std::vector<FieldElement> gammas{FieldElement::generator(K)};
  SearchConfig cfg;
  cfg.T = 1;
  cfg.y_cap = 5;
  cfg.extend_negative = true;
  SearchOutcome out = search_box(gammas, cfg, ctx);
  bool saw_negative = false;
  for (const auto& s : out.solutions)
    if (s.exps == std::vector<long>{-1}) saw_negative = true;
  CHECK(saw_negative);
}

TEST_CASE("oracle guard rejects oversized boxes") {
  auto K = fx::simplest_cubic();
  std::vector<FieldElement> gammas{FieldElement::generator(K)};
  CHECK_THROWS_AS(brute_force_oracle(gammas, 10, Int(100000), Int(100000)), Error);
}
