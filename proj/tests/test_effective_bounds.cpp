// Copyright 2026 The twisted-thue authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain on copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tthue/effective_bounds.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_fixtures.hpp"
#include "tthue/errors.hpp"

using namespace tthue;

namespace {

// independent straight-line oracle for the Baker constant (double precision)
double baker_oracle(unsigned long t, unsigned long D) {
  double fact = 1;
  for (unsigned long i = 2; i <= t + 1; ++i) fact *= static_cast<double>(i);
  return 18.0 * fact * std::pow(static_cast<double>(t), static_cast<double>(t + 1)) *
         std::pow(32.0 * static_cast<double>(D), static_cast<double>(t + 2)) *
         std::log(2.0 * static_cast<double>(t) * static_cast<double>(D));
}

struct Fixture {
  FieldPtr K;
  EmbeddingContext ctx;
  std::vector<FieldElement> gammas;
  UnitSystem units;
  BoundInputs inputs;
  Fixture()
      : K(fx::simplest_cubic()),
        ctx(K, 192),
        gammas{FieldElement::generator(K)},
        units(verify_unit_system(
            {FieldElement::generator(K), FieldElement::generator(K) + FieldElement::one(K)}, K,
            ctx)),
        inputs(gather_bound_inputs(gammas, units, ctx)) {}
};

}  // namespace

TEST_CASE("baker_constant matches an independent straight-line evaluation") {
  // relative agreement to 1e-12 at the fixture sizes
  for (auto [t, D] : std::vector<std::pair<unsigned long, unsigned long>>{{1, 3}, {2, 3}, {3, 6}}) {
    Ball c = baker_constant(t, D, 256);
    double oracle = baker_oracle(t, D);
    double got = c.mid_double();
    CHECK(std::abs(got - oracle) <= 1e-12 * oracle);
  }
  // printed fixture values
  CHECK(fx::close(baker_constant(1, 3, 192) * Ball::exact(Rat(1, 1000000), 192),
                  "57.06842817", "1e-6"));
  // monotone in t
  CHECK(baker_constant(2, 3, 128).definitely_gt(baker_constant(1, 3, 128)));
}

TEST_CASE("baker_lower_bound applies the floors") {
  prec_t p = 192;
  // one log, D = 3, h = 0.2699, B = 10: about -C(1,3) * 0.2699 * log 10
  Ball h = Ball::exact(Rat(2699, 10000), p);
  Ball lb = baker_lower_bound({h}, Ball::exact(10L, p), 3, p);
  CHECK(fx::close(lb * Ball::exact(Rat(1, 10000000), p), "-3.546618546", "1e-4"));
  // zero height gets floored to 0.16 / D
  Ball floored = baker_height_floor(Ball::zero(p), Ball::zero(p), 3, p);
  CHECK(floored.contains(Rat(16, 300)));
  // B below 3 is clamped to 3
  Ball lb3 = baker_lower_bound({h}, Ball::exact(1L, p), 3, p);
  Ball expect = -(baker_constant(1, 3, p) * h * Ball::exact(3L, p).log());
  CHECK(lb3.overlaps(expect));
}

TEST_CASE("bugeaud_gyory_constant exact fixtures") {
  CHECK(bugeaud_gyory_constant(3, 2) == int_pow(Int(3), 94));
  CHECK(bugeaud_gyory_constant(3, 1) == int_pow(Int(3), 54) * int_pow(Int(2), 26));
  CHECK(bugeaud_gyory_constant(3, 2) > bugeaud_gyory_constant(3, 1));
  CHECK(bugeaud_gyory_constant(4, 2) > bugeaud_gyory_constant(3, 2));
}

TEST_CASE("bugeaud_gyory_xy_bound fixture magnitude") {
  prec_t p = 192;
  // simplest cubic, t = 5: log H = 3 * 0.8095869 * 5, R = 0.5254546
  Ball R = Ball::exact(fx::decimal("0.5254546821"), p);
  Ball logH = Ball::exact(fx::decimal("12.14380374"), p);
  Ball b = bugeaud_gyory_xy_bound(R, logH, 3, 2, p);
  // about 5.08e45: check the exponent neighborhood
  Ball mantissa = b / Ball::exact(int_pow(Int(10), 45), p);
  CHECK(mantissa.definitely_gt(Ball::exact(4L, p)));
  CHECK(mantissa.definitely_lt(Ball::exact(6L, p)));
  // R < e clamps max(log R, 1) to 1
  Ball small = bugeaud_gyory_xy_bound(R, logH, 3, 2, p);
  Ball refr = Ball::exact(bugeaud_gyory_constant(3, 2), p) * R * (R + logH + Ball::exact(1L, p));
  CHECK(small.overlaps(refr));
}

TEST_CASE("lemma4_bound fixtures") {
  Lemma4Result r1 = lemma4_bound({{0.25, 1.0, 4.0}, 0});
  CHECK(r1.product == doctest::Approx(4.0));
  CHECK(r1.bound == doctest::Approx(2.0));
  CHECK(r1.holds);
  Lemma4Result r2 = lemma4_bound({{0.5, 0.5, 4.0}, 0});
  CHECK(r2.product == doctest::Approx(2.0));
  CHECK(r2.bound == doctest::Approx(2.0));
  CHECK(r2.holds);
  Lemma4Result r3 = lemma4_bound({{0.25, 1.0, 4.0}, 2});
  CHECK(r3.product == doctest::Approx(16.0));
  CHECK(r3.holds);
  CHECK_THROWS_AS(lemma4_bound({{0.5, 4.0}, 0}), Error);        // product != 1
  CHECK_THROWS_AS(lemma4_bound({{1.0, 1.0}, 0}), Error);        // a_d not > 1
  CHECK_THROWS_AS(lemma4_bound({{4.0, 0.25}, 0}), Error);       // not ascending
}

TEST_CASE("lemma4 random suite with extremal equality cases") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uni(0.1, 3.0);
  std::uniform_int_distribution<int> dd(3, 8);
  int checked = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    int d = dd(rng);
    std::vector<double> a;
    double logsum = 0;
    for (int i = 0; i + 1 < d; ++i) {
      double v = uni(rng);
      a.push_back(v);
      logsum += std::log(v);
    }
    a.push_back(std::exp(-logsum));
    std::sort(a.begin(), a.end());
    if (!(a.back() > 1.0)) continue;
    // renormalize the product drift
    std::uniform_int_distribution<std::size_t> jd(0, a.size() - 1);
    Lemma4Result r = lemma4_bound({a, jd(rng)});
    CHECK(r.holds);
    ++checked;
  }
  CHECK(checked > 10000);
  // extremal construction: equality within 1e-12 for every d and j <= n
  for (int d = 3; d <= 8; ++d) {
    double ad = 4.0;
    double rest = std::pow(ad, -1.0 / (d - 1));
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(d); ++j) {
      std::vector<double> a(static_cast<std::size_t>(d - 1), rest);
      a.push_back(ad);
      Lemma4Result r = lemma4_bound({a, j});
      CHECK(std::abs(r.product - r.bound) <= 1e-12 * r.bound);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("c1 and c2 norms on the simplest cubic") {
  Fixture f;
  CHECK(fx::close(f.inputs.c1, "0.8095869160447127125588814", "1e-10"));
  // c2 = (d-1) * pinv norm = 2 * 1.5407359...
  CHECK(fx::close(f.inputs.c2, "3.081471889470853989", "1e-8"));
  // two-column variant: max row sum of the {alpha, alpha+1} log matrix
  LogMatrix M2 = full_log_matrix(
      {FieldElement::generator(f.K), FieldElement::generator(f.K) + FieldElement::one(f.K)},
      f.ctx);
  CHECK(fx::close(c1_row_norm(M2), "1.3984495218063924444", "1e-8"));
}

TEST_CASE("c1/c2 contracts on random exponent vectors") {
  Fixture f;
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<unsigned long> te(0, 20);
  const Embeddings& E = f.ctx.current();
  FieldElement a = FieldElement::generator(f.K);
  int done = 0;
  for (int trial = 0; trial < 120 && done < 100; ++trial) {
    unsigned long t = te(rng);
    if (t == 0) continue;
    FieldElement gt = a.pow(t);
    Ball tb = Ball::exact(static_cast<long>(t), 192);
    Ball maxabs = Ball::zero(192);
    for (std::size_t i = 0; i < 3; ++i) {
      Ball l = E.embed(gt, i).abs().log();
      maxabs = Ball::max(maxabs, l.abs());
      // |log sigma_i(gamma^t)| <= c1 t (and a fortiori <= c1 t s)
      CHECK(!l.abs().definitely_gt(f.inputs.c1 * tb));
    }
    // t <= c2 log max |sigma_i|
    Ball logmax = Ball::zero(192);
    for (std::size_t i = 0; i < 3; ++i)
      logmax = Ball::max(logmax, E.embed(gt, i).abs().log());
    CHECK(!tb.definitely_gt(f.inputs.c2 * logmax));
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("tijdeman gap: fixtures and strict verification") {
  Fixture f;
  ConstantLedger ledger;
  GapBoundResult g3 = tijdeman_gap(f.gammas, {3}, 2, 0, f.inputs, f.ctx, ledger);
  CHECK(fx::close(g3.M, "5.8508550851581771919", "1e-8"));
  CHECK(fx::close(g3.m, "1.9390010818704517813", "1e-8"));
  CHECK(g3.holds);
  GapBoundResult g1 = tijdeman_gap(f.gammas, {1}, 2, 0, f.inputs, f.ctx, ledger);
  CHECK(fx::close(g1.M, "1.801937735804838252472205", "1e-10"));
  CHECK(g1.holds);
  // the right side is astronomically small: M e^{-c_gap h} with c_gap huge
  CHECK(g1.lower.definitely_lt(Ball::exact(Rat(1, 1000000), 192)));
  CHECK_THROWS_AS(tijdeman_gap(f.gammas, {1}, 1, 1, f.inputs, f.ctx, ledger), Error);
}

TEST_CASE("gap holds for all t <= 30 and all distinct-modulus pairs") {
  Fixture f;
  ConstantLedger ledger;
  for (unsigned long t = 1; t <= 30; ++t) {
    for (std::size_t i1 = 0; i1 < 3; ++i1)
      for (std::size_t i2 = 0; i2 < 3; ++i2) {
        if (i1 == i2) continue;
        GapBoundResult g = tijdeman_gap(f.gammas, {t}, i1, i2, f.inputs, f.ctx, ledger);
        CHECK(g.holds);
      }
  }
}

TEST_CASE("toy Case-2 recurrence: least T with T > 10 log T is 36") {
  Int T = least_t_exceeding_clog(Ball::exact(10L, 192), 3, 192);
  CHECK(T == 36);
  // variants
  CHECK(least_t_exceeding_clog(Ball::exact(1L, 192), 3, 192) == 3);
  CHECK(least_t_exceeding_clog(Ball::zero(192), 5, 192) == 5);
}

TEST_CASE("compose_bounds: finite, deterministic, monotone") {
  Fixture f;
  ConstantLedger ledger;
  EffectiveBounds b = compose_bounds(f.inputs, ledger, 192);
  // finite and astronomically large
  CHECK(b.t_max.definitely_exceeds(int_pow(Int(10), 6)));
  CHECK(b.t_max.log_value().is_finite());
  CHECK(b.x_max.log_value().is_finite());
  CHECK(b.case2_bound.has_exact_int());
  CHECK(b.case2_bound.exact_int() > 1000);
  // T_max = max(case1, case2)
  CHECK(b.t_max.definitely_ge(b.case2_bound));

  // determinism: recompose bit-identically
  ConstantLedger ledger2;
  EffectiveBounds b2 = compose_bounds(f.inputs, ledger2, 192);
  CHECK(b.t_max.to_string() == b2.t_max.to_string());
  CHECK(b.case2_bound.exact_int() == b2.case2_bound.exact_int());
  CHECK(ledger.entries().size() == ledger2.entries().size());

  // monotonicity: doubling any height input never decreases T_max
  for (std::size_t which = 0; which < 3; ++which) {
    BoundInputs doubled = f.inputs;
    Ball two = Ball::exact(2L, 192);
    if (which == 0)
      for (auto& h : doubled.gamma_heights) h = h * two;
    if (which == 1)
      for (auto& h : doubled.eta_heights) h = h * two;
    if (which == 2) {
      doubled.max_abs_log_gamma = doubled.max_abs_log_gamma * two;
      doubled.max_abs_log_eta = doubled.max_abs_log_eta * two;
    }
    ConstantLedger l3;
    EffectiveBounds b3 = compose_bounds(doubled, l3, 192);
    CHECK(!b.t_max.log_value().definitely_gt(b3.t_max.log_value()));
  }

  // ledger core names present with derivations
  for (const char* name : {"C_BW", "c_BG", "c1", "c2", "c4", "c_gap", "c3", "c5", "c6", "c7",
                           "c8", "kappa", "t0", "case2_bound", "T_max", "X_max"}) {
    CHECK(ledger.has(name));
    CHECK(!ledger.get(name).derivation.empty());
  }
}

TEST_CASE("ExtendedReal representations") {
  ExtendedReal i = ExtendedReal::from_int(Int(1000));
  CHECK(i.definitely_exceeds(Int(999)));
  CHECK(!i.definitely_exceeds(Int(1000)));
  CHECK(i.value().has_value());
  ExtendedReal big = ExtendedReal::from_log(Ball::exact(Int("1000000000000000000000"), 192));
  CHECK(big.definitely_exceeds(int_pow(Int(10), 100)));
  CHECK(!big.value().has_value());
  CHECK(big.to_string().substr(0, 4) == "10^(");
}
