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

#include "tthue/ball.hpp"

#include <random>

#include "doctest.h"
#include "tthue/errors.hpp"

using namespace tthue;

TEST_CASE("exact construction and containment") {
  Ball b = Ball::exact(Rat(1, 3), 128);
  CHECK(b.contains(Rat(1, 3)));
  CHECK(!b.contains(Rat(1, 2)));
  CHECK(!b.contains_zero());
  Ball z = Ball::zero(64);
  CHECK(z.is_exact_zero());
  CHECK(Ball::exact(5L, 64).contains(Rat(5)));
}

TEST_CASE("arithmetic encloses the exact value") {
  // (1/3 + 1/7) * 21 == 10 exactly
  Ball a = Ball::exact(Rat(1, 3), 96), b = Ball::exact(Rat(1, 7), 96);
  Ball r = (a + b) * Ball::exact(21L, 96);
  CHECK(r.contains(Rat(10)));
  Ball q = Ball::exact(Rat(22, 7), 96) / Ball::exact(Rat(11, 7), 96);
  CHECK(q.contains(Rat(2)));
  CHECK((a - a).contains_zero());
}

TEST_CASE("random expression containment property") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  for (int i = 0; i < 200; ++i) {
    Rat x(num(rng), den(rng)), y(num(rng), den(rng)), z(num(rng), den(rng));
    Rat exact = x * y + z * z - x;
    Ball bx = Ball::exact(x, 80), by = Ball::exact(y, 80), bz = Ball::exact(z, 80);
    Ball got = bx * by + bz * bz - bx;
    CHECK(got.contains(exact));
  }
}

TEST_CASE("log exp sqrt and directed rounding") {
  Ball two = Ball::exact(2L, 128);
  Ball l = two.log();
  CHECK(l.is_positive());
  CHECK(l.exp().contains(Rat(2)));
  Ball s = two.sqrt();
  CHECK((s * s).contains(Rat(2)));
  CHECK_THROWS_AS(Ball::exact(-1L, 64).log(), Error);
  CHECK_THROWS_AS(Ball::exact(-1L, 64).sqrt(), Error);
}

TEST_CASE("pow_int including straddling even powers") {
  Ball m = Ball::hull(Ball::exact(-2L, 64), Ball::exact(3L, 64));
  Ball sq = m.pow_int(2);
  CHECK(sq.is_nonneg());
  CHECK(sq.contains(Rat(9)));
  CHECK(sq.contains(Rat(0)));
  CHECK(Ball::exact(Rat(1, 2), 64).pow_int(-2).contains(Rat(4)));
}

TEST_CASE("certified comparisons") {
  Ball a = Ball::exact(1L, 64), b = Ball::exact(2L, 64);
  CHECK(a.definitely_lt(b));
  CHECK(b.definitely_gt(a));
  CHECK(a.less_than(b).value());
  Ball wide = Ball::hull(Ball::exact(0L, 64), Ball::exact(3L, 64));
  CHECK(!wide.less_than(b).has_value());
}

TEST_CASE("floor/ceil of endpoints") {
  Ball b = Ball::hull(Ball::exact(Rat(5, 2), 64), Ball::exact(Rat(7, 2), 64));
  CHECK(b.ceil_of_lo() == 3);
  CHECK(b.floor_of_hi() == 3);
}

TEST_CASE("complex ball arithmetic") {
  // (1+2i)(3-i) = 5 + 5i
  CBall a = CBall::exact(Rat(1), Rat(2), 96);
  CBall b = CBall::exact(Rat(3), Rat(-1), 96);
  CBall p = a * b;
  CHECK(p.re().contains(Rat(5)));
  CHECK(p.im().contains(Rat(5)));
  CBall q = p / b;
  CHECK(q.re().contains(Rat(1)));
  CHECK(q.im().contains(Rat(2)));
  CHECK(a.norm_sq().contains(Rat(5)));
  // |3+4i| = 5
  CBall c = CBall::exact(Rat(3), Rat(4), 96);
  CHECK(c.abs().contains(Rat(5)));
  CHECK(c.pow_int(2).re().contains(Rat(-7)));
  CHECK(c.pow_int(2).im().contains(Rat(24)));
}

TEST_CASE("monotone refinement: higher precision nests") {
  Ball lo = Ball::exact(Rat(1, 3), 64).log().exp();
  Ball hi = Ball::exact(Rat(1, 3), 256).log().exp();
  CHECK(lo.contains(hi));
}
