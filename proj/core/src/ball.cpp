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

#include <algorithm>
#include <cstdio>

#include "tthue/errors.hpp"

namespace tthue {

Ball::Ball() : Ball(kPrecMin) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Ball::Ball(prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Ball::~Ball() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Ball::Ball(const Ball& o) : Ball(o.prec_) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept : prec_(o.prec_) {
  // steal the mpfr_t contents; leave o valid with fresh zeros
  lo_[0] = o.lo_[0];
  hi_[0] = o.hi_[0];
  mpfr_init2(o.lo_, kPrecMin);
  mpfr_init2(o.hi_, kPrecMin);
  mpfr_set_zero(o.lo_, 1);
  mpfr_set_zero(o.hi_, 1);
  o.prec_ = kPrecMin;
}

Ball& Ball::operator=(const Ball& o) {
  if (this == &o) return *this;
  mpfr_set_prec(lo_, o.prec_);
  mpfr_set_prec(hi_, o.prec_);
  prec_ = o.prec_;
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

Ball Ball::exact(long v, prec_t prec) {
  Ball b(prec);
  mpfr_set_si(b.lo_, v, MPFR_RNDD);
  mpfr_set_si(b.hi_, v, MPFR_RNDU);
  return b;
}

Ball Ball::exact(const Int& v, prec_t prec) {
  Ball b(prec);
  mpfr_set_z(b.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(b.hi_, v.get_mpz_t(), MPFR_RNDU);
  return b;
}

Ball Ball::exact(const Rat& v, prec_t prec) {
  Ball b(prec);
  mpfr_set_q(b.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(b.hi_, v.get_mpq_t(), MPFR_RNDU);
  return b;
}

Ball Ball::zero(prec_t prec) {
  Ball b(prec);
  mpfr_set_zero(b.lo_, 1);
  mpfr_set_zero(b.hi_, 1);
  return b;
}

Ball Ball::from_endpoints(const mpfr_t lo, const mpfr_t hi, prec_t prec) {
  Ball b(prec);
  mpfr_set(b.lo_, lo, MPFR_RNDD);
  mpfr_set(b.hi_, hi, MPFR_RNDU);
  if (mpfr_greater_p(b.lo_, b.hi_)) throw Error(errc::internal, "inverted interval");
  return b;
}

Ball Ball::point(const mpfr_t v, prec_t prec) {
  Ball b(prec);
  mpfr_set(b.lo_, v, MPFR_RNDD);
  mpfr_set(b.hi_, v, MPFR_RNDU);
  return b;
}

Ball Ball::hull(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Ball Ball::intersect(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  if (mpfr_greater_p(r.lo_, r.hi_)) throw Error(errc::internal, "empty interval intersection");
  return r;
}

Ball Ball::symmetric(const Ball& r) {
  Ball out(r.prec_);
  mpfr_neg(out.lo_, r.hi_, MPFR_RNDD);
  mpfr_set(out.hi_, r.hi_, MPFR_RNDU);
  return out;
}

Ball Ball::pi(prec_t prec) {
  Ball b(prec);
  mpfr_const_pi(b.lo_, MPFR_RNDD);
  mpfr_const_pi(b.hi_, MPFR_RNDU);
  return b;
}

Ball Ball::e(prec_t prec) {
  Ball b(prec);
  mpfr_set_ui(b.lo_, 1, MPFR_RNDN);
  mpfr_set_ui(b.hi_, 1, MPFR_RNDN);
  mpfr_exp(b.lo_, b.lo_, MPFR_RNDD);
  mpfr_exp(b.hi_, b.hi_, MPFR_RNDU);
  return b;
}

Ball Ball::at_precision(prec_t prec) const {
  Ball b(prec);
  mpfr_set(b.lo_, lo_, MPFR_RNDD);
  mpfr_set(b.hi_, hi_, MPFR_RNDU);
  return b;
}

bool Ball::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

bool Ball::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Ball::is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

bool Ball::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Ball::is_negative() const { return mpfr_sgn(hi_) < 0; }
bool Ball::is_nonneg() const { return mpfr_sgn(lo_) >= 0; }

Ball Ball::operator+(const Ball& o) const {
  Ball r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Ball Ball::operator-(const Ball& o) const {
  Ball r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Ball Ball::operator*(const Ball& o) const {
  Ball r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lo: min of the four endpoint products rounded down
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // hi: max rounded up
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Ball Ball::operator/(const Ball& o) const {
  if (o.contains_zero()) throw Error(errc::internal, "interval division by enclosure of zero");
  Ball r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Ball Ball::operator-() const {
  Ball r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Ball Ball::abs() const {
  Ball r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
  return r;
}

Ball Ball::log() const {
  if (!is_positive()) throw Error(errc::internal, "interval log of non-positive enclosure");
  Ball r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Ball Ball::exp() const {
  Ball r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Ball Ball::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw Error(errc::internal, "interval sqrt of negative enclosure");
  Ball r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Ball Ball::pow_int(long e) const {
  if (e == 0) return Ball::exact(1L, prec_);
  if (e < 0) return Ball::exact(1L, prec_) / pow_int(-e);
  Ball base = *this;
  // even powers of straddling intervals tighten through abs
  if (e % 2 == 0 && contains_zero()) {
    Ball a = abs();
    Ball r(prec_);
    mpfr_set_zero(r.lo_, 1);
    mpfr_pow_ui(r.hi_, a.hi_, static_cast<unsigned long>(e), MPFR_RNDU);
    return r;
  }
  Ball acc = Ball::exact(1L, prec_);
  long n = e;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Ball Ball::min(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Ball Ball::max(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

bool Ball::definitely_lt(const Ball& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }
bool Ball::definitely_gt(const Ball& o) const { return mpfr_greater_p(lo_, o.hi_) != 0; }
bool Ball::definitely_le(const Ball& o) const { return mpfr_lessequal_p(hi_, o.lo_) != 0; }
bool Ball::definitely_ge(const Ball& o) const { return mpfr_greaterequal_p(lo_, o.hi_) != 0; }

bool Ball::overlaps(const Ball& o) const {
  return !(definitely_lt(o) || definitely_gt(o));
}

bool Ball::contains(const Rat& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Ball::contains(const Ball& o) const {
  return mpfr_lessequal_p(lo_, o.lo_) && mpfr_greaterequal_p(hi_, o.hi_);
}

std::optional<bool> Ball::less_than(const Ball& o) const {
  if (definitely_lt(o)) return true;
  if (definitely_ge(o)) return false;
  return std::nullopt;
}

Int Ball::floor_of_hi() const {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(hi_));
  mpfr_rint_floor(t, hi_, MPFR_RNDD);
  Int r;
  mpfr_get_z(r.get_mpz_t(), t, MPFR_RNDN);
  mpfr_clear(t);
  return r;
}

Int Ball::ceil_of_lo() const {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(lo_));
  mpfr_rint_ceil(t, lo_, MPFR_RNDU);
  Int r;
  mpfr_get_z(r.get_mpz_t(), t, MPFR_RNDN);
  mpfr_clear(t);
  return r;
}

double Ball::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, 64);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

namespace {
std::string mpfr_to_decimal(const mpfr_t v, std::size_t digits, mpfr_rnd_t rnd) {
  if (!mpfr_number_p(v)) {
    if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
    return "nan";
  }
  if (mpfr_zero_p(v)) return "0";
  char* s = nullptr;
  int n = mpfr_asprintf(&s, "%.*R*e", static_cast<int>(digits), rnd, v);
  std::string out = n >= 0 && s ? s : "?";
  if (s) mpfr_free_str(s);
  return out;
}
}  // namespace

std::string Ball::mid_string(std::size_t digits) const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  std::string out = mpfr_to_decimal(m, digits, MPFR_RNDN);
  mpfr_clear(m);
  return out;
}

std::string Ball::rad_string() const {
  mpfr_t m, r;
  mpfr_init2(m, prec_);
  mpfr_init2(r, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  mpfr_sub(r, hi_, m, MPFR_RNDU);
  mpfr_sub(m, m, lo_, MPFR_RNDU);
  mpfr_max(r, r, m, MPFR_RNDU);
  std::string out = mpfr_to_decimal(r, 3, MPFR_RNDU);
  mpfr_clear(m);
  mpfr_clear(r);
  return out;
}

std::string Ball::to_string(std::size_t digits) const {
  return "[" + mid_string(digits) + " +/- " + rad_string() + "]";
}

void Ball::commit() {
  if (mpfr_greater_p(lo_, hi_)) throw Error(errc::internal, "inverted interval after commit");
}

// ---------- CBall ----------

CBall CBall::exact(const Rat& re, const Rat& im, prec_t prec) {
  return {Ball::exact(re, prec), Ball::exact(im, prec)};
}

CBall CBall::operator*(const CBall& o) const {
  return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

CBall CBall::operator/(const CBall& o) const {
  Ball n = o.norm_sq();
  if (n.contains_zero())
    throw Error(errc::internal, "complex interval division by enclosure of zero");
  CBall num = *this * o.conj();
  return {num.re() / n, num.im() / n};
}

CBall CBall::pow_int(unsigned long e) const {
  prec_t p = precision();
  CBall acc(Ball::exact(1L, p), Ball::zero(p));
  CBall base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Ball CBall::norm_sq() const { return re_.pow_int(2) + im_.pow_int(2); }

Ball CBall::abs() const {
  if (im_.is_exact_zero()) return re_.abs();
  if (re_.is_exact_zero()) return im_.abs();
  return norm_sq().sqrt();
}

Ball CBall::log_abs() const {
  // exact real/imaginary parts keep the modulus tight where it matters
  Ball a = abs();
  if (!a.is_positive()) throw Error(errc::internal, "log_abs of enclosure touching zero");
  return a.log();
}

std::string CBall::to_string(std::size_t digits) const {
  return re_.to_string(digits) + " + " + im_.to_string(digits) + "*i";
}

template <typename Coeff>
static Ball eval_poly_real(const std::vector<Coeff>& c, const Ball& x) {
  prec_t p = x.precision();
  Ball acc = Ball::zero(p);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Ball::exact(*it, p);
  return acc;
}

template <typename Coeff>
static CBall eval_poly_complex(const std::vector<Coeff>& c, const CBall& x) {
  prec_t p = x.precision();
  CBall acc(Ball::zero(p), Ball::zero(p));
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * x + CBall(Ball::exact(*it, p), Ball::zero(p));
  return acc;
}

Ball eval_poly(const std::vector<Int>& c, const Ball& x) { return eval_poly_real(c, x); }
Ball eval_poly(const std::vector<Rat>& c, const Ball& x) { return eval_poly_real(c, x); }
CBall eval_poly(const std::vector<Int>& c, const CBall& x) { return eval_poly_complex(c, x); }
CBall eval_poly(const std::vector<Rat>& c, const CBall& x) { return eval_poly_complex(c, x); }

}  // namespace tthue
