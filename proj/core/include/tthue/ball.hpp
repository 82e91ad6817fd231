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

#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "tthue/arith.hpp"

namespace tthue {

using prec_t = mpfr_prec_t;

inline constexpr prec_t kPrecMin = 64;
inline constexpr prec_t kPrecDefault = 128;
// Adaptive-precision hard cap; hitting it raises PrecisionExhausted.
inline constexpr prec_t kPrecCap = 1048576;

// Certified enclosure of a real number, stored as directed-rounding interval
// endpoints [lo, hi]. Every operation rounds outward, so the true value of
// any expression stays inside the result. midpoint()/radius() present the
// usual ball view.
class Ball {
 public:
  Ball();
  ~Ball();
  Ball(const Ball& o);
  Ball(Ball&& o) noexcept;
  Ball& operator=(const Ball& o);
  Ball& operator=(Ball&& o) noexcept;

  static Ball exact(long v, prec_t prec = kPrecDefault);
  static Ball exact(const Int& v, prec_t prec);
  static Ball exact(const Rat& v, prec_t prec);  // outward-rounded enclosure
  static Ball zero(prec_t prec = kPrecDefault);
  static Ball from_endpoints(const mpfr_t lo, const mpfr_t hi, prec_t prec);
  static Ball point(const mpfr_t v, prec_t prec);  // exact single value
  static Ball hull(const Ball& a, const Ball& b);
  // intersection; throws Error(internal) when provably empty
  static Ball intersect(const Ball& a, const Ball& b);
  // [-hi(r), hi(r)] for a nonnegative r
  static Ball symmetric(const Ball& r);
  static Ball pi(prec_t prec);
  static Ball e(prec_t prec);

  prec_t precision() const { return prec_; }
  Ball at_precision(prec_t prec) const;

  bool is_finite() const;
  bool contains_zero() const;
  bool is_exact_zero() const;
  bool is_positive() const;  // certified lo > 0
  bool is_negative() const;
  bool is_nonneg() const;

  Ball operator+(const Ball& o) const;
  Ball operator-(const Ball& o) const;
  Ball operator*(const Ball& o) const;
  Ball operator/(const Ball& o) const;  // requires o certified nonzero
  Ball operator-() const;
  Ball abs() const;
  Ball log() const;  // requires certified positive
  Ball exp() const;
  Ball sqrt() const;  // requires certified nonnegative
  Ball pow_int(long e) const;
  static Ball min(const Ball& a, const Ball& b);
  static Ball max(const Ball& a, const Ball& b);

  bool definitely_lt(const Ball& o) const;
  bool definitely_gt(const Ball& o) const;
  bool definitely_le(const Ball& o) const;
  bool definitely_ge(const Ball& o) const;
  bool overlaps(const Ball& o) const;
  bool contains(const Rat& q) const;
  bool contains(const Ball& o) const;  // superset, endpoint-wise

  // nullopt when the enclosures overlap (undecidable at this precision)
  std::optional<bool> less_than(const Ball& o) const;

  // largest integer <= hi and smallest integer >= lo (for integer
  // candidate enumeration over an enclosure)
  Int floor_of_hi() const;
  Int ceil_of_lo() const;

  double mid_double() const;
  std::string mid_string(std::size_t digits = 20) const;
  std::string rad_string() const;
  std::string to_string(std::size_t digits = 20) const;

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo_mut() { return lo_; }
  mpfr_t& hi_mut() { return hi_; }
  void commit();  // re-validate lo <= hi after direct endpoint writes

 private:
  explicit Ball(prec_t prec);
  mpfr_t lo_, hi_;
  prec_t prec_;
};

// Rectangular enclosure of a complex number.
class CBall {
 public:
  CBall() = default;
  CBall(Ball re, Ball im) : re_(std::move(re)), im_(std::move(im)) {}
  static CBall exact(const Rat& re, const Rat& im, prec_t prec);

  const Ball& re() const { return re_; }
  const Ball& im() const { return im_; }
  prec_t precision() const { return std::max(re_.precision(), im_.precision()); }

  CBall operator+(const CBall& o) const { return {re_ + o.re_, im_ + o.im_}; }
  CBall operator-(const CBall& o) const { return {re_ - o.re_, im_ - o.im_}; }
  CBall operator*(const CBall& o) const;
  CBall operator/(const CBall& o) const;  // requires o certified nonzero
  CBall operator-() const { return {-re_, -im_}; }
  CBall conj() const { return {re_, -im_}; }
  CBall pow_int(unsigned long e) const;

  Ball norm_sq() const;  // re^2 + im^2
  Ball abs() const;
  Ball log_abs() const;  // requires modulus certifiedly nonzero

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool is_real_exact() const { return im_.is_exact_zero(); }
  bool overlaps(const CBall& o) const { return re_.overlaps(o.re_) && im_.overlaps(o.im_); }

  std::string to_string(std::size_t digits = 20) const;

 private:
  Ball re_, im_;
};

// Horner evaluation with exact coefficients, outward rounded at the
// precision of the argument.
Ball eval_poly(const std::vector<Int>& coeffs_ascending, const Ball& x);
Ball eval_poly(const std::vector<Rat>& coeffs_ascending, const Ball& x);
CBall eval_poly(const std::vector<Int>& coeffs_ascending, const CBall& x);
CBall eval_poly(const std::vector<Rat>& coeffs_ascending, const CBall& x);

}  // namespace tthue
