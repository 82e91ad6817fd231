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

#include <string>
#include <vector>

#include "tthue/arith.hpp"

namespace tthue {

class QPoly;

// Dense integer polynomial, coefficients ascending. The zero polynomial has
// an empty coefficient vector; otherwise the leading coefficient is nonzero.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs);
  static ZPoly x_power(std::size_t k);
  static ZPoly constant(const Int& c);
  static ZPoly cyclotomic(unsigned long m);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const Int& lc() const { return c_.back(); }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Int>& coeffs() const { return c_; }

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator-() const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator*(const Int& k) const;
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }

  ZPoly derivative() const;
  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  Int content() const;
  ZPoly primitive_part() const;

  // quotient of an exact division; throws Error(internal) on inexactness
  ZPoly divide_exact(const ZPoly& divisor) const;
  // remainder / quotient by a monic divisor (exact over Z)
  std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& monic_divisor) const;

  Int resultant(const ZPoly& o) const;
  Int discriminant() const;

  // squared l2 norm of the coefficient vector
  Int norm2_sq() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Dense rational polynomial, same conventions as ZPoly.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  explicit QPoly(const ZPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& lc() const { return c_.back(); }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& k) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  QPoly monic() const;
  QPoly derivative() const;
  Rat eval(const Rat& x) const;
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;

  static QPoly gcd(const QPoly& a, const QPoly& b);  // monic gcd
  QPoly squarefree_part() const;                     // p / gcd(p, p')

  // integer multiple with coprime coefficients and positive leading term;
  // *denominator (if non-null) receives the lcm of coefficient denominators
  // divided by the removed content (so that this * denominator == result).
  ZPoly primitive_z(Rat* scale = nullptr) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Sturm chain of a squarefree rational polynomial; counts real roots in
// half-open intervals (a, b].
class SturmChain {
 public:
  explicit SturmChain(const QPoly& squarefree);
  int sign_variations(const Rat& at) const;
  int variations_at_minus_inf() const;
  int variations_at_plus_inf() const;
  long count_roots(const Rat& a, const Rat& b) const;  // in (a, b]
  long count_real_roots() const;

 private:
  std::vector<QPoly> chain_;
};

// 1 + max |c_i / c_n|: every complex root has modulus below this.
Rat cauchy_root_bound(const QPoly& p);

}  // namespace tthue
