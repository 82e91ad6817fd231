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

#include <memory>
#include <string>
#include <vector>

#include "tthue/poly.hpp"

namespace tthue {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// The fixed field K = Q[X]/(f): monic irreducible integer f of degree >= 3.
// Immutable; shared by every FieldElement living in it.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // Validates: degree >= 3 (DegreeTooSmall), monic, irreducible over Q
  // (Reducible, with a factor exhibited). Signature by Sturm count.
  static FieldPtr create(const ZPoly& f);

  const ZPoly& poly() const { return f_; }
  int degree() const { return f_.degree(); }
  int real_embedding_count() const { return r1_; }
  int complex_pair_count() const { return r2_; }
  int unit_rank() const { return r1_ + r2_ - 1; }
  const Int& poly_discriminant() const { return disc_f_; }

 private:
  NumberField(ZPoly f, int r1, int r2, Int disc);
  ZPoly f_;
  int r1_, r2_;
  Int disc_f_;
};

// Element of K with exact rational power-basis coordinates, always reduced
// to lowest terms; equality is coordinate-wise.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<Rat> coords);
  static FieldElement zero(FieldPtr field);
  static FieldElement one(FieldPtr field);
  static FieldElement generator(FieldPtr field);  // the class of X
  static FieldElement rational(FieldPtr field, const Rat& q);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  bool has_integer_coords() const;
  Int coord_denominator() const;  // lcm of coordinate denominators

  bool operator==(const FieldElement& o) const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rat& k) const;

  // exact power by repeated squaring with reduction modulo f (t >= 0)
  FieldElement pow(unsigned long t) const;
  FieldElement inverse() const;  // ZeroElement on 0
  FieldElement pow_signed(long t) const;

  QPoly coord_poly() const;

  // characteristic polynomial of the multiplication-by-this matrix;
  // exact rational computation (Faddeev-LeVerrier)
  QPoly charpoly_rational() const;
  // integer characteristic polynomial; NotIntegral when a coefficient is a
  // non-integer rational (the element is not an algebraic integer)
  ZPoly charpoly() const;
  // monic rational minimal polynomial (charpoly stripped of repeated factors)
  QPoly min_poly_rational() const;

  Rat norm() const;   // (-1)^d * charpoly(0)
  Rat trace() const;
  bool is_algebraic_integer() const;

  // true iff Q(this) = K, i.e. gcd(charpoly, charpoly') is constant
  bool generates_field() const;

  std::string to_string(const std::string& var = "a") const;

 private:
  FieldPtr field_;
  std::vector<Rat> coords_;
};

// Homogenized characteristic polynomial F(X,Y) = sum c_k X^k Y^{d-k},
// with c_d = 1; F(x, y) = N(x - beta*y) exactly.
struct NormForm {
  std::vector<Int> coeffs;  // ascending in the X-power, size d+1
  Int eval(const Int& x, const Int& y) const;
  std::string to_string() const;
};

// Requires beta integral (charpoly integral); throws NotIntegral otherwise.
NormForm norm_form(const FieldElement& beta);

}  // namespace tthue
