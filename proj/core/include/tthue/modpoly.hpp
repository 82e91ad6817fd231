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

#include <utility>
#include <vector>

#include "tthue/poly.hpp"

namespace tthue {

// Dense polynomial over F_p, p prime. Coefficients reduced to [0, p).
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(Int p, std::vector<Int> coeffs);
  static FpPoly from(const ZPoly& f, const Int& p);
  static FpPoly x_power(const Int& p, std::size_t k);
  static FpPoly constant(const Int& p, const Int& c);

  const Int& modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  const Int& lc() const { return c_.back(); }
  const std::vector<Int>& coeffs() const { return c_; }
  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly monic() const;
  FpPoly derivative() const;
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly mod(const FpPoly& m) const { return divmod(m).second; }

  static FpPoly gcd(const FpPoly& a, const FpPoly& b);
  // this^e mod m
  FpPoly powmod(const Int& e, const FpPoly& m) const;

  ZPoly lift_symmetric() const;  // representatives in (-p/2, p/2]
  ZPoly lift() const;            // representatives in [0, p)

 private:
  void trim();
  Int p_;
  std::vector<Int> c_;
};

struct FpFactor {
  FpPoly factor;  // monic irreducible
  unsigned long multiplicity;
};

// Complete factorization of a nonzero polynomial over F_p into monic
// irreducibles (squarefree + distinct-degree + Cantor-Zassenhaus; the
// equal-degree splitting is randomized with a seed derived from (f, p) so
// results are deterministic). The unit factor lc(f) is dropped.
std::vector<FpFactor> factor_mod_p(const FpPoly& f);

bool is_squarefree_mod_p(const ZPoly& f, const Int& p);

// Hensel lifting of a monic coprime factorization. Input: monic f over Z and
// monic g_1, ..., g_k over F_p, pairwise coprime, with f == prod g_i (mod p).
// Output: monic lifts G_i with f == prod G_i (mod p^e), G_i == g_i (mod p),
// coefficients reduced into [0, p^e).
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors,
                               const Int& p, unsigned long e);

}  // namespace tthue
