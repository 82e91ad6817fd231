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

#include "tthue/ball.hpp"
#include "tthue/number_field.hpp"

namespace fx {

using tthue::Ball;
using tthue::FieldElement;
using tthue::FieldPtr;
using tthue::Int;
using tthue::NumberField;
using tthue::Rat;
using tthue::ZPoly;

inline ZPoly zpoly(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return ZPoly(std::move(v));
}

inline FieldPtr simplest_cubic() { return NumberField::create(zpoly({-1, -2, 1, 1})); }
inline FieldPtr cbrt2_field() { return NumberField::create(zpoly({-2, 0, 0, 1})); }

inline FieldElement elem(const FieldPtr& K, std::vector<long> c) {
  std::vector<Rat> v(c.begin(), c.end());
  return FieldElement(K, std::move(v));
}

// exact rational from a plain decimal literal like "-1.25e-3" (test-side only)
inline Rat decimal(const std::string& text) {
  std::string mant = text;
  long exp10 = 0;
  if (auto e = mant.find_first_of("eE"); e != std::string::npos) {
    exp10 = std::stol(mant.substr(e + 1));
    mant = mant.substr(0, e);
  }
  std::string digits;
  long frac = 0;
  bool seen_dot = false;
  for (char ch : mant) {
    if (ch == '.') {
      seen_dot = true;
      continue;
    }
    digits += ch;
    if (seen_dot) ++frac;
  }
  Rat v(Int(digits.empty() ? std::string("0") : digits, 10));
  long net = exp10 - frac;
  Int pow10 = tthue::int_pow(Int(10), static_cast<unsigned long>(net < 0 ? -net : net));
  if (net >= 0)
    v *= Rat(pow10);
  else
    v /= Rat(pow10);
  v.canonicalize();
  return v;
}

// the enclosure lies inside [value - tol, value + tol]
inline bool within(const Ball& b, const Rat& v, const Rat& tol) {
  Rat lo = v - tol, hi = v + tol;
  return mpfr_cmp_q(b.lo(), lo.get_mpq_t()) >= 0 && mpfr_cmp_q(b.hi(), hi.get_mpq_t()) <= 0;
}

inline bool close(const Ball& b, const std::string& value, const std::string& tol = "1e-12") {
  return within(b, decimal(value), decimal(tol));
}

}  // namespace fx
