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

#include "tthue/number_field.hpp"

#include <algorithm>

#include "tthue/errors.hpp"
#include "tthue/poly_factor.hpp"

namespace tthue {

NumberField::NumberField(ZPoly f, int r1, int r2, Int disc)
    : f_(std::move(f)), r1_(r1), r2_(r2), disc_f_(std::move(disc)) {}

FieldPtr NumberField::create(const ZPoly& f) {
  if (f.degree() < 3)
    throw Error(errc::degree_too_small,
                "defining polynomial must have degree >= 3, got " + std::to_string(f.degree()));
  if (!f.is_monic()) throw Error(errc::validation_error, "defining polynomial must be monic");
  check_irreducible_monic(f);  // throws ReducibleError with a factor
  SturmChain sturm{QPoly(f)};  // irreducible, hence squarefree
  int r1 = static_cast<int>(sturm.count_real_roots());
  int r2 = (f.degree() - r1) / 2;
  if (r1 + 2 * r2 != f.degree()) throw Error(errc::internal, "signature mismatch");
  return FieldPtr(new NumberField(f, r1, r2, f.discriminant()));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->degree())
    throw Error(errc::validation_error, "coordinate vector length must equal the field degree");
  for (auto& c : coords_) c.canonicalize();
}

FieldElement FieldElement::zero(FieldPtr field) {
  std::vector<Rat> c(static_cast<std::size_t>(field->degree()), Rat(0));
  return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::one(FieldPtr field) { return rational(std::move(field), Rat(1)); }

FieldElement FieldElement::generator(FieldPtr field) {
  std::vector<Rat> c(static_cast<std::size_t>(field->degree()), Rat(0));
  c[1] = 1;
  return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::rational(FieldPtr field, const Rat& q) {
  std::vector<Rat> c(static_cast<std::size_t>(field->degree()), Rat(0));
  c[0] = q;
  return FieldElement(std::move(field), std::move(c));
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& q) { return q == 0; });
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool FieldElement::has_integer_coords() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rat& q) { return q.get_den() == 1; });
}

Int FieldElement::coord_denominator() const {
  Int den = 1;
  for (const auto& q : coords_)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  return den;
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_->poly() == o.field_->poly() && coords_ == o.coords_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  std::vector<Rat> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  std::vector<Rat> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rat> c(coords_);
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

QPoly FieldElement::coord_poly() const { return QPoly(std::vector<Rat>(coords_)); }

namespace {
FieldElement from_poly_mod(const FieldPtr& K, const QPoly& g) {
  QPoly r = g.divmod(QPoly(K->poly())).second;
  std::vector<Rat> c(static_cast<std::size_t>(K->degree()), Rat(0));
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r[i];
  return FieldElement(K, std::move(c));
}
}  // namespace

FieldElement FieldElement::operator*(const FieldElement& o) const {
  return from_poly_mod(field_, coord_poly() * o.coord_poly());
}

FieldElement FieldElement::operator*(const Rat& k) const {
  std::vector<Rat> c(coords_);
  for (auto& x : c) x *= k;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::pow(unsigned long t) const {
  FieldElement acc = one(field_);
  FieldElement base = *this;
  while (t > 0) {
    if (t & 1ul) acc = acc * base;
    base = base * base;
    t >>= 1;
  }
  return acc;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(errc::zero_element, "inverse of zero");
  // extended Euclid in Q[x]: u*g + v*f = gcd = 1 (f irreducible)
  QPoly g = coord_poly(), f(field_->poly());
  QPoly r0 = f, r1 = g;
  QPoly s0, s1(std::vector<Rat>{Rat(1)});
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    QPoly s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0.degree() != 0) throw Error(errc::internal, "gcd with irreducible f not constant");
  return from_poly_mod(field_, s0 * (Rat(1) / r0[0]));
}

FieldElement FieldElement::pow_signed(long t) const {
  if (t >= 0) return pow(static_cast<unsigned long>(t));
  return inverse().pow(static_cast<unsigned long>(-t));
}

QPoly FieldElement::charpoly_rational() const {
  const int d = field_->degree();
  const std::size_t n = static_cast<std::size_t>(d);
  // multiplication-by-this matrix in the power basis
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  FieldElement col = *this;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) M[i][j] = col.coords()[i];
    if (j + 1 < n) col = col * generator(field_);
  }
  // Faddeev-LeVerrier: exact characteristic coefficients over Q
  std::vector<Rat> coeff(n + 1, Rat(0));
  coeff[n] = 1;
  std::vector<std::vector<Rat>> B(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) B[i][i] = 1;  // B_0 = I
  for (std::size_t k = 1; k <= n; ++k) {
    // B_k = M * B_{k-1} (then add c_{n-k} I after computing trace)
    std::vector<std::vector<Rat>> C(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (std::size_t l = 0; l < n; ++l) s += M[i][l] * B[l][j];
        C[i][j] = s;
      }
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += C[i][i];
    Rat ck = -tr / Rat(static_cast<unsigned long>(k));
    coeff[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) C[i][i] += ck;
    B = std::move(C);
  }
  return QPoly(std::move(coeff));
}

ZPoly FieldElement::charpoly() const {
  QPoly cp = charpoly_rational();
  std::vector<Int> z(cp.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Rat& q = cp[i];
    if (q.get_den() != 1)
      throw Error(errc::not_integral,
                  "characteristic polynomial coefficient " + std::to_string(i) +
                      " = " + q.get_str() + " is not an integer");
    z[i] = q.get_num();
  }
  return ZPoly(std::move(z));
}

QPoly FieldElement::min_poly_rational() const {
  return charpoly_rational().squarefree_part();
}

Rat FieldElement::norm() const {
  Rat c0 = charpoly_rational()[0];
  return field_->degree() % 2 == 0 ? c0 : -c0;
}

Rat FieldElement::trace() const {
  QPoly cp = charpoly_rational();
  return -cp[static_cast<std::size_t>(field_->degree() - 1)];
}

bool FieldElement::is_algebraic_integer() const {
  QPoly cp = charpoly_rational();
  for (const auto& q : cp.coeffs())
    if (q.get_den() != 1) return false;
  return true;
}

bool FieldElement::generates_field() const {
  QPoly cp = charpoly_rational();
  return QPoly::gcd(cp, cp.derivative()).degree() == 0;
}

std::string FieldElement::to_string(const std::string& var) const {
  return coord_poly().to_string(var);
}

Int NormForm::eval(const Int& x, const Int& y) const {
  // sum c_k x^k y^{d-k}, Horner in x with a running power of y
  Int acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * x + coeffs[k] * int_pow(y, static_cast<unsigned long>(coeffs.size() - 1 - k));
  }
  return acc;
}

std::string NormForm::to_string() const {
  std::string s;
  const std::size_t d = coeffs.size() - 1;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    if (!s.empty()) s += sgn(coeffs[k]) > 0 ? " + " : " - ";
    else if (sgn(coeffs[k]) < 0) s += "-";
    Int a = abs(coeffs[k]);
    bool unit_coeff = (a == 1) && (k > 0 || k < d);
    if (!unit_coeff || (k == 0 && k == d)) s += a.get_str();
    if (k > 0) s += (a == 1 ? "" : "*") + std::string("X") + (k > 1 ? "^" + std::to_string(k) : "");
    if (k < d) {
      std::size_t e = d - k;
      s += (k > 0 || a != 1 ? "*" : "") + std::string("Y") + (e > 1 ? "^" + std::to_string(e) : "");
    }
  }
  return s.empty() ? "0" : s;
}

NormForm norm_form(const FieldElement& beta) {
  ZPoly cp = beta.charpoly();
  NormForm out;
  out.coeffs = cp.coeffs();
  return out;
}

}  // namespace tthue
