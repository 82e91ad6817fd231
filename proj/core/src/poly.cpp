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

#include "tthue/poly.hpp"

#include <algorithm>

#include "tthue/errors.hpp"

namespace tthue {

// ---------- ZPoly ----------

ZPoly::ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::x_power(std::size_t k) {
  std::vector<Int> c(k + 1, Int(0));
  c[k] = 1;
  return ZPoly(std::move(c));
}

ZPoly ZPoly::constant(const Int& c) { return ZPoly(std::vector<Int>{c}); }

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-() const {
  std::vector<Int> r(c_);
  for (auto& x : r) x = -x;
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const Int& k) const {
  std::vector<Int> r(c_);
  for (auto& x : r) x *= k;
  return ZPoly(std::move(r));
}

ZPoly ZPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<unsigned long>(i));
  return ZPoly(std::move(r));
}

Int ZPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat ZPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

Int ZPoly::content() const {
  Int g = 0;
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  if (sgn(lc()) < 0) g = -g;
  std::vector<Int> r(c_);
  for (auto& x : r) x /= g;
  return ZPoly(std::move(r));
}

ZPoly ZPoly::divide_exact(const ZPoly& divisor) const {
  if (divisor.is_zero()) throw Error(errc::internal, "division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw Error(errc::internal, "inexact polynomial division");
  std::vector<Int> rem(c_);
  std::vector<Int> quo(static_cast<std::size_t>(degree() - divisor.degree()) + 1, Int(0));
  for (int k = degree() - divisor.degree(); k >= 0; --k) {
    Int top = rem[static_cast<std::size_t>(k + divisor.degree())];
    if (top == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), divisor.lc().get_mpz_t());
    if (r != 0) throw Error(errc::internal, "inexact polynomial division");
    quo[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= divisor.degree(); ++i)
      rem[static_cast<std::size_t>(k + i)] -= q * divisor[static_cast<std::size_t>(i)];
  }
  for (const auto& x : rem)
    if (x != 0) throw Error(errc::internal, "inexact polynomial division");
  return ZPoly(std::move(quo));
}

std::pair<ZPoly, ZPoly> ZPoly::divmod_monic(const ZPoly& d) const {
  if (!d.is_monic()) throw Error(errc::internal, "divmod_monic needs monic divisor");
  std::vector<Int> rem(c_);
  int dq = degree() - d.degree();
  if (dq < 0) return {ZPoly{}, *this};
  std::vector<Int> quo(static_cast<std::size_t>(dq) + 1, Int(0));
  for (int k = dq; k >= 0; --k) {
    Int q = rem[static_cast<std::size_t>(k + d.degree())];
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= d.degree(); ++i)
      rem[static_cast<std::size_t>(k + i)] -= q * d[static_cast<std::size_t>(i)];
  }
  return {ZPoly(std::move(quo)), ZPoly(std::move(rem))};
}

Int ZPoly::norm2_sq() const {
  Int s = 0;
  for (const auto& x : c_) s += x * x;
  return s;
}

namespace {

// Bareiss fraction-free determinant of an integer matrix (destructive).
Int bareiss_det(std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] /= prev;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Int ZPoly::resultant(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return 0;
  const int n = degree(), m = o.degree();
  if (n == 0) return int_pow(c_[0], static_cast<unsigned long>(m));
  if (m == 0) return int_pow(o.c_[0], static_cast<unsigned long>(n));
  std::vector<std::vector<Int>> s(static_cast<std::size_t>(n + m),
                                  std::vector<Int>(static_cast<std::size_t>(n + m), Int(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = c_[static_cast<std::size_t>(n - j)];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i + j)] = o.c_[static_cast<std::size_t>(m - j)];
  return bareiss_det(s);
}

Int ZPoly::discriminant() const {
  const int n = degree();
  if (n < 1) throw Error(errc::internal, "discriminant of constant");
  Int res = resultant(derivative());
  Int den = lc();
  Int num = res;
  // disc = (-1)^{n(n-1)/2} res(f, f') / lc
  if (((static_cast<long>(n) * (n - 1)) / 2) % 2 == 1) num = -num;
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw Error(errc::internal, "inexact discriminant division");
  return q;
}

ZPoly ZPoly::cyclotomic(unsigned long m) {
  // Phi_m = prod_{d | m} (x^{m/d} - 1)^{mu(d)} via two exact divisions
  auto mu = [](unsigned long n) -> int {
    int cnt = 0;
    for (unsigned long p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        ++cnt;
      }
    }
    if (n > 1) ++cnt;
    return cnt % 2 == 0 ? 1 : -1;
  };
  ZPoly num = ZPoly::constant(1), den = ZPoly::constant(1);
  for (unsigned long d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    int mud = mu(d);
    if (mud == 0) continue;
    ZPoly term = ZPoly::x_power(m / d) - ZPoly::constant(1);
    (mud == 1 ? num : den) = (mud == 1 ? num : den) * term;
  }
  return num.divide_exact(den);
}

std::string ZPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    if (!s.empty()) s += sgn(a) > 0 ? " + " : " - ";
    else if (sgn(a) < 0) s += "-";
    Int aa = abs(a);
    if (aa != 1 || i == 0) s += aa.get_str();
    if (i > 0) {
      if (aa != 1) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

// ---------- QPoly ----------

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const ZPoly& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c_.emplace_back(x);
  trim();
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rat& k) const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= k;
  return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  Rat inv = 1 / lc();
  return *this * inv;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<unsigned long>(i));
  return QPoly(std::move(r));
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw Error(errc::internal, "division by zero polynomial");
  std::vector<Rat> rem(c_);
  int dq = degree() - d.degree();
  if (dq < 0) return {QPoly{}, *this};
  std::vector<Rat> quo(static_cast<std::size_t>(dq) + 1, Rat(0));
  for (int k = dq; k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + d.degree())] / d.lc();
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= d.degree(); ++i)
      rem[static_cast<std::size_t>(k + i)] -= q * d[static_cast<std::size_t>(i)];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

QPoly QPoly::squarefree_part() const {
  if (degree() <= 1) return monic();
  QPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return monic();
  return divmod(g).first.monic();
}

ZPoly QPoly::primitive_z(Rat* scale) const {
  if (is_zero()) {
    if (scale) *scale = 1;
    return {};
  }
  Int den = 1;
  for (const auto& q : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> z(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rat v = c_[i] * Rat(den);
    z[i] = v.get_num();
  }
  ZPoly zp(std::move(z));
  Int cont = zp.content();
  if (sgn(zp.lc()) < 0) cont = -cont;
  if (scale) *scale = Rat(den) / Rat(cont);
  return zp.primitive_part();
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    if (!s.empty()) s += sgn(a) > 0 ? " + " : " - ";
    else if (sgn(a) < 0) s += "-";
    Rat aa = abs(a);
    if (aa != 1 || i == 0) s += aa.get_str();
    if (i > 0) {
      if (aa != 1) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

// ---------- Sturm ----------

SturmChain::SturmChain(const QPoly& p) {
  if (p.is_zero()) throw Error(errc::internal, "Sturm chain of zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (chain_.back().degree() > 0) {
    QPoly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) {
      // squarefree input should never reach a zero remainder before a constant
      throw Error(errc::internal, "Sturm chain hit zero remainder; input not squarefree");
    }
    chain_.push_back(r * Rat(-1));
  }
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace

int SturmChain::sign_variations(const Rat& at) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sgn(p.eval(at)));
  return count_variations(signs);
}

int SturmChain::variations_at_minus_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) {
    int s = p.is_zero() ? 0 : sgn(p.lc());
    if (p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::variations_at_plus_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(p.is_zero() ? 0 : sgn(p.lc()));
  return count_variations(signs);
}

long SturmChain::count_roots(const Rat& a, const Rat& b) const {
  return sign_variations(a) - sign_variations(b);
}

long SturmChain::count_real_roots() const {
  return variations_at_minus_inf() - variations_at_plus_inf();
}

Rat cauchy_root_bound(const QPoly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rat v = abs(p[static_cast<std::size_t>(i)] / p.lc());
    if (v > m) m = v;
  }
  return m + 1;
}

}  // namespace tthue
