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

#include "tthue/modpoly.hpp"

#include <algorithm>

#include "tthue/errors.hpp"

namespace tthue {

FpPoly::FpPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
  for (auto& x : c_) {
    x %= p_;
    if (x < 0) x += p_;
  }
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::from(const ZPoly& f, const Int& p) { return FpPoly(p, f.coeffs()); }

FpPoly FpPoly::x_power(const Int& p, std::size_t k) {
  std::vector<Int> c(k + 1, Int(0));
  c[k] = 1;
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::constant(const Int& p, const Int& c) { return FpPoly(p, {c}); }

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(p_, {});
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return FpPoly(p_, std::move(r));
}

namespace {
Int inv_mod(const Int& a, const Int& p) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error(errc::internal, "non-invertible element mod p");
  return r;
}
}  // namespace

FpPoly FpPoly::monic() const {
  if (is_zero() || lc() == 1) return *this;
  Int inv = inv_mod(lc(), p_);
  std::vector<Int> r(c_);
  for (auto& x : r) x = (x * inv) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(p_, {});
  std::vector<Int> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<unsigned long>(i));
  return FpPoly(p_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) throw Error(errc::internal, "mod-p division by zero");
  std::vector<Int> rem(c_);
  int dq = degree() - d.degree();
  if (dq < 0) return {FpPoly(p_, {}), *this};
  Int lcinv = inv_mod(d.lc(), p_);
  std::vector<Int> quo(static_cast<std::size_t>(dq) + 1, Int(0));
  for (int k = dq; k >= 0; --k) {
    Int q = (rem[static_cast<std::size_t>(k + d.degree())] * lcinv) % p_;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= d.degree(); ++i) {
      Int& cell = rem[static_cast<std::size_t>(k + i)];
      cell = (cell - q * d[static_cast<std::size_t>(i)]) % p_;
      if (cell < 0) cell += p_;
    }
  }
  return {FpPoly(p_, std::move(quo)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly FpPoly::powmod(const Int& e, const FpPoly& m) const {
  FpPoly base = mod(m);
  FpPoly acc = FpPoly::constant(p_, 1);
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    acc = (acc * acc).mod(m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(bit))) acc = (acc * base).mod(m);
  }
  return acc;
}

ZPoly FpPoly::lift_symmetric() const {
  std::vector<Int> r(c_);
  Int half = p_ / 2;
  for (auto& x : r)
    if (x > half) x -= p_;
  return ZPoly(std::move(r));
}

ZPoly FpPoly::lift() const { return ZPoly(std::vector<Int>(c_)); }

// ---------- factorization over F_p ----------

namespace {

// deterministic per-(f,p) seed so Cantor-Zassenhaus splits reproducibly
unsigned long seed_of(const FpPoly& f) {
  unsigned long h = 0x9e3779b97f4a7c15ull;
  h ^= mpz_fdiv_ui(f.modulus().get_mpz_t(), 0x7fffffff);
  for (const auto& c : f.coeffs()) h = h * 6364136223846793005ull + mpz_fdiv_ui(c.get_mpz_t(), 0x7fffffff);
  return h;
}

FpPoly random_poly(gmp_randstate_t st, const Int& p, int deg) {
  std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) mpz_urandomm(x.get_mpz_t(), st, p.get_mpz_t());
  return FpPoly(p, std::move(c));
}

// squarefree decomposition over F_p (handles p-th power parts)
std::vector<std::pair<FpPoly, unsigned long>> squarefree_decompose(const FpPoly& f0) {
  const Int& p = f0.modulus();
  std::vector<std::pair<FpPoly, unsigned long>> out;
  FpPoly f = f0.monic();
  unsigned long scale = 1;
  while (f.degree() > 0) {
    FpPoly d = f.derivative();
    if (d.is_zero()) {
      // f is a polynomial in x^p: take p-th root coefficientwise (F_p perfect)
      unsigned long pul = mpz_get_ui(p.get_mpz_t());
      std::vector<Int> root;
      for (std::size_t i = 0; i < f.coeffs().size(); i += pul) root.push_back(f[i]);
      f = FpPoly(p, std::move(root));
      scale *= pul;
      continue;
    }
    FpPoly g = FpPoly::gcd(f, d);
    FpPoly w = f.divmod(g).first;  // product of factors of multiplicity not divisible by p
    unsigned long i = 1;
    while (w.degree() > 0) {
      FpPoly y = FpPoly::gcd(w, g);
      FpPoly part = w.divmod(y).first;
      if (part.degree() > 0) out.emplace_back(part.monic(), i * scale);
      w = y;
      g = g.divmod(y).first;
      ++i;
    }
    if (g.degree() == 0) break;
    f = g;  // remaining p-th-power part, loop again
  }
  return out;
}

// distinct-degree factorization of a squarefree monic f
std::vector<std::pair<FpPoly, int>> distinct_degree(const FpPoly& f) {
  const Int& p = f.modulus();
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly rest = f;
  FpPoly xp = FpPoly::x_power(p, 1);
  FpPoly h = xp;  // x^{p^i} mod rest, maintained incrementally
  int i = 0;
  while (rest.degree() > 0) {
    ++i;
    if (2 * i > rest.degree()) {
      out.emplace_back(rest, rest.degree());
      break;
    }
    h = h.powmod(p, rest);
    FpPoly g = FpPoly::gcd(rest, h - xp);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest.divmod(g).first;
      h = h.mod(rest);
    }
  }
  return out;
}

// Cantor-Zassenhaus equal-degree splitting: f squarefree monic, all
// irreducible factors of degree d.
void equal_degree(const FpPoly& f, int d, gmp_randstate_t st, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Int& p = f.modulus();
  FpPoly g = f;
  while (true) {
    FpPoly r = random_poly(st, p, f.degree() - 1);
    if (r.degree() < 1) continue;
    FpPoly split;
    if (p == 2) {
      // trace map T(r) = r + r^2 + r^4 + ... + r^{2^{d-1}}
      FpPoly t = r, acc = r;
      for (int i = 1; i < d; ++i) {
        t = (t * t).mod(f);
        acc = acc + t;
      }
      split = FpPoly::gcd(f, acc);
    } else {
      Int e = (int_pow(p, static_cast<unsigned long>(d)) - 1) / 2;
      FpPoly pw = r.powmod(e, f);
      split = FpPoly::gcd(f, pw - FpPoly::constant(p, 1));
    }
    if (split.degree() > 0 && split.degree() < f.degree()) {
      equal_degree(split, d, st, out);
      equal_degree(f.divmod(split).first, d, st, out);
      return;
    }
  }
}

}  // namespace

std::vector<FpFactor> factor_mod_p(const FpPoly& f) {
  if (f.is_zero()) throw Error(errc::internal, "factor_mod_p(0)");
  std::vector<FpFactor> out;
  if (f.degree() == 0) return out;
  gmp_randstate_t st;
  gmp_randinit_mt(st);
  gmp_randseed_ui(st, seed_of(f));
  for (auto& [part, mult] : squarefree_decompose(f)) {
    for (auto& [dd, deg] : distinct_degree(part)) {
      std::vector<FpPoly> irr;
      equal_degree(dd, deg, st, irr);
      std::sort(irr.begin(), irr.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
          std::size_t k = static_cast<std::size_t>(i);
          if (a[k] != b[k]) return a[k] < b[k];
        }
        return false;
      });
      for (auto& g : irr) out.push_back({g, mult});
    }
  }
  gmp_randclear(st);
  // verify: product of factors equals monic f
  FpPoly check = FpPoly::constant(f.modulus(), 1);
  for (const auto& fac : out)
    for (unsigned long i = 0; i < fac.multiplicity; ++i) check = check * fac.factor;
  if (!(check == f.monic())) throw Error(errc::internal, "mod-p factorization mismatch");
  return out;
}

bool is_squarefree_mod_p(const ZPoly& f, const Int& p) {
  FpPoly fp = FpPoly::from(f, p);
  if (fp.degree() != f.degree()) return false;  // leading coefficient vanished
  FpPoly d = fp.derivative();
  if (d.is_zero()) return false;
  return FpPoly::gcd(fp, d).degree() == 0;
}

// ---------- Hensel ----------

namespace {

struct Mod {
  Int m;
  Int red(const Int& x) const {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
  }
  ZPoly red(const ZPoly& f) const {
    std::vector<Int> c(f.coeffs());
    for (auto& x : c) x = red(x);
    return ZPoly(std::move(c));
  }
};

// One linear lifting step: given f == g*h (mod p^k) with monic g, h and
// Bezout u*g + v*h == 1 (mod p), produce g', h' with f == g'h' (mod p^{k+1}).
void lift_step(const ZPoly& f, ZPoly& g, ZPoly& h, const ZPoly& u, const ZPoly& v,
               const Int& p, const Int& pk) {
  Mod next{pk * p};
  ZPoly e = next.red(f - g * h);
  // e = p^k * c with c defined mod p
  std::vector<Int> cc(e.coeffs());
  for (auto& x : cc) x /= pk;
  Mod modp{p};
  ZPoly c = modp.red(ZPoly(std::move(cc)));
  // corrections: g += p^k * (v*c mod g), h += p^k * (u*c mod h)
  FpPoly cp = FpPoly::from(c, p);
  FpPoly up = FpPoly::from(u, p), vp = FpPoly::from(v, p);
  FpPoly gp = FpPoly::from(g, p), hp = FpPoly::from(h, p);
  ZPoly dg = ((vp * cp).mod(gp)).lift();
  ZPoly dh = ((up * cp).mod(hp)).lift();
  g = next.red(g + dg * pk);
  h = next.red(h + dh * pk);
}

// extended gcd over F_p: u*a + v*b == 1
void bezout_mod_p(const FpPoly& a, const FpPoly& b, FpPoly& u, FpPoly& v) {
  const Int& p = a.modulus();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1 = FpPoly(p, {});
  FpPoly t0 = FpPoly(p, {}), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    FpPoly s2 = s0 - (q * s1), t2 = t0 - (q * t1);
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.degree() != 0) throw Error(errc::internal, "hensel: factors not coprime mod p");
  Int inv;
  mpz_invert(inv.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
  FpPoly scale = FpPoly::constant(p, inv);
  u = s0 * scale;
  v = t0 * scale;
}

// lift the two-factor split f == g*h, both monic, to mod p^e
void lift_pair(const ZPoly& f, ZPoly& g, ZPoly& h, const Int& p, unsigned long e) {
  FpPoly u, v;
  bezout_mod_p(FpPoly::from(g, p), FpPoly::from(h, p), u, v);
  ZPoly uz = u.lift(), vz = v.lift();
  Int pk = p;
  for (unsigned long k = 1; k < e; ++k) {
    lift_step(f, g, h, uz, vz, p, pk);
    pk *= p;
  }
}

}  // namespace

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors,
                               const Int& p, unsigned long e) {
  if (!f.is_monic()) throw Error(errc::internal, "hensel_lift needs monic input");
  if (factors.empty()) throw Error(errc::internal, "hensel_lift: no factors");
  if (factors.size() == 1) {
    Mod pe{int_pow(p, e)};
    return {pe.red(f)};
  }
  // split factors into two halves, lift the pair, recurse
  std::size_t half = factors.size() / 2;
  FpPoly gp = FpPoly::constant(p, 1), hp = FpPoly::constant(p, 1);
  for (std::size_t i = 0; i < factors.size(); ++i)
    (i < half ? gp : hp) = (i < half ? gp : hp) * factors[i];
  ZPoly g = gp.monic().lift(), h = hp.monic().lift();
  lift_pair(f, g, h, p, e);
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  std::vector<ZPoly> out = hensel_lift(g, left, p, e);
  std::vector<ZPoly> rest = hensel_lift(h, right, p, e);
  out.insert(out.end(), rest.begin(), rest.end());
  // verify the congruence f == prod out (mod p^e)
  Mod pe{int_pow(p, e)};
  ZPoly prod = ZPoly::constant(1);
  for (const auto& gi : out) prod = pe.red(prod * gi);
  if (!(pe.red(f) == prod)) throw Error(errc::internal, "hensel lift verification failed");
  return out;
}

}  // namespace tthue
