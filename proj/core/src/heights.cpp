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

#include "tthue/heights.hpp"

#include <algorithm>

#include "tthue/errors.hpp"
#include "tthue/modpoly.hpp"

namespace tthue {

Ball mahler_measure(const ZPoly& g, prec_t prec) {
  if (g.is_zero()) throw Error(errc::zero_element, "Mahler measure of zero polynomial");
  Ball m = Ball::exact(Int(abs(g.lc())), prec);
  if (g.degree() == 0) return Ball::exact(Int(abs(g[0])), prec);
  // peel multiplicity layers: a root of multiplicity k contributes to the
  // first k layers, once each
  QPoly cur(g);
  cur = cur.monic();
  Ball one = Ball::exact(1L, prec);
  int guard = 0;
  while (cur.degree() > 0) {
    QPoly gcd = QPoly::gcd(cur, cur.derivative());
    QPoly layer = cur.divmod(gcd).first;  // distinct roots of this layer
    ZPoly lz = layer.primitive_z();
    for (const CBall& root : isolate_roots(lz, prec)) m = m * Ball::max(one, root.abs());
    cur = gcd;
    if (++guard > 64) throw Error(errc::internal, "mahler: multiplicity runaway");
  }
  return m;
}

HeightResult abs_log_height(const FieldElement& beta, EmbeddingContext& ctx) {
  if (beta.is_zero()) throw Error(errc::zero_element, "height of zero");
  const long d = beta.field()->degree();
  QPoly m = beta.min_poly_rational();
  const long md = m.degree();
  ZPoly mz = m.primitive_z();
  Int an = mz.lc();  // positive leading coefficient of the integer minimal polynomial

  const Embeddings& E = ctx.current();
  prec_t p = E.precision();
  Ball one = Ball::exact(1L, p);
  Ball sum_logs = Ball::zero(p);
  Ball house = Ball::zero(p);
  for (long i = 0; i < d; ++i) {
    std::size_t idx = static_cast<std::size_t>(i);
    std::size_t mate = E.conjugate_index(idx);
    Ball a = (mate < idx) ? E.embed(beta, mate).abs() : E.embed(beta, idx).abs();
    sum_logs = sum_logs + Ball::max(one, a).log();
    house = Ball::max(house, a);
  }
  HeightResult out;
  out.h = Ball::exact(an, p).log() * Ball::exact(Rat(1, static_cast<unsigned long>(md)), p) +
          sum_logs * Ball::exact(Rat(1, static_cast<unsigned long>(d)), p);
  out.mahler = (out.h * Ball::exact(md, p)).exp();
  out.house = house;
  return out;
}

Ball ValuationVector::l1_norm() const {
  if (archimedean.empty()) return Ball::zero(kPrecDefault);
  Ball s = Ball::zero(archimedean.front().precision());
  for (const auto& b : archimedean) s = s + b.abs();
  for (const auto& fp : finite) s = s + fp.log_value.abs();
  return s;
}

Ball ValuationVector::sum() const {
  if (archimedean.empty()) return Ball::zero(kPrecDefault);
  Ball s = Ball::zero(archimedean.front().precision());
  for (const auto& b : archimedean) s = s + b;
  for (const auto& fp : finite) s = s + fp.log_value;
  return s;
}

bool dedekind_index_free(const ZPoly& f, const Int& p) {
  auto factors = factor_mod_p(FpPoly::from(f, p));
  FpPoly gbar = FpPoly::constant(p, 1);
  FpPoly hbar = FpPoly::constant(p, 1);
  for (const auto& fac : factors) {
    gbar = gbar * fac.factor;
    for (unsigned long i = 1; i < fac.multiplicity; ++i) hbar = hbar * fac.factor;
  }
  ZPoly g = gbar.lift(), h = hbar.lift();
  ZPoly prod = g * h;
  ZPoly diff = prod - f;
  // T = (g h - f)/p over Z
  std::vector<Int> tc(diff.coeffs());
  for (auto& c : tc) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    if (r != 0) throw Error(errc::internal, "Dedekind: g h != f mod p");
    c = q;
  }
  FpPoly T = FpPoly::from(ZPoly(std::move(tc)), p);
  FpPoly d1 = FpPoly::gcd(T, gbar);
  FpPoly d2 = FpPoly::gcd(d1, hbar);
  return d2.degree() == 0;
}

std::vector<PrimeSplit> split_prime(const ZPoly& f, const Int& p) {
  std::vector<PrimeSplit> out;
  for (const auto& fac : factor_mod_p(FpPoly::from(f, p))) {
    PrimeSplit s;
    s.g = fac.factor.lift();
    s.e = fac.multiplicity;
    s.f_degree = static_cast<unsigned long>(fac.factor.degree());
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<long> valuations_above(const FieldElement& beta, const Int& p) {
  if (beta.is_zero()) throw Error(errc::zero_element, "valuation of zero");
  const ZPoly& f = beta.field()->poly();
  if (!dedekind_index_free(f, p))
    throw IndexDivisorError("prime divides the index of Z[alpha]", p.get_str());
  auto split = split_prime(f, p);

  Int den = beta.coord_denominator();
  unsigned long vden = (den % p == 0) ? valuation(den, p) : 0;

  // numerator element b = den * beta has integer coordinates
  std::vector<Int> bc;
  bc.reserve(beta.coords().size());
  for (const auto& q : beta.coords()) {
    Rat scaled = q * Rat(den);
    bc.push_back(scaled.get_num());
  }
  ZPoly b(std::move(bc));
  Int nb = f.resultant(b);  // = N(b(alpha)) for monic f
  if (nb == 0) throw Error(errc::internal, "norm of numerator vanished");
  unsigned long vnb = (nb % p == 0) ? valuation(nb, p) : 0;

  std::vector<long> out(split.size(), 0);
  if (vnb > 0) {
    // Hensel-lift the blocks g_i^{e_i} to precision p^m, m = v_p(N(b)) + 1;
    // then v_p(Res(F_i, b)) = f_i v_{P_i}(b) is read off each block exactly
    unsigned long m = vnb + 1;
    std::vector<FpPoly> blocks;
    for (const auto& s : split) {
      FpPoly block = FpPoly::from(s.g, p);
      FpPoly acc = FpPoly::constant(p, 1);
      for (unsigned long i = 0; i < s.e; ++i) acc = acc * block;
      blocks.push_back(acc);
    }
    std::vector<ZPoly> lifted = hensel_lift(f, blocks, p, m);
    Int pm = int_pow(p, m);
    unsigned long total = 0;
    for (std::size_t i = 0; i < split.size(); ++i) {
      Int res = lifted[i].resultant(b) % pm;
      if (res < 0) res += pm;
      if (res == 0)
        throw Error(errc::internal, "local resultant vanished mod p^m; lift precision bug");
      unsigned long v = (res % p == 0) ? valuation(res, p) : 0;
      if (v % split[i].f_degree != 0)
        throw Error(errc::internal, "local valuation not divisible by the residue degree");
      out[i] = static_cast<long>(v / split[i].f_degree);
      total += v;
    }
    if (total != vnb) throw Error(errc::internal, "local valuations do not sum to v_p(N)");
  }
  if (vden > 0)
    for (std::size_t i = 0; i < split.size(); ++i)
      out[i] -= static_cast<long>(split[i].e * vden);
  return out;
}

ValuationVector valuation_vector(const FieldElement& beta, bool include_finite,
                                 EmbeddingContext& ctx, const ManualValuations* manual) {
  if (beta.is_zero()) throw Error(errc::zero_element, "valuation vector of zero");
  const long d = beta.field()->degree();

  ValuationVector out;
  // archimedean places: one per real embedding, one per conjugate pair
  out.archimedean = with_adaptive(ctx, [&](const Embeddings& E)
                                           -> std::optional<std::vector<Ball>> {
    std::vector<Ball> arch;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < E.count(); ++i) {
      std::size_t mate = E.conjugate_index(i);
      if (mate < i) continue;  // lower index represents the pair
      Ball a = E.embed(beta, i).abs();
      if (!a.is_positive()) return std::nullopt;
      unsigned long weight = E.is_real(i) ? 1 : 2;
      arch.push_back(a.log() *
                     Ball::exact(Rat(weight, static_cast<unsigned long>(d)), E.precision()));
      reps.push_back(i);
    }
    out.arch_embedding = reps;
    return arch;
  });

  if (!include_finite) return out;

  // candidate primes: divisors of N(numerator) and of the coordinate denominator
  Int den = beta.coord_denominator();
  std::vector<Int> bc;
  for (const auto& q : beta.coords()) bc.push_back(Rat(q * Rat(den)).get_num());
  ZPoly b(std::move(bc));
  Int nb = abs(beta.field()->poly().resultant(b));
  std::map<Int, unsigned long> primes = factorize(nb);
  if (den > 1)
    for (auto& [q, e] : factorize(den)) primes[q] += e;

  prec_t prec = ctx.precision();
  for (const auto& [p, unused] : primes) {
    (void)unused;
    std::vector<PrimeSplit> split;
    std::vector<long> vals;
    bool from_manual = false;
    try {
      split = split_prime(beta.field()->poly(), p);
      vals = valuations_above(beta, p);
    } catch (const IndexDivisorError&) {
      if (manual) {
        if (auto it = manual->find(p); it != manual->end()) {
          from_manual = true;
          split.clear();
          vals.clear();
          for (const auto& mv : it->second) {
            PrimeSplit s;
            s.g = ZPoly::constant(0);
            s.e = mv.e;
            s.f_degree = mv.f_degree;
            split.push_back(s);
            vals.push_back(mv.valuation);
          }
        } else {
          throw;
        }
      } else {
        throw;
      }
    }
    Ball logp = Ball::exact(p, prec).log();
    for (std::size_t i = 0; i < split.size(); ++i) {
      if (vals[i] == 0) continue;
      FinitePlace fp;
      fp.p = p;
      fp.ideal_poly = split[i].g;
      fp.e = split[i].e;
      fp.f_degree = split[i].f_degree;
      fp.valuation = vals[i];
      fp.log_value = logp *
                     Ball::exact(Rat(-vals[i] * static_cast<long>(split[i].f_degree),
                                     static_cast<unsigned long>(d)),
                                 prec);
      (void)from_manual;
      out.finite.push_back(std::move(fp));
    }
  }
  return out;
}

}  // namespace tthue
