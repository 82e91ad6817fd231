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

#include "tthue/embeddings.hpp"

#include <algorithm>
#include <cmath>

#include "tthue/errors.hpp"

namespace tthue {

namespace {

// ---------- plain mpfr complex (approximation engine only) ----------

struct MC {
  mpfr_t re, im;
  explicit MC(prec_t p) {
    mpfr_init2(re, p);
    mpfr_init2(im, p);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
  }
  MC(const MC& o) {
    mpfr_init2(re, mpfr_get_prec(o.re));
    mpfr_init2(im, mpfr_get_prec(o.im));
    mpfr_set(re, o.re, MPFR_RNDN);
    mpfr_set(im, o.im, MPFR_RNDN);
  }
  MC& operator=(const MC& o) {
    if (this != &o) {
      mpfr_set_prec(re, mpfr_get_prec(o.re));
      mpfr_set_prec(im, mpfr_get_prec(o.im));
      mpfr_set(re, o.re, MPFR_RNDN);
      mpfr_set(im, o.im, MPFR_RNDN);
    }
    return *this;
  }
  ~MC() {
    mpfr_clear(re);
    mpfr_clear(im);
  }
};

void mc_add(MC& r, const MC& a, const MC& b) {
  mpfr_add(r.re, a.re, b.re, MPFR_RNDN);
  mpfr_add(r.im, a.im, b.im, MPFR_RNDN);
}

void mc_sub(MC& r, const MC& a, const MC& b) {
  mpfr_sub(r.re, a.re, b.re, MPFR_RNDN);
  mpfr_sub(r.im, a.im, b.im, MPFR_RNDN);
}

void mc_mul(MC& r, const MC& a, const MC& b, mpfr_t t1, mpfr_t t2) {
  // (a.re b.re - a.im b.im, a.re b.im + a.im b.re); r must not alias a or b
  mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
  mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
  mpfr_sub(r.re, t1, t2, MPFR_RNDN);
  mpfr_mul(t1, a.re, b.im, MPFR_RNDN);
  mpfr_mul(t2, a.im, b.re, MPFR_RNDN);
  mpfr_add(r.im, t1, t2, MPFR_RNDN);
}

void mc_div(MC& r, const MC& a, const MC& b, mpfr_t t1, mpfr_t t2, mpfr_t den) {
  mpfr_mul(t1, b.re, b.re, MPFR_RNDN);
  mpfr_mul(t2, b.im, b.im, MPFR_RNDN);
  mpfr_add(den, t1, t2, MPFR_RNDN);
  mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
  mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
  mpfr_add(t1, t1, t2, MPFR_RNDN);
  mpfr_div(t1, t1, den, MPFR_RNDN);
  mpfr_mul(t2, a.im, b.re, MPFR_RNDN);
  mpfr_t t3;
  mpfr_init2(t3, mpfr_get_prec(r.re));
  mpfr_mul(t3, a.re, b.im, MPFR_RNDN);
  mpfr_sub(t2, t2, t3, MPFR_RNDN);
  mpfr_div(r.im, t2, den, MPFR_RNDN);
  mpfr_set(r.re, t1, MPFR_RNDN);
  mpfr_clear(t3);
}

void mc_abs2(mpfr_t out, const MC& a, mpfr_t t1) {
  mpfr_mul(out, a.re, a.re, MPFR_RNDN);
  mpfr_mul(t1, a.im, a.im, MPFR_RNDN);
  mpfr_add(out, out, t1, MPFR_RNDN);
}

// Horner at an approximate complex point
void mc_eval(MC& out, const std::vector<Int>& coeffs, const MC& z, prec_t p) {
  MC acc(p), tmp(p);
  mpfr_t t1, t2;
  mpfr_init2(t1, p);
  mpfr_init2(t2, p);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    mc_mul(tmp, acc, z, t1, t2);
    mpfr_add_z(tmp.re, tmp.re, it->get_mpz_t(), MPFR_RNDN);
    acc = tmp;
  }
  out = acc;
  mpfr_clear(t1);
  mpfr_clear(t2);
}

// ---------- real root machinery ----------

std::vector<std::pair<Rat, Rat>> sturm_isolate(const ZPoly& f) {
  QPoly fq(f);
  SturmChain chain{fq};
  long total = chain.count_real_roots();
  std::vector<std::pair<Rat, Rat>> done;
  if (total == 0) return done;
  Rat b = cauchy_root_bound(fq);
  std::vector<std::pair<Rat, Rat>> work{{-b, b}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    long n = chain.count_roots(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      done.emplace_back(lo, hi);
      continue;
    }
    Rat mid = (lo + hi) / 2;
    // irreducible f of degree >= 3 has no rational roots, so mid is safe
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(done.begin(), done.end(),
            [](const auto& a, const auto& b2) { return a.first < b2.first; });
  return done;
}

bool meets_radius_contract(const Ball& re, const Ball& im, prec_t p) {
  // radius <= 2^{1-p} (1 + |mid|); use a lower bound on |mid|
  prec_t wp = std::max<prec_t>(re.precision(), 64);
  mpfr_t rad, t, bound;
  mpfr_init2(rad, wp);
  mpfr_init2(t, wp);
  mpfr_init2(bound, wp);
  mpfr_sub(rad, re.hi(), re.lo(), MPFR_RNDU);
  mpfr_sub(t, im.hi(), im.lo(), MPFR_RNDU);
  mpfr_max(rad, rad, t, MPFR_RNDU);
  mpfr_div_2ui(rad, rad, 1, MPFR_RNDU);
  // |mid| >= max(|re lo|, |re hi|, |im lo|, |im hi| ... use component mids)
  mpfr_add(bound, re.lo(), re.hi(), MPFR_RNDZ);
  mpfr_div_2ui(bound, bound, 1, MPFR_RNDZ);
  mpfr_abs(bound, bound, MPFR_RNDZ);
  mpfr_add(t, im.lo(), im.hi(), MPFR_RNDZ);
  mpfr_div_2ui(t, t, 1, MPFR_RNDZ);
  mpfr_abs(t, t, MPFR_RNDZ);
  mpfr_max(bound, bound, t, MPFR_RNDD);
  mpfr_add_ui(bound, bound, 1, MPFR_RNDD);
  mpfr_mul_2si(bound, bound, static_cast<long>(1 - p), MPFR_RNDD);
  bool ok = mpfr_lessequal_p(rad, bound) != 0;
  mpfr_clear(rad);
  mpfr_clear(t);
  mpfr_clear(bound);
  return ok;
}

// Interval Newton refinement of an isolated simple real root.
Ball refine_real_root(const ZPoly& f, const SturmChain& chain, std::pair<Rat, Rat>& isolator,
                      prec_t target) {
  const prec_t wp = target + 64;
  const std::vector<Int>& fc = f.coeffs();
  std::vector<Int> dc = f.derivative().coeffs();
  // pre-bisect with Sturm until interval Newton contracts
  for (int round = 0; round < 4096; ++round) {
    Ball lo = Ball::exact(isolator.first, wp), hi = Ball::exact(isolator.second, wp);
    Ball X = Ball::hull(lo, hi);
    Ball dfx = eval_poly(dc, X);
    if (!dfx.contains_zero()) break;
    Rat mid = (isolator.first + isolator.second) / 2;
    if (chain.count_roots(isolator.first, mid) == 1)
      isolator.second = mid;
    else
      isolator.first = mid;
  }
  Ball X = Ball::hull(Ball::exact(isolator.first, wp), Ball::exact(isolator.second, wp));
  for (int it = 0; it < 20000; ++it) {
    if (meets_radius_contract(X, Ball::zero(wp), target)) return X;
    mpfr_t m;
    mpfr_init2(m, wp);
    mpfr_add(m, X.lo(), X.hi(), MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    Ball mid = Ball::point(m, wp);
    mpfr_clear(m);
    Ball fm = eval_poly(fc, mid);
    Ball dfx = eval_poly(dc, X);
    Ball N = mid - fm / dfx;  // contains the root; dfx certified nonzero here
    X = Ball::intersect(X, N);
  }
  throw Error(errc::precision_exhausted, "real-root refinement failed to converge");
}

// ---------- complex root machinery ----------

struct ComplexCandidate {
  MC z;
  Ball radius;  // certified containment radius (disk around z)
  explicit ComplexCandidate(prec_t p) : z(p), radius(Ball::zero(p)) {}
};

void aberth_iterate(const ZPoly& f, std::vector<MC>& zs, prec_t wp) {
  const std::size_t d = zs.size();
  std::vector<Int> dc = f.derivative().coeffs();
  mpfr_t t1, t2, den, wabs, zabs, eps;
  mpfr_init2(t1, wp);
  mpfr_init2(t2, wp);
  mpfr_init2(den, wp);
  mpfr_init2(wabs, wp);
  mpfr_init2(zabs, wp);
  mpfr_init2(eps, wp);
  mpfr_set_ui_2exp(eps, 1, -(wp * 3 / 4), MPFR_RNDN);
  for (int iter = 0; iter < 500; ++iter) {
    bool moved = false;
    for (std::size_t i = 0; i < d; ++i) {
      MC fz(wp), dfz(wp), newton(wp), sum(wp), diff(wp), inv(wp), corr(wp), one(wp);
      mc_eval(fz, f.coeffs(), zs[i], wp);
      mc_eval(dfz, dc, zs[i], wp);
      mc_abs2(t1, dfz, t2);
      if (mpfr_zero_p(t1)) continue;  // derivative collapsed; other starts will shift z
      mc_div(newton, fz, dfz, t1, t2, den);
      mpfr_set_zero(sum.re, 1);
      mpfr_set_zero(sum.im, 1);
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        mc_sub(diff, zs[i], zs[j]);
        mc_abs2(t1, diff, t2);
        if (mpfr_zero_p(t1)) {
          // collided starting points: nudge
          mpfr_add_ui(zs[i].re, zs[i].re, 1, MPFR_RNDN);
          mc_sub(diff, zs[i], zs[j]);
        }
        MC one_c(wp);
        mpfr_set_ui(one_c.re, 1, MPFR_RNDN);
        mc_div(inv, one_c, diff, t1, t2, den);
        mc_add(sum, sum, inv);
      }
      // w = newton / (1 - newton * sum)
      MC ns(wp);
      mc_mul(ns, newton, sum, t1, t2);
      mpfr_set_ui(one.re, 1, MPFR_RNDN);
      mpfr_set_zero(one.im, 1);
      mc_sub(ns, one, ns);
      mc_abs2(t1, ns, t2);
      if (mpfr_zero_p(t1)) continue;
      mc_div(corr, newton, ns, t1, t2, den);
      mc_sub(zs[i], zs[i], corr);
      mc_abs2(wabs, corr, t2);
      mpfr_sqrt(wabs, wabs, MPFR_RNDN);
      mc_abs2(zabs, zs[i], t2);
      mpfr_sqrt(zabs, zabs, MPFR_RNDN);
      mpfr_add_ui(zabs, zabs, 1, MPFR_RNDN);
      mpfr_mul(zabs, zabs, eps, MPFR_RNDN);
      if (mpfr_greater_p(wabs, zabs)) moved = true;
    }
    if (!moved) break;
  }
  mpfr_clear(t1);
  mpfr_clear(t2);
  mpfr_clear(den);
  mpfr_clear(wabs);
  mpfr_clear(zabs);
  mpfr_clear(eps);
}

// d |f(z)/f'(z)| as a certified upper bound: the disk of that radius around
// z contains at least one root of f.
std::optional<Ball> containment_radius(const ZPoly& f, const MC& z, prec_t wp) {
  CBall Z(Ball::point(z.re, wp), Ball::point(z.im, wp));
  CBall fz = eval_poly(f.coeffs(), Z);
  CBall dfz = eval_poly(f.derivative().coeffs(), Z);
  Ball dabs = dfz.norm_sq();
  if (dabs.contains_zero()) return std::nullopt;
  Ball r = Ball::exact(static_cast<long>(f.degree()), wp) * (fz.norm_sq() / dabs).sqrt();
  return r;
}

struct Entry {
  CBall ball;
  bool real;
};

// Shared isolation core: real entries first (ascending), then complex
// entries in mirrored (upper, lower) pairs.
std::vector<Entry> isolate_entries(const ZPoly& f, int r1, int r2, prec_t p) {
  const int d = f.degree();
  std::vector<Entry> entries;

  // real roots: Sturm isolation + interval Newton
  QPoly fq(f);
  SturmChain chain{fq};
  if (r1 > 0) {
    auto iso = sturm_isolate(f);
    if (static_cast<int>(iso.size()) != r1) throw Error(errc::internal, "real isolation miscount");
    for (auto& box : iso) {
      Ball re = refine_real_root(f, chain, box, p);
      entries.push_back({CBall(re, Ball::zero(p)), true});
    }
  }

  // complex roots: Aberth + disk certification, escalating working precision
  if (r2 > 0) {
    prec_t wp = p + 64;
    // internal overhead may exceed the protocol cap slightly; divergence of
    // the working precision beyond a few escalations is the real failure
    const prec_t wp_cap = 8 * p + 4096;
    bool done = false;
    std::vector<MC> warm;
    while (!done) {
      if (wp > wp_cap) throw Error(errc::precision_exhausted, "complex root isolation");
      std::vector<MC> zs;
      if (warm.size() == static_cast<std::size_t>(d)) {
        for (auto& w : warm) {
          MC z(wp);
          mpfr_set(z.re, w.re, MPFR_RNDN);
          mpfr_set(z.im, w.im, MPFR_RNDN);
          zs.push_back(z);
        }
      } else {
        // starting points on a circle, rotated off the real axis
        double rho = 1.0;
        for (int i = 0; i < d; ++i)
          rho = std::max(rho, std::abs(f[static_cast<std::size_t>(i)].get_d()));
        rho = 1.0 + rho;
        for (int k = 0; k < d; ++k) {
          MC z(wp);
          double th = (2.0 * 3.14159265358979 * (k + 0.3537)) / d;
          mpfr_set_d(z.re, rho * std::cos(th), MPFR_RNDN);
          mpfr_set_d(z.im, rho * std::sin(th), MPFR_RNDN);
          zs.push_back(z);
        }
      }
      aberth_iterate(f, zs, wp);
      // keep approximations definitely off the real axis in the upper half
      // plane; the r1 approximations of real roots carry only a residual
      // imaginary part far below this threshold once converged
      std::vector<MC> upper;
      mpfr_t thresh, zmag, t;
      mpfr_init2(thresh, wp);
      mpfr_init2(zmag, wp);
      mpfr_init2(t, wp);
      for (auto& z : zs) {
        if (mpfr_sgn(z.im) <= 0) continue;
        mpfr_hypot(zmag, z.re, z.im, MPFR_RNDN);
        mpfr_add_ui(zmag, zmag, 1, MPFR_RNDN);
        mpfr_set_ui_2exp(thresh, 1, -(wp / 8), MPFR_RNDN);
        mpfr_mul(thresh, thresh, zmag, MPFR_RNDN);
        if (mpfr_greater_p(z.im, thresh)) upper.push_back(z);
      }
      mpfr_clear(thresh);
      mpfr_clear(zmag);
      mpfr_clear(t);
      if (static_cast<int>(upper.size()) == r2) {
        std::vector<ComplexCandidate> cands;
        bool ok = true;
        for (auto& z : upper) {
          auto rad = containment_radius(f, z, wp);
          if (!rad) {
            ok = false;
            break;
          }
          ComplexCandidate c(wp);
          c.z = z;
          c.radius = *rad;
          cands.push_back(c);
        }
        // disjointness: above the axis, pairwise, and against mirrors
        if (ok) {
          for (auto& c : cands) {
            Ball im = Ball::point(c.z.im, wp);
            if (!im.definitely_gt(c.radius)) {
              ok = false;
              break;
            }
          }
        }
        if (ok) {
          for (std::size_t i = 0; i < cands.size() && ok; ++i)
            for (std::size_t j = i + 1; j < cands.size() && ok; ++j) {
              Ball dre = Ball::point(cands[i].z.re, wp) - Ball::point(cands[j].z.re, wp);
              Ball dim = Ball::point(cands[i].z.im, wp) - Ball::point(cands[j].z.im, wp);
              Ball dist = (dre.pow_int(2) + dim.pow_int(2)).sqrt();
              Ball dim2 = Ball::point(cands[i].z.im, wp) + Ball::point(cands[j].z.im, wp);
              Ball dist2 = (dre.pow_int(2) + dim2.pow_int(2)).sqrt();
              Ball rsum = cands[i].radius + cands[j].radius;
              if (!dist.definitely_gt(rsum) || !dist2.definitely_gt(rsum)) ok = false;
            }
        }
        // radius contract at the target precision
        if (ok) {
          for (auto& c : cands) {
            Ball re = Ball::point(c.z.re, wp) + Ball::symmetric(c.radius);
            Ball im = Ball::point(c.z.im, wp) + Ball::symmetric(c.radius);
            if (!meets_radius_contract(re, im, p)) {
              ok = false;
              break;
            }
          }
        }
        if (ok) {
          for (auto& c : cands) {
            Ball re = Ball::point(c.z.re, wp) + Ball::symmetric(c.radius);
            Ball im = Ball::point(c.z.im, wp) + Ball::symmetric(c.radius);
            // structural conjugate pair: mirrored imaginary enclosure
            entries.push_back({CBall(re, im), false});
            entries.push_back({CBall(re, -im), false});
          }
          done = true;
        }
      }
      if (!done) {
        warm.clear();
        for (auto& z : zs) warm.push_back(z);
        wp *= 2;
      }
    }
  }
  return entries;
}

double ball_mid_double(const Ball& b) {
  mpfr_t m;
  mpfr_init2(m, mpfr_get_prec(b.lo()));
  mpfr_add(m, b.lo(), b.hi(), MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double v = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return v;
}

std::vector<std::size_t> entry_order(const std::vector<Entry>& entries) {
  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    double ra = ball_mid_double(entries[a].ball.re()), rb = ball_mid_double(entries[b].ball.re());
    if (ra != rb) return ra > rb;
    return ball_mid_double(entries[a].ball.im()) < ball_mid_double(entries[b].ball.im());
  });
  return order;
}

}  // namespace

// ---------- Embeddings ----------

CBall Embeddings::embed(const FieldElement& beta, std::size_t i) const {
  if (i >= roots_.size()) throw Error(errc::internal, "embedding index out of range");
  if (!(beta.field()->poly() == field_->poly()))
    throw Error(errc::internal, "element from a different field");
  if (real_[i]) {
    Ball v = eval_poly(beta.coords(), roots_[i].re());
    return {v, Ball::zero(prec_)};
  }
  return eval_poly(beta.coords(), roots_[i]);
}

std::vector<CBall> isolate_roots(const ZPoly& squarefree, prec_t p) {
  if (squarefree.is_zero()) throw Error(errc::internal, "isolate_roots(0)");
  if (squarefree.degree() == 0) return {};
  QPoly fq(squarefree);
  if (QPoly::gcd(fq, fq.derivative()).degree() != 0)
    throw Error(errc::internal, "isolate_roots needs a squarefree polynomial");
  SturmChain chain{fq};
  int r1 = static_cast<int>(chain.count_real_roots());
  int r2 = (squarefree.degree() - r1) / 2;
  auto entries = isolate_entries(squarefree, r1, r2, std::max(p, kPrecMin));
  auto order = entry_order(entries);
  std::vector<CBall> out;
  out.reserve(entries.size());
  for (std::size_t k : order) out.push_back(entries[k].ball);
  return out;
}

Embeddings compute_embeddings(const FieldPtr& K, prec_t p) {
  if (p < kPrecMin) throw Error(errc::validation_error, "precision must be at least 64 bits");
  if (p > kPrecCap) throw Error(errc::precision_exhausted, "requested precision above the cap");
  const ZPoly& f = K->poly();
  const int d = K->degree();
  const int r1 = K->real_embedding_count();
  const int r2 = K->complex_pair_count();

  Embeddings E;
  E.field_ = K;
  E.prec_ = p;

  std::vector<Entry> entries = isolate_entries(f, r1, r2, p);
  auto order = entry_order(entries);
  std::vector<std::size_t> pos(entries.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  E.roots_.reserve(entries.size());
  E.real_.reserve(entries.size());
  E.conj_.assign(entries.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    E.roots_.push_back(entries[order[k]].ball);
    E.real_.push_back(entries[order[k]].real);
  }
  // reals map to themselves; complex entries sit after the r1 real ones in
  // mirrored pairs
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].real) {
      E.conj_[pos[i]] = pos[i];
    } else {
      std::size_t off = i - static_cast<std::size_t>(r1);
      std::size_t mate = (off % 2 == 0) ? i + 1 : i - 1;
      if (mate >= entries.size() || entries[mate].real)
        throw Error(errc::internal, "conjugate pairing bookkeeping");
      E.conj_[pos[i]] = pos[mate];
    }
  }

  // sanity: the product of all root enclosures must contain (-1)^d c_0
  CBall prod(Ball::exact(1L, p), Ball::zero(p));
  for (auto& r : E.roots_) prod = prod * r;
  Rat expect(f[0]);
  if (d % 2 == 1) expect = -expect;
  if (!prod.re().contains(expect) || !prod.im().contains(Rat(0)))
    throw Error(errc::internal, "root product check failed");
  return E;
}

Embeddings refine_embeddings(const Embeddings& E, prec_t p) {
  if (p <= E.precision()) return E;
  Embeddings R = compute_embeddings(E.field(), p);
  // match by overlap with the old enclosures (they are pairwise disjoint)
  if (R.count() != E.count()) throw Error(errc::internal, "refinement count mismatch");
  for (std::size_t i = 0; i < R.count(); ++i) {
    if (!R.root(i).overlaps(E.root(i)))
      throw Error(errc::internal, "refinement did not preserve root order");
    if (R.is_real(i) != E.is_real(i))
      throw Error(errc::internal, "refinement changed a reality flag");
  }
  return R;
}

EmbeddingContext::EmbeddingContext(FieldPtr K, prec_t initial)
    : cur_(std::make_shared<Embeddings>(compute_embeddings(K, std::max(initial, kPrecMin)))),
      peak_(std::max(initial, kPrecMin)) {}

const Embeddings& EmbeddingContext::refine() {
  prec_t next = cur_->precision() * 2;
  if (next > kPrecCap)
    throw Error(errc::precision_exhausted,
                "adaptive precision cap (" + std::to_string(kPrecCap) + " bits) reached");
  cur_ = std::make_shared<Embeddings>(refine_embeddings(*cur_, next));
  peak_ = std::max(peak_, next);
  return *cur_;
}

// ---------- log matrices ----------

std::optional<LogMatrix> try_full_log_matrix(const std::vector<FieldElement>& gammas,
                                             const Embeddings& E) {
  const std::size_t d = E.count(), s = gammas.size();
  for (const auto& g : gammas)
    if (g.is_zero()) throw Error(errc::zero_conjugate, "zero element has no log matrix");
  LogMatrix out;
  out.mat = BallMatrix(d, s, E.precision());
  out.row_embeddings.resize(d);
  out.col_gammas.resize(s);
  for (std::size_t i = 0; i < d; ++i) out.row_embeddings[i] = i;
  for (std::size_t k = 0; k < s; ++k) out.col_gammas[k] = k;
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t mate = E.conjugate_index(i);
      if (mate < i) {
        // conjugate embeddings share the modulus exactly
        out.mat.at(i, k) = out.mat.at(mate, k);
        continue;
      }
      CBall v = E.embed(gammas[k], i);
      Ball a = v.abs();
      if (!a.is_positive()) return std::nullopt;
      out.mat.at(i, k) = a.log();
    }
  }
  return out;
}

LogMatrix full_log_matrix(const std::vector<FieldElement>& gammas, EmbeddingContext& ctx) {
  return with_adaptive(ctx, [&](const Embeddings& E) { return try_full_log_matrix(gammas, E); });
}

std::optional<LogMatrix> try_ratio_log_matrix(const std::vector<FieldElement>& gammas,
                                              const Embeddings& E, std::size_t leave_out,
                                              std::size_t reference) {
  const std::size_t d = E.count();
  if (leave_out == reference || leave_out >= d || reference >= d)
    throw Error(errc::validation_error, "bad embedding indices for ratio matrix");
  auto full = try_full_log_matrix(gammas, E);
  if (!full) return std::nullopt;
  LogMatrix out;
  out.col_gammas = full->col_gammas;
  out.mat = BallMatrix(d - 2, gammas.size(), E.precision());
  std::size_t r = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == leave_out || i == reference) continue;
    out.row_embeddings.push_back(i);
    for (std::size_t k = 0; k < gammas.size(); ++k) {
      if (E.conjugate_index(i) == reference) {
        // |sigma_i(g)| == |sigma_ref(g)| exactly: symbolic zero
        out.mat.at(r, k) = Ball::zero(E.precision());
      } else {
        out.mat.at(r, k) = full->mat.at(i, k) - full->mat.at(reference, k);
      }
    }
    ++r;
  }
  return out;
}

LogMatrix ratio_log_matrix(const std::vector<FieldElement>& gammas, EmbeddingContext& ctx,
                           std::size_t leave_out, std::size_t reference) {
  return with_adaptive(ctx, [&](const Embeddings& E) {
    return try_ratio_log_matrix(gammas, E, leave_out, reference);
  });
}

}  // namespace tthue
