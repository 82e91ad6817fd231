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

#include "tthue/hypotheses.hpp"

#include <algorithm>
#include <set>

#include "tthue/errors.hpp"

namespace tthue {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CertifiedTrue: return "CertifiedTrue";
    case Verdict::CertifiedFalse: return "CertifiedFalse";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

std::optional<unsigned long> root_of_unity_order(const FieldElement& u) {
  if (u.is_zero()) return std::nullopt;
  FieldElement one = FieldElement::one(u.field());
  for (unsigned long m : torsion_order_candidates(static_cast<unsigned long>(u.field()->degree()))) {
    if (u.pow(m) == one) {
      // minimal order
      for (unsigned long k = 1; k < m; ++k)
        if (m % k == 0 && u.pow(k) == one) return k;
      return m;
    }
  }
  return std::nullopt;
}

namespace {

std::string relation_text(const std::vector<Int>& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ", ";
    s += k[i].get_str();
  }
  return s + ")";
}

// rows of normalized valuation vectors over a common place set
struct ValuationTable {
  std::vector<std::vector<Ball>> columns;  // one column per element
  std::size_t rows = 0;
};

ValuationTable valuation_table(const std::vector<FieldElement>& els, EmbeddingContext& ctx,
                               const ManualValuations* manual) {
  ValuationTable t;
  std::vector<ValuationVector> vecs;
  vecs.reserve(els.size());
  for (const auto& e : els) vecs.push_back(valuation_vector(e, true, ctx, manual));
  // union of finite places, keyed by (p, ideal polynomial text)
  std::set<std::pair<std::string, std::string>> finite_keys;
  for (const auto& v : vecs)
    for (const auto& fp : v.finite)
      finite_keys.insert({fp.p.get_str(), fp.ideal_poly.to_string()});
  prec_t prec = ctx.precision();
  std::size_t arch = vecs.empty() ? 0 : vecs[0].archimedean.size();
  t.rows = arch + finite_keys.size();
  for (const auto& v : vecs) {
    std::vector<Ball> col;
    col.reserve(t.rows);
    for (const auto& b : v.archimedean) col.push_back(b);
    for (const auto& key : finite_keys) {
      Ball entry = Ball::zero(prec);
      for (const auto& fp : v.finite)
        if (fp.p.get_str() == key.first && fp.ideal_poly.to_string() == key.second)
          entry = fp.log_value;
      col.push_back(entry);
    }
    t.columns.push_back(std::move(col));
  }
  return t;
}

}  // namespace

std::optional<std::vector<Int>> find_multiplicative_relation(
    const std::vector<FieldElement>& els, EmbeddingContext& ctx, const ManualValuations* manual,
    const Int& height_bound) {
  const std::size_t s = els.size();
  if (s == 0) return std::nullopt;
  FieldElement one = FieldElement::one(els[0].field());

  // single-element shortcut: a torsion element is its own relation
  for (std::size_t i = 0; i < s; ++i) {
    if (root_of_unity_order(els[i])) {
      std::vector<Int> k(s, Int(0));
      k[i] = 1;
      return k;
    }
  }

  ValuationTable table = valuation_table(els, ctx, manual);
  // scaled integer images of the columns
  const long scale_bits = 192;
  std::vector<std::vector<Int>> basis(s, std::vector<Int>(s + table.rows, Int(0)));
  mpfr_t mid, scaled;
  mpfr_init2(mid, 256);
  mpfr_init2(scaled, 256);
  for (std::size_t i = 0; i < s; ++i) {
    basis[i][i] = 1;
    for (std::size_t r = 0; r < table.rows; ++r) {
      const Ball& b = table.columns[i][r];
      mpfr_add(mid, b.lo(), b.hi(), MPFR_RNDN);
      mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
      mpfr_mul_2ui(scaled, mid, scale_bits, MPFR_RNDN);
      Int z;
      mpfr_get_z(z.get_mpz_t(), scaled, MPFR_RNDN);
      basis[i][s + r] = z;
    }
  }
  mpfr_clear(mid);
  mpfr_clear(scaled);
  lll_reduce(basis);
  for (const auto& row : basis) {
    std::vector<Int> k(row.begin(), row.begin() + static_cast<long>(s));
    bool nonzero = false, bounded = true;
    for (const auto& x : k) {
      if (x != 0) nonzero = true;
      if (abs(x) > height_bound) bounded = false;
    }
    if (!nonzero || !bounded) continue;
    FieldElement u = one;
    for (std::size_t i = 0; i < s; ++i) {
      long e = static_cast<long>(k[i].get_si());
      u = u * els[i].pow_signed(e);
    }
    if (root_of_unity_order(u)) return k;
  }
  return std::nullopt;
}

TriState check_mult_independence(const std::vector<FieldElement>& gammas, EmbeddingContext& ctx,
                                 const ManualValuations* manual) {
  if (gammas.empty()) throw Error(errc::validation_error, "need at least one gamma");
  for (const auto& g : gammas)
    if (g.is_zero()) throw Error(errc::zero_element, "zero gamma");

  TriState out;
  for (int attempt = 0;; ++attempt) {
    // certify full column rank of the valuation matrix
    ValuationTable table = valuation_table(gammas, ctx, manual);
    BallMatrix m(table.rows, gammas.size(), ctx.precision());
    for (std::size_t i = 0; i < table.rows; ++i)
      for (std::size_t j = 0; j < gammas.size(); ++j) m.at(i, j) = table.columns[j][i];
    if (m.certifies_full_column_rank()) {
      out.verdict = Verdict::CertifiedTrue;
      out.certificate = "valuation matrix has certified full column rank";
      return out;
    }
    // look for an exact relation
    if (auto rel = find_multiplicative_relation(gammas, ctx, manual)) {
      out.verdict = Verdict::CertifiedFalse;
      out.relation = *rel;
      out.certificate = "verified relation: product of gamma_i^k_i with k = " +
                        relation_text(*rel) + " is a root of unity";
      return out;
    }
    if (ctx.precision() * 2 > kPrecCap) {
      out.verdict = Verdict::Undecided;
      out.certificate = "precision cap reached at " + std::to_string(ctx.precision()) + " bits";
      return out;
    }
    ctx.refine();
  }
}

namespace {

// least m <= d with gamma^m rational: then all conjugate moduli of gamma are
// equal and its ratio column vanishes identically
std::optional<unsigned long> rational_power(const FieldElement& g) {
  FieldElement acc = g;
  for (unsigned long m = 1; m <= static_cast<unsigned long>(g.field()->degree()); ++m) {
    if (acc.is_rational()) return m;
    acc = acc * g;
  }
  return std::nullopt;
}

TriState condition_star_one(const std::vector<FieldElement>& gammas, const Embeddings& E,
                            std::size_t leave_out, std::size_t reference) {
  const std::size_t s = gammas.size();
  TriState out;
  auto ratio = try_ratio_log_matrix(gammas, E, leave_out, reference);
  if (!ratio) {
    out.verdict = Verdict::Undecided;
    out.certificate = "modulus enclosure touches zero";
    return out;
  }
  // structural reduction: drop exact-zero rows (embedding conjugate to the
  // reference) and duplicates (conjugate pairs inside the row set)
  std::vector<std::size_t> keep;
  std::vector<std::string> dropped;
  for (std::size_t r = 0; r < ratio->mat.rows(); ++r) {
    std::size_t emb = ratio->row_embeddings[r];
    if (E.conjugate_index(emb) == reference) {
      dropped.push_back("row " + std::to_string(emb) + " is the conjugate of the reference " +
                        std::to_string(reference));
      continue;
    }
    std::size_t mate = E.conjugate_index(emb);
    bool duplicate = false;
    for (std::size_t kept : keep)
      if (ratio->row_embeddings[kept] == mate) {
        duplicate = true;
        dropped.push_back("rows " + std::to_string(mate) + " and " + std::to_string(emb) +
                          " are a conjugate pair with equal moduli");
      }
    if (!duplicate) keep.push_back(r);
  }
  if (keep.size() < s) {
    out.verdict = Verdict::CertifiedFalse;
    out.certificate = "fewer than s independent rows after symbolic reduction: ";
    for (std::size_t i = 0; i < dropped.size(); ++i)
      out.certificate += (i ? "; " : "") + dropped[i];
    return out;
  }
  // exact column certificate: gamma^m in Q makes every conjugate modulus of
  // gamma equal, so its ratio column vanishes identically
  for (std::size_t k = 0; k < s; ++k) {
    if (auto m = rational_power(gammas[k])) {
      out.verdict = Verdict::CertifiedFalse;
      out.certificate = "gamma_" + std::to_string(k) + "^" + std::to_string(*m) +
                        " is rational, so all its conjugate moduli coincide and column " +
                        std::to_string(k) + " vanishes";
      return out;
    }
  }
  BallMatrix reduced(keep.size(), s, E.precision());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < s; ++j) reduced.at(i, j) = ratio->mat.at(keep[i], j);
  if (reduced.certifies_full_column_rank()) {
    out.verdict = Verdict::CertifiedTrue;
    out.certificate = "certified full column rank";
    return out;
  }
  out.verdict = Verdict::Undecided;
  out.certificate = "rank not certified at this precision";
  return out;
}

}  // namespace

TriState check_condition_star_subset(const std::vector<FieldElement>& gammas,
                                     EmbeddingContext& ctx, std::size_t leave_out,
                                     std::size_t reference) {
  for (;;) {
    TriState t = condition_star_one(gammas, ctx.current(), leave_out, reference);
    if (t.verdict != Verdict::Undecided) return t;
    if (ctx.precision() * 2 > kPrecCap) return t;
    ctx.refine();
  }
}

ConditionStarResult check_condition_star(const std::vector<FieldElement>& gammas,
                                         EmbeddingContext& ctx) {
  if (gammas.empty()) throw Error(errc::validation_error, "need at least one gamma");
  const std::size_t d = static_cast<std::size_t>(gammas[0].field()->degree());
  if (gammas.size() > d - 2)
    throw Error(errc::s_too_large, "condition (*) requires s <= d - 2, got s = " +
                                       std::to_string(gammas.size()));
  ConditionStarResult out;
  out.per_subset.resize(d);
  for (std::size_t leave_out = 0; leave_out < d; ++leave_out) {
    // reference: the highest remaining embedding index
    std::size_t reference = d - 1;
    if (reference == leave_out) --reference;
    out.per_subset[leave_out] = check_condition_star_subset(gammas, ctx, leave_out, reference);
  }
  bool any_false = false, any_undecided = false;
  for (const auto& t : out.per_subset) {
    if (t.verdict == Verdict::CertifiedFalse) any_false = true;
    if (t.verdict == Verdict::Undecided) any_undecided = true;
  }
  if (any_false) {
    out.overall.verdict = Verdict::CertifiedFalse;
    for (std::size_t i = 0; i < d; ++i)
      if (out.per_subset[i].verdict == Verdict::CertifiedFalse) {
        out.overall.certificate =
            "subset leaving out embedding " + std::to_string(i) + ": " +
            out.per_subset[i].certificate;
        break;
      }
  } else if (any_undecided) {
    out.overall.verdict = Verdict::Undecided;
    out.overall.certificate = "some subset undecided at the precision cap";
  } else {
    out.overall.verdict = Verdict::CertifiedTrue;
    out.overall.certificate = "all " + std::to_string(d) + " leave-one-out subsets certified";
  }
  return out;
}

bool check_q_linear_independence(const std::vector<FieldElement>& gammas) {
  if (gammas.empty()) return true;
  QMatrix m;
  for (const auto& g : gammas) m.push_back(g.coords());
  return exact_rank(std::move(m)) == gammas.size();
}

// ---------- torsion ----------

namespace {

std::optional<Rat> rational_in_ball(const Ball& b, const Int& max_den) {
  // continued-fraction walk from the midpoint; the first convergent with
  // denominator <= max_den lying inside the enclosure wins
  mpfr_t mid;
  mpfr_init2(mid, 256);
  mpfr_add(mid, b.lo(), b.hi(), MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, mid);
  Rat x(q);
  mpq_clear(q);
  mpfr_clear(mid);

  // convergents of x
  Rat cur = x;
  Int p0(1), q0(0), p1, q1;
  // a0 = floor(x)
  Int a;
  mpz_fdiv_q(a.get_mpz_t(), cur.get_num().get_mpz_t(), cur.get_den().get_mpz_t());
  p1 = a;
  q1 = 1;
  for (int it = 0; it < 128; ++it) {
    Rat cand(p1, q1);
    cand.canonicalize();
    if (cand.get_den() <= max_den && b.contains(cand)) return cand;
    Rat frac = cur - Rat(a);
    if (frac == 0) break;
    cur = 1 / frac;
    mpz_fdiv_q(a.get_mpz_t(), cur.get_num().get_mpz_t(), cur.get_den().get_mpz_t());
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (q1 > max_den * max_den) break;
  }
  return std::nullopt;
}

// search for an element of exact order m in a totally complex field
bool find_torsion_of_order(const FieldPtr& K, EmbeddingContext& ctx, unsigned long m) {
  const std::size_t d = static_cast<std::size_t>(K->degree());
  Int dmax;
  {
    Int disc = abs(K->poly_discriminant());
    mpz_sqrt(dmax.get_mpz_t(), disc.get_mpz_t());
    dmax += 1;
  }
  ZPoly phi = ZPoly::cyclotomic(m);
  const std::size_t phim = static_cast<std::size_t>(phi.degree());
  FieldElement alpha = FieldElement::generator(K);
  FieldElement one = FieldElement::one(K);

  for (int rounds = 0; rounds < 6; ++rounds) {
    const Embeddings& E = ctx.current();
    prec_t prec = E.precision();
    std::vector<CBall> targets = isolate_roots(phi, prec);
    // pair representatives (lower index of each conjugate pair)
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < d; ++i)
      if (E.conjugate_index(i) > i) reps.push_back(i);
    if (reps.size() * 2 != d) throw Error(errc::internal, "field is not totally complex");

    // powers of alpha at the representative embeddings
    std::vector<std::vector<CBall>> pw(reps.size());
    for (std::size_t r = 0; r < reps.size(); ++r)
      for (std::size_t j = 0; j < d; ++j)
        pw[r].push_back(E.embed(alpha.pow(static_cast<unsigned long>(j)), reps[r]));

    std::vector<std::size_t> choice(reps.size(), 0);
    bool all_branches_decided = true;
    for (;;) {
      // build and solve the 2 r2 x d real system
      BallMatrix A(d, d, prec);
      std::vector<Ball> rhs;
      for (std::size_t r = 0; r < reps.size(); ++r) {
        for (std::size_t j = 0; j < d; ++j) {
          A.at(2 * r, j) = pw[r][j].re();
          A.at(2 * r + 1, j) = pw[r][j].im();
        }
        rhs.push_back(targets[choice[r]].re());
        rhs.push_back(targets[choice[r]].im());
      }
      auto sol = A.solve(rhs);
      if (sol) {
        bool windows_ok = true;
        std::vector<Rat> coords;
        for (const auto& cb : *sol) {
          // unambiguous reconstruction window: width < 1 / (2 dmax^2)
          mpfr_t w;
          mpfr_init2(w, 128);
          mpfr_sub(w, cb.hi(), cb.lo(), MPFR_RNDU);
          Rat limit = Rat(1) / Rat(2 * dmax * dmax);
          bool narrow = mpfr_cmp_q(w, limit.get_mpq_t()) < 0;
          mpfr_clear(w);
          if (!narrow) {
            windows_ok = false;
            break;
          }
          auto q = rational_in_ball(cb, dmax);
          if (!q) {
            coords.clear();
            break;
          }
          coords.push_back(*q);
        }
        if (!windows_ok) {
          all_branches_decided = false;
        } else if (coords.size() == d) {
          FieldElement zeta(K, coords);
          if (zeta.pow(m) == one) {
            bool primitive = true;
            for (unsigned long k = 1; k < m && primitive; ++k)
              if (m % k == 0 && zeta.pow(k) == one) primitive = false;
            if (primitive) return true;
          }
        }
      } else {
        all_branches_decided = false;
      }
      // next assignment
      std::size_t pos = 0;
      while (pos < choice.size()) {
        if (++choice[pos] < phim) break;
        choice[pos] = 0;
        ++pos;
      }
      if (pos == choice.size()) break;
    }
    if (all_branches_decided) return false;  // every branch refuted exactly
    if (ctx.precision() * 2 > kPrecCap) break;
    ctx.refine();
  }
  throw Error(errc::precision_exhausted, "torsion search for order " + std::to_string(m));
}

}  // namespace

unsigned long torsion_order(const FieldPtr& K, EmbeddingContext& ctx) {
  if (K->real_embedding_count() > 0) return 2;  // a real embedding admits only +-1
  unsigned long w = 2;
  for (unsigned long m : torsion_order_candidates(static_cast<unsigned long>(K->degree()))) {
    if (m <= 2) continue;
    if (find_torsion_of_order(K, ctx, m)) w = std::max(w, m);
  }
  return w;
}

UnitSystem verify_unit_system(const std::vector<FieldElement>& etas, const FieldPtr& K,
                              EmbeddingContext& ctx) {
  const int r = K->unit_rank();
  if (static_cast<int>(etas.size()) != r)
    throw Error(errc::validation_error, "expected exactly " + std::to_string(r) +
                                            " units, got " + std::to_string(etas.size()));
  for (std::size_t i = 0; i < etas.size(); ++i) {
    if (!etas[i].is_algebraic_integer())
      throw NotAUnitError("element is not an algebraic integer", i);
    Rat n = etas[i].norm();
    if (!(n == 1 || n == -1))
      throw NotAUnitError("norm is " + n.get_str() + ", not a unit", i);
  }

  UnitSystem out;
  out.units = etas;

  // archimedean places in embedding order
  for (;;) {
    const Embeddings& E = ctx.current();
    out.place_embeddings.clear();
    out.place_weights.clear();
    for (std::size_t i = 0; i < E.count(); ++i) {
      if (E.conjugate_index(i) >= i) {
        out.place_embeddings.push_back(i);
        out.place_weights.push_back(E.is_real(i) ? 1 : 2);
      }
    }
    if (static_cast<int>(out.place_embeddings.size()) != r + 1)
      throw Error(errc::internal, "place count mismatch");
    auto logmat = try_full_log_matrix(etas, E);
    if (!logmat) {
      ctx.refine();
      continue;
    }
    BallMatrix H(static_cast<std::size_t>(r), static_cast<std::size_t>(r), E.precision());
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        H.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            logmat->mat.at(out.place_embeddings[static_cast<std::size_t>(i)],
                           static_cast<std::size_t>(j));
    auto det = H.det();
    if (det && !det->contains_zero()) {
      out.H = H;
      Ball reg = det->abs();
      for (int i = 0; i < r; ++i)
        reg = reg * Ball::exact(static_cast<long>(out.place_weights[static_cast<std::size_t>(i)]),
                                E.precision());
      out.regulator = reg;
      break;
    }
    // try to exhibit an exact dependency before escalating
    if (auto rel = find_multiplicative_relation(etas, ctx)) {
      throw Error(errc::rank_deficient,
                  "supplied units satisfy the exact relation k = " + relation_text(*rel));
    }
    if (ctx.precision() * 2 > kPrecCap)
      throw Error(errc::precision_exhausted, "unit log matrix rank undecided at the cap");
    ctx.refine();
  }

  out.torsion_order = torsion_order(K, ctx);
  return out;
}

}  // namespace tthue
