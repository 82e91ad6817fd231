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

#include "tthue/proof_analysis.hpp"

#include <algorithm>

#include "tthue/errors.hpp"

namespace tthue {

const char* case_name(CaseTag c) {
  switch (c) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::SmallT: return "SmallT";
  }
  return "?";
}

const char* subcase_name(VanishSubcase s) {
  switch (s) {
    case VanishSubcase::None: return "None";
    case VanishSubcase::AjBj: return "AjBj";
    case VanishSubcase::AkBl: return "AkBl";
    case VanishSubcase::AkBj: return "AkBj";
    case VanishSubcase::AjBl: return "AjBl";
  }
  return "?";
}

namespace {

FieldElement gamma_power(const std::vector<FieldElement>& gammas,
                         const std::vector<unsigned long>& exps) {
  FieldElement gt = FieldElement::one(gammas.at(0).field());
  for (std::size_t k = 0; k < gammas.size(); ++k) gt = gt * gammas[k].pow(exps.at(k));
  return gt;
}

FieldElement solution_element(const Int& x, const Int& y, const FieldElement& gt) {
  FieldElement xe = FieldElement::rational(gt.field(), Rat(x));
  FieldElement ye = FieldElement::rational(gt.field(), Rat(y));
  return xe - gt * ye;
}

// indices whose |beta| enclosure could still be the minimum
std::vector<std::size_t> minimal_candidates(const std::vector<Ball>& mods) {
  Ball min_hi = mods[0];
  for (const auto& m : mods) min_hi = Ball::min(min_hi, m);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    mpfr_t lo;
    mpfr_init2(lo, mods[i].precision());
    mpfr_set(lo, mods[i].lo(), MPFR_RNDD);
    if (mpfr_lessequal_p(lo, min_hi.hi())) out.push_back(i);
    mpfr_clear(lo);
  }
  return out;
}

}  // namespace

std::size_t classify_type(const Int& x, const Int& y, const std::vector<unsigned long>& exps,
                          const std::vector<FieldElement>& gammas, EmbeddingContext& ctx,
                          bool* tie_broken) {
  FieldElement gt = gamma_power(gammas, exps);
  FieldElement beta = solution_element(x, y, gt);
  Rat n = beta.norm();
  if (!(n == 1 || n == -1))
    throw Error(errc::validation_error, "not a solution: |N(x - gamma(t) y)| = " + Rat(abs(n)).get_str());
  if (tie_broken) *tie_broken = false;
  for (int attempt = 0;; ++attempt) {
    const Embeddings& E = ctx.current();
    std::vector<Ball> mods;
    for (std::size_t i = 0; i < E.count(); ++i) mods.push_back(E.embed(beta, i).abs());
    auto cand = minimal_candidates(mods);
    if (cand.size() == 1) return cand[0];
    // one escalation, then lowest index
    if (attempt >= 1) {
      if (tie_broken) *tie_broken = true;
      return cand[0];
    }
    ctx.refine();
  }
}

void classify_case(SolutionDiagnostics& diag, const Ball& kappa, unsigned long t0,
                   EmbeddingContext& ctx) {
  unsigned long t = 0;
  for (auto e : diag.exps) t = std::max(t, e);
  if (t < t0) {
    diag.case_tag = CaseTag::SmallT;
    return;
  }
  const std::size_t d = diag.sigmas.size();
  const std::size_t j = diag.type_embedding;
  prec_t prec = ctx.precision();
  Ball logt = Ball::exact(static_cast<long>(t), prec).log();
  Ball threshold = kappa * logt;

  // |log|sigma_i / sigma_j|| >= kappa log t, certified
  std::vector<std::size_t> fulfilling;
  Ball aj = diag.sigmas[j].abs();
  for (std::size_t i = 0; i < d; ++i) {
    if (i == j) continue;
    Ball ratio = (diag.sigmas[i].abs().log() - aj.log()).abs();
    if (ratio.definitely_ge(threshold)) fulfilling.push_back(i);
  }
  if (fulfilling.size() < 2) {
    diag.case_tag = CaseTag::Case2;
    return;
  }
  diag.case_tag = CaseTag::Case1;

  // modulus ranks (descending), ties to the lower embedding index
  std::vector<std::size_t> rank(d);
  for (std::size_t i = 0; i < d; ++i) rank[i] = i;
  std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
    if (diag.sigmas[a].abs().definitely_gt(diag.sigmas[b].abs())) return true;
    return false;
  });
  std::size_t top = rank[0], bottom = rank[d - 1];

  auto smallest_fulfilling_other = [&](std::size_t not_this) {
    for (std::size_t i : fulfilling)
      if (i != not_this) return i;
    return fulfilling[0];
  };

  if (j == top) {
    diag.k = fulfilling[0];
    diag.l = smallest_fulfilling_other(diag.k);
  } else if (j == bottom) {
    // the largest conjugate always fulfils once any index does
    diag.k = top;
    diag.l = smallest_fulfilling_other(top);
  } else {
    // middle type: split on |sigma_j| vs |sigma_top|^{1/2}
    Ball half_power = diag.sigmas[top].abs().sqrt();
    if (diag.sigmas[j].abs().definitely_ge(half_power)) {
      diag.k = bottom;
      diag.l = smallest_fulfilling_other(bottom);
    } else {
      diag.k = top;
      diag.l = smallest_fulfilling_other(top);
    }
  }
}

SiegelQuantities siegel_quantities(const SolutionDiagnostics& diag, std::size_t j, std::size_t k,
                                   std::size_t l, EmbeddingContext& ctx) {
  (void)ctx;
  if (j == k || k == l || j == l)
    throw Error(errc::degenerate_conjugates, "indices must be pairwise distinct");
  const CBall &bj = diag.betas[j], &bk = diag.betas[k], &bl = diag.betas[l];
  const CBall &sj = diag.sigmas[j], &sk = diag.sigmas[k], &sl = diag.sigmas[l];
  CBall djl = sj - sl;
  CBall djk = sj - sk;
  if (djl.norm_sq().contains_zero() || djk.norm_sq().contains_zero() ||
      bk.norm_sq().contains_zero())
    throw Error(errc::degenerate_conjugates,
                "conjugate differences not separated from zero at this precision");
  SiegelQuantities out;
  out.L = (bj / bk) * ((sk - sl) / djl);
  out.Lp = (bl / bk) * (djk / djl);
  out.residual = bj * (sk - sl) + bl * djk + bk * (sl - sj);
  return out;
}

UnitDecomposition unit_decompose(const FieldElement& beta, const UnitSystem& units,
                                 EmbeddingContext& ctx) {
  Rat n = beta.norm();
  if (!(n == 1 || n == -1))
    throw NotAUnitError("norm is " + n.get_str(), 0);
  const std::size_t r = units.units.size();

  for (int attempt = 0; attempt < 8; ++attempt) {
    const Embeddings& E = ctx.current();
    prec_t prec = E.precision();
    // rebuild H and the right side at the current precision
    BallMatrix H(r, r, prec);
    std::vector<Ball> rhs;
    bool ok = true;
    Ball maxlog = Ball::zero(prec);
    for (std::size_t i = 0; i < r && ok; ++i) {
      std::size_t emb = units.place_embeddings[i];
      for (std::size_t jj = 0; jj < r; ++jj) {
        Ball a = E.embed(units.units[jj], emb).abs();
        if (!a.is_positive()) {
          ok = false;
          break;
        }
        H.at(i, jj) = a.log();
      }
      Ball b = E.embed(beta, emb).abs();
      if (!b.is_positive()) {
        ok = false;
        break;
      }
      rhs.push_back(b.log());
      maxlog = Ball::max(maxlog, b.log().abs());
    }
    if (ok) {
      auto sol = H.solve(rhs);
      if (sol) {
        std::vector<Int> b(r);
        for (std::size_t i = 0; i < r; ++i) {
          mpfr_t mid;
          mpfr_init2(mid, prec);
          mpfr_add(mid, (*sol)[i].lo(), (*sol)[i].hi(), MPFR_RNDN);
          mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
          mpfr_round(mid, mid);
          mpfr_get_z(b[i].get_mpz_t(), mid, MPFR_RNDN);
          mpfr_clear(mid);
        }
        // exact verification: beta * prod eta^{-b} must be torsion
        FieldElement residue = beta;
        for (std::size_t i = 0; i < r; ++i)
          residue = residue * units.units[i].pow_signed(-b[i].get_si());
        if (root_of_unity_order(residue)) {
          return UnitDecomposition{std::move(b), residue, true, maxlog};
        }
      }
    }
    if (ctx.precision() * 2 > kPrecCap) break;
    ctx.refine();
  }
  throw Error(errc::rounding_failed,
              "no integer exponent vector passed exact verification for the decomposition");
}

namespace {

// Is the linear functional `coeffs` over the log variables log|sigma_e(w_m)|
// forced to vanish by the structural relations (conjugate-pair equalities
// and the product formula of unit elements)? Exact rational linear algebra.
bool forced_zero_by_structure(const std::vector<std::vector<Rat>>& coeffs,
                              const std::vector<bool>& is_unit, const Embeddings& E) {
  const std::size_t d = E.count(), m = coeffs.size();
  const std::size_t vars = d * m;
  QMatrix relations;
  for (std::size_t w = 0; w < m; ++w) {
    for (std::size_t e = 0; e < d; ++e) {
      std::size_t mate = E.conjugate_index(e);
      if (mate > e) {
        std::vector<Rat> row(vars, Rat(0));
        row[w * d + e] = 1;
        row[w * d + mate] = -1;
        relations.push_back(std::move(row));
      }
    }
    if (is_unit[w]) {
      std::vector<Rat> row(vars, Rat(0));
      for (std::size_t e = 0; e < d; ++e) row[w * d + e] = 1;
      relations.push_back(std::move(row));
    }
  }
  std::vector<Rat> target(vars, Rat(0));
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t e = 0; e < d; ++e) target[w * d + e] = coeffs[w][e];
  // target in rowspan(relations)?
  std::size_t base = exact_rank(relations);
  relations.push_back(target);
  return exact_rank(relations) == base;
}

}  // namespace

void lambda_form(SolutionDiagnostics& diag, const UnitSystem& units,
                 const std::vector<FieldElement>& gammas, EmbeddingContext& ctx) {
  if (diag.case_tag != CaseTag::Case1)
    throw Error(errc::preceding_stage_missing, "Lambda is a Case-1 quantity");
  if (!diag.decomposition || !diag.decomposition->verified_exact)
    throw Error(errc::preceding_stage_missing, "unit decomposition missing");
  const std::size_t j = diag.type_embedding, k = diag.k, l = diag.l;

  // A carries the larger of |sigma_j|, |sigma_k|; B the larger of
  // |sigma_j|, |sigma_l|; ties resolve to j
  Ball aj = diag.sigmas[j].abs(), ak = diag.sigmas[k].abs(), al = diag.sigmas[l].abs();
  diag.A = ak.definitely_gt(aj) ? k : j;
  diag.B = al.definitely_gt(aj) ? l : j;

  const Embeddings& E = ctx.current();
  prec_t prec = E.precision();
  Ball sum = Ball::zero(prec);
  const auto& b = diag.decomposition->exponents;
  diag.lambda_unit_coeffs = b;
  for (std::size_t i = 0; i < b.size(); ++i) {
    Ball diff = E.embed(units.units[i], l).abs().log() - E.embed(units.units[i], k).abs().log();
    sum = sum + Ball::exact(b[i], prec) * diff;
  }
  for (std::size_t g = 0; g < gammas.size(); ++g) {
    Ball diff = E.embed(gammas[g], diag.A).abs().log() - E.embed(gammas[g], diag.B).abs().log();
    sum = sum + Ball::exact(Int(static_cast<long>(diag.exps[g])), prec) * diff;
  }
  diag.lambda = sum;

  if (sum.contains_zero()) {
    // exact vanishing test on the structural relation lattice
    const std::size_t d = E.count();
    std::vector<std::vector<Rat>> coeffs;
    std::vector<bool> is_unit;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::vector<Rat> row(d, Rat(0));
      row[l] += Rat(b[i]);
      row[k] -= Rat(b[i]);
      coeffs.push_back(std::move(row));
      is_unit.push_back(true);
    }
    for (std::size_t g = 0; g < gammas.size(); ++g) {
      std::vector<Rat> row(d, Rat(0));
      row[diag.A] += Rat(static_cast<long>(diag.exps[g]));
      row[diag.B] -= Rat(static_cast<long>(diag.exps[g]));
      coeffs.push_back(std::move(row));
      Rat n = gammas[g].norm();
      is_unit.push_back(n == 1 || n == -1);
    }
    if (forced_zero_by_structure(coeffs, is_unit, E)) {
      diag.lambda_exactly_zero = true;
      if (diag.A == j && diag.B == j) diag.subcase = VanishSubcase::AjBj;
      else if (diag.A == k && diag.B == l) diag.subcase = VanishSubcase::AkBl;
      else if (diag.A == k && diag.B == j) diag.subcase = VanishSubcase::AkBj;
      else diag.subcase = VanishSubcase::AjBl;
    }
  }
}

SolutionDiagnostics diagnose(const Int& x, const Int& y, const std::vector<unsigned long>& exps,
                             const std::vector<FieldElement>& gammas, const UnitSystem& units,
                             EmbeddingContext& ctx, const Ball& kappa, unsigned long t0) {
  SolutionDiagnostics diag;
  diag.x = x;
  diag.y = y;
  diag.exps = exps;

  FieldElement gt = gamma_power(gammas, exps);
  FieldElement beta = solution_element(x, y, gt);
  diag.type_embedding = classify_type(x, y, exps, gammas, ctx, &diag.type_tie_broken);

  const Embeddings& E = ctx.current();
  for (std::size_t i = 0; i < E.count(); ++i) {
    diag.sigmas.push_back(E.embed(gt, i));
    diag.betas.push_back(E.embed(beta, i));
  }
  Ball half = Ball::exact(Rat(1, 2), ctx.precision());
  diag.q_flag_violated = diag.betas[diag.type_embedding].abs().definitely_gt(half);

  classify_case(diag, kappa, t0, ctx);
  diag.decomposition = unit_decompose(beta, units, ctx);

  if (diag.case_tag == CaseTag::Case1) {
    SiegelQuantities sq = siegel_quantities(diag, diag.type_embedding, diag.k, diag.l, ctx);
    diag.L = sq.L;
    diag.Lp = sq.Lp;
    diag.siegel_residual = sq.residual;
    lambda_form(diag, units, gammas, ctx);
  } else {
    // the Siegel identity is still reportable for any three distinct indices
    if (E.count() >= 3) {
      std::size_t j = diag.type_embedding;
      std::size_t k = (j + 1) % E.count(), l = (j + 2) % E.count();
      SiegelQuantities sq = siegel_quantities(diag, j, k, l, ctx);
      diag.L = sq.L;
      diag.Lp = sq.Lp;
      diag.siegel_residual = sq.residual;
      diag.k = k;
      diag.l = l;
    }
  }
  return diag;
}

}  // namespace tthue
