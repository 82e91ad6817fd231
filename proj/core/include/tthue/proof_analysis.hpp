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

#include <optional>
#include <vector>

#include "tthue/effective_bounds.hpp"

namespace tthue {

enum class CaseTag { Case1, Case2, SmallT };
enum class VanishSubcase { None, AjBj, AkBl, AkBj, AjBl };

const char* case_name(CaseTag c);
const char* subcase_name(VanishSubcase s);

// beta = torsion * prod eta_i^{b_i}, verified by exact arithmetic.
struct UnitDecomposition {
  std::vector<Int> exponents;
  FieldElement torsion;
  bool verified_exact = false;
  Ball max_abs_log;  // max |log|beta^{(i)}|| over the first r places (c4 contract input)
};

struct SolutionDiagnostics {
  Int x, y;
  std::vector<unsigned long> exps;
  std::vector<CBall> sigmas;          // sigma_i = embeddings of gamma(t)
  std::vector<CBall> betas;           // beta_i = embeddings of x - gamma(t) y
  std::size_t type_embedding = 0;     // argmin |beta_i| (0-based; the paper's j is this + 1)
  bool type_tie_broken = false;
  CaseTag case_tag = CaseTag::SmallT;
  std::size_t k = 0, l = 0;           // Case-1 witnesses (embedding indices)
  std::optional<CBall> L, Lp;         // Siegel quantities
  std::optional<CBall> siegel_residual;
  std::optional<UnitDecomposition> decomposition;
  std::optional<Ball> lambda;         // the signed linear form (its |.| is the paper's Lambda)
  std::vector<Int> lambda_unit_coeffs;
  std::size_t A = 0, B = 0;
  bool lambda_exactly_zero = false;
  VanishSubcase subcase = VanishSubcase::None;
  bool q_flag_violated = false;       // |beta_j| > 1/2 (reported, never assumed)
};

// argmin of |beta_i| with certified comparisons; on a tie the lowest index
// wins after one escalation fails to separate
std::size_t classify_type(const Int& x, const Int& y, const std::vector<unsigned long>& exps,
                          const std::vector<FieldElement>& gammas, EmbeddingContext& ctx,
                          bool* tie_broken = nullptr);

// Case 1 iff at least two indices satisfy |log|sigma_i/sigma_j|| >= kappa log t
// (certified); SmallT below t0. Fills k, l per the proof's selection rule.
void classify_case(SolutionDiagnostics& diag, const Ball& kappa, unsigned long t0,
                   EmbeddingContext& ctx);

struct SiegelQuantities {
  CBall L, Lp, residual;
};
// L = (beta_j/beta_k)(sigma_k - sigma_l)/(sigma_j - sigma_l), its partner,
// and the identity residual (an enclosure of exactly zero)
SiegelQuantities siegel_quantities(const SolutionDiagnostics& diag, std::size_t j, std::size_t k,
                                   std::size_t l, EmbeddingContext& ctx);

// Solve H b = log|beta| over the first r places, round, and verify exactly;
// RoundingFailed when no integer vector passes exact verification.
UnitDecomposition unit_decompose(const FieldElement& beta, const UnitSystem& units,
                                 EmbeddingContext& ctx);

// The Case-1 linear form. Requires diag.case_tag == Case1 and a verified
// decomposition (PrecedingStageMissing otherwise).
void lambda_form(SolutionDiagnostics& diag, const UnitSystem& units,
                 const std::vector<FieldElement>& gammas, EmbeddingContext& ctx);

// Full per-solution pipeline: exact norm check, embeddings, type, case,
// Siegel, decomposition, Lambda.
SolutionDiagnostics diagnose(const Int& x, const Int& y, const std::vector<unsigned long>& exps,
                             const std::vector<FieldElement>& gammas, const UnitSystem& units,
                             EmbeddingContext& ctx, const Ball& kappa, unsigned long t0);

}  // namespace tthue
