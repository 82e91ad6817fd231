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
#include <string>
#include <vector>

#include "tthue/heights.hpp"

namespace tthue {

enum class Verdict { CertifiedTrue, CertifiedFalse, Undecided };

// Certification is one-sided: interval arithmetic can certify full rank, and
// exact arithmetic can certify a violation (an integer relation, a symbolic
// equal-modulus pair); anything else stays Undecided. A CertifiedFalse
// always carries an exactly verified witness.
struct TriState {
  Verdict verdict = Verdict::Undecided;
  std::string certificate;    // witness description or undecidedness reason
  std::vector<Int> relation;  // exact exponent vector, when that is the witness
};

const char* verdict_name(Verdict v);

// order of a root of unity, or nullopt if the element is not torsion
std::optional<unsigned long> root_of_unity_order(const FieldElement& u);

// Exact multiplicative relation search: LLL on scaled valuation vectors at
// the context's precision, candidates verified by exact arithmetic (the
// power product must be a root of unity). Failure to find one proves
// nothing. The search bound caps |k_i|.
std::optional<std::vector<Int>> find_multiplicative_relation(
    const std::vector<FieldElement>& elements, EmbeddingContext& ctx,
    const ManualValuations* manual = nullptr, const Int& height_bound = Int(1) << 20);

TriState check_mult_independence(const std::vector<FieldElement>& gammas, EmbeddingContext& ctx,
                                 const ManualValuations* manual = nullptr);

struct ConditionStarResult {
  std::vector<TriState> per_subset;  // indexed by the left-out embedding
  TriState overall;                  // conjunction
};

// For each of the d leave-one-out subsets of d-1 embeddings, certify full
// column rank s of the (d-2) x s log-ratio matrix. The verdict is invariant
// under the reference choice inside a subset (row equivalence); we use the
// highest remaining embedding index as the reference.
ConditionStarResult check_condition_star(const std::vector<FieldElement>& gammas,
                                         EmbeddingContext& ctx);

// same check with an explicit reference, for the row-equivalence property test
TriState check_condition_star_subset(const std::vector<FieldElement>& gammas,
                                     EmbeddingContext& ctx, std::size_t leave_out,
                                     std::size_t reference);

// exact rank of the s x d rational coordinate matrix equals s
bool check_q_linear_independence(const std::vector<FieldElement>& gammas);

struct UnitSystem {
  std::vector<FieldElement> units;            // eta_1 ... eta_r
  BallMatrix H;                               // r x r logs over the first r places
  std::vector<std::size_t> place_embeddings;  // representative embedding per place (all r+1)
  std::vector<unsigned long> place_weights;   // 1 for real, 2 for complex (all r+1)
  Ball regulator;                             // |det(diag(weights) H)| over the first r places
  unsigned long torsion_order = 2;            // w
};

// Verifies a supplied fundamental system: each eta an algebraic integer of
// norm +-1 (NotAUnit(index) otherwise), the r x r log matrix certified
// nonsingular (RankDeficient with an exact relation when one is found), the
// regulator as a ball, and the torsion order w by exhaustive search over
// orders m with phi(m) | d.
UnitSystem verify_unit_system(const std::vector<FieldElement>& etas, const FieldPtr& K,
                              EmbeddingContext& ctx);

// Torsion order of K: 2 whenever K has a real embedding; otherwise found by
// solving for root-of-unity coordinates and verifying exactly.
unsigned long torsion_order(const FieldPtr& K, EmbeddingContext& ctx);

}  // namespace tthue
