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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tthue/embeddings.hpp"

namespace tthue {

struct HeightResult {
  Ball h;       // absolute logarithmic height
  Ball mahler;  // Mahler measure of the minimal polynomial
  Ball house;   // max conjugate modulus
};

// Mahler measure |a_n| prod max(1, |root|) of a nonzero integer polynomial.
// (The printed height formula in the source material omits the log on
// |a_n|; we use the standard log|a_n| + sum log max(1,|root|).)
Ball mahler_measure(const ZPoly& g, prec_t prec);

// Height, Mahler measure and house of a nonzero element, computed from the
// minimal polynomial via the certified embeddings. Adaptive in precision.
HeightResult abs_log_height(const FieldElement& beta, EmbeddingContext& ctx);

// One finite place above p, from the Dedekind factorization f = prod g_i^{e_i} mod p.
struct FinitePlace {
  Int p;
  ZPoly ideal_poly;        // the mod-p irreducible g_i, lifted to [0, p)
  unsigned long e;         // ramification index
  unsigned long f_degree;  // residue degree
  long valuation;          // v_P(beta)
  Ball log_value;          // log |beta|_P = -(f/d) v_P(beta) log p
};

struct ValuationVector {
  std::vector<Ball> archimedean;     // one entry per archimedean place, weight d_v/d
  std::vector<std::size_t> arch_embedding;  // representative embedding per place
  std::vector<FinitePlace> finite;   // nonzero finite valuations only
  Ball l1_norm() const;
  Ball sum() const;  // must contain 0 (product formula)
};

// Manual override: prime -> list of (ideal tag, valuation) entries, used
// when the Dedekind criterion rejects a prime dividing the index of Z[alpha].
struct ManualValuation {
  std::string ideal_tag;
  unsigned long e;
  unsigned long f_degree;
  long valuation;
};
using ManualValuations = std::map<Int, std::vector<ManualValuation>>;

ValuationVector valuation_vector(const FieldElement& beta, bool include_finite,
                                 EmbeddingContext& ctx,
                                 const ManualValuations* manual = nullptr);

// Dedekind's criterion: true when p does not divide [O_K : Z[alpha]].
bool dedekind_index_free(const ZPoly& f, const Int& p);

struct PrimeSplit {
  ZPoly g;  // lifted irreducible factor
  unsigned long e;
  unsigned long f_degree;
};
std::vector<PrimeSplit> split_prime(const ZPoly& f, const Int& p);

// v_P(beta) for each prime ideal P above p (order matches split_prime).
// Requires p index-free; throws IndexDivisorError otherwise.
std::vector<long> valuations_above(const FieldElement& beta, const Int& p);

}  // namespace tthue
