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

#include <vector>

#include "tthue/embeddings.hpp"

namespace tthue {

struct Solution {
  Int x, y;
  std::vector<long> exps;
  bool trivial = false;     // xy == 0
  bool generating = true;   // Q(gamma(t)) = K
  bool operator==(const Solution& o) const {
    return x == o.x && y == o.y && exps == o.exps;
  }
  bool operator<(const Solution& o) const {
    if (exps != o.exps) return exps < o.exps;
    if (y != o.y) return y < o.y;
    return x < o.x;
  }
};

struct SearchConfig {
  unsigned long T = 0;        // exponent cap: the box [0,T]^s (or [-T,T]^s)
  Int y_cap = 1;              // 1 <= |y| <= y_cap, plus the y = 0 pair
  bool report_trivial = true;
  bool extend_negative = false;  // search t in [-T, T]^s instead of [0, T]^s
  unsigned threads = 1;
};

// All solutions (x, y) of |N(x - gamma(t) y)| = 1 with 1 <= |y| <= y_cap
// for one fixed exponent vector, plus the y = 0 pair (+-1, 0). Complete by
// the candidate rule: prod |beta_i| = 1 forces min_i |x - sigma_i y| <= 1,
// so x lies within 1 of Re(sigma_i) y for an embedding with |Im(sigma_i) y|
// <= 1; every candidate is verified by exact norm evaluation.
std::vector<std::pair<Int, Int>> solve_fixed_t(const std::vector<FieldElement>& gammas,
                                               const std::vector<long>& exps, const Int& y_cap,
                                               EmbeddingContext& ctx);

struct SkippedExponent {
  std::vector<long> exps;
  std::string reason;
};

struct SearchOutcome {
  std::vector<Solution> solutions;  // canonically sorted, deduplicated
  std::vector<SkippedExponent> skipped;
};

// Union over the exponent box of solve_fixed_t; exponent vectors whose
// gamma(t) does not generate K are skipped and reported (the all-zero
// vector, for instance, would otherwise admit infinitely many solutions).
SearchOutcome search_box(const std::vector<FieldElement>& gammas, const SearchConfig& cfg,
                         EmbeddingContext& ctx);

// Exhaustive double loop for testing; guards the search volume
// (2 x_cap + 1)(2 y_cap + 1)(T+1)^s <= 10^8 and throws SearchSpaceTooLarge.
SearchOutcome brute_force_oracle(const std::vector<FieldElement>& gammas, unsigned long T,
                                 const Int& x_cap, const Int& y_cap, bool extend_negative = false);

}  // namespace tthue
