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

#include "tthue/poly.hpp"

namespace tthue {

// Factorization of a monic squarefree integer polynomial into monic
// irreducible integer factors (Zassenhaus: factor mod a good prime, Hensel
// lift past the Landau-Mignotte bound, recombine subsets, verify each factor
// by exact division). Desk-scale degrees only.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f);

// Irreducibility over Q of a monic integer polynomial, with certificate:
// returns true, or throws ReducibleError carrying a nontrivial factor.
// (Non-squarefree polynomials are reducible with the gcd factor exhibited.)
bool check_irreducible_monic(const ZPoly& f);

}  // namespace tthue
