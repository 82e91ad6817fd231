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

#include "tthue/poly_factor.hpp"

#include <algorithm>

#include "tthue/errors.hpp"
#include "tthue/modpoly.hpp"

namespace tthue {

namespace {

// Landau-Mignotte: any monic factor g of monic f satisfies
// |g_i| <= 2^{deg f} * ||f||_2.
Int mignotte_bound(const ZPoly& f) {
  Int n2 = f.norm2_sq();
  Int root;
  mpz_sqrt(root.get_mpz_t(), n2.get_mpz_t());
  root += 1;
  return (root << static_cast<unsigned long>(f.degree()));
}

ZPoly reduce_symmetric(const ZPoly& f, const Int& m) {
  std::vector<Int> c(f.coeffs());
  Int half = m / 2;
  for (auto& x : c) {
    x %= m;
    if (x < 0) x += m;
    if (x > half) x -= m;
  }
  return ZPoly(std::move(c));
}

}  // namespace

std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  if (!f.is_monic()) throw Error(errc::internal, "factor_monic_squarefree needs monic input");
  if (f.degree() <= 1) return {f};

  // pick the prime with the fewest modular factors among a handful of
  // squarefree reductions (smaller recombination space)
  Int best_p = 0;
  std::vector<FpFactor> best_factors;
  int tried = 0;
  for (unsigned long q = 2; tried < 5 && q < 10000; ++q) {
    Int p(q);
    if (!is_probable_prime(p)) continue;
    if (!is_squarefree_mod_p(f, p)) continue;
    ++tried;
    auto facs = factor_mod_p(FpPoly::from(f, p));
    if (best_p == 0 || facs.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(facs);
    }
    if (best_factors.size() == 1) break;
  }
  if (best_p == 0) throw Error(errc::internal, "no squarefree reduction found (input not squarefree?)");
  if (best_factors.size() == 1) return {f};

  // Hensel lift past twice the factor-coefficient bound
  Int bound = mignotte_bound(f) * 2 + 1;
  unsigned long e = 1;
  Int pe = best_p;
  while (pe < bound) {
    pe *= best_p;
    ++e;
  }
  std::vector<FpPoly> modular;
  modular.reserve(best_factors.size());
  for (auto& ff : best_factors) modular.push_back(ff.factor);
  std::vector<ZPoly> lifted = hensel_lift(f, modular, best_p, e);

  // subset recombination
  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<bool> used(lifted.size(), false);
  std::size_t remaining = lifted.size();
  for (std::size_t size = 1; size <= remaining; ++size) {
    bool found = true;
    while (found && size <= remaining) {
      found = false;
      // iterate subsets of the unused lifted factors of cardinality `size`
      std::vector<std::size_t> avail;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (!used[i]) avail.push_back(i);
      if (avail.size() < size) break;
      std::vector<std::size_t> idx(size);
      for (std::size_t i = 0; i < size; ++i) idx[i] = i;
      while (true) {
        ZPoly cand = ZPoly::constant(1);
        for (std::size_t i : idx) cand = reduce_symmetric(cand * lifted[avail[i]], pe);
        if (cand.is_monic()) {
          auto [quo, rem] = rest.divmod_monic(cand);
          if (rem.is_zero()) {
            result.push_back(cand);
            for (std::size_t i : idx) used[avail[i]] = true;
            remaining -= size;
            rest = quo;
            found = true;
            break;
          }
        }
        // next combination
        std::size_t k = size;
        while (k > 0 && idx[k - 1] == avail.size() - size + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (remaining == 0) break;
    }
    if (remaining == 0) break;
  }
  if (rest.degree() > 0) result.push_back(rest);
  // verify
  ZPoly prod = ZPoly::constant(1);
  for (const auto& g : result) prod = prod * g;
  if (!(prod == f)) throw Error(errc::internal, "recombination verification failed");
  std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      std::size_t k = static_cast<std::size_t>(i);
      if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
  });
  return result;
}

bool check_irreducible_monic(const ZPoly& f) {
  if (!f.is_monic()) throw Error(errc::internal, "irreducibility test needs monic input");
  if (f.degree() < 1) throw Error(errc::internal, "irreducibility of a constant");
  if (f.degree() == 1) return true;
  QPoly fq(f);
  QPoly g = QPoly::gcd(fq, fq.derivative());
  if (g.degree() > 0) {
    ZPoly factor = g.primitive_z();
    throw ReducibleError("polynomial is not squarefree", factor.to_string());
  }
  auto factors = factor_monic_squarefree(f);
  if (factors.size() > 1 || factors[0].degree() != f.degree())
    throw ReducibleError("polynomial factors over Q", factors[0].to_string());
  return true;
}

}  // namespace tthue
