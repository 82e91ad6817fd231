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

#include <memory>
#include <optional>
#include <vector>

#include "tthue/ball.hpp"
#include "tthue/linalg.hpp"
#include "tthue/number_field.hpp"

namespace tthue {

// Certified, pairwise disjoint enclosures of the d roots of f, ordered by
// descending real midpoint, then ascending imaginary midpoint. Real roots
// carry an exactly-zero imaginary part (their count is fixed by Sturm);
// complex roots come in structurally mirrored conjugate pairs. Immutable:
// refinement produces a new set.
class Embeddings {
 public:
  const FieldPtr& field() const { return field_; }
  prec_t precision() const { return prec_; }
  std::size_t count() const { return roots_.size(); }
  const CBall& root(std::size_t i) const { return roots_[i]; }
  bool is_real(std::size_t i) const { return real_[i]; }
  // the embedding carrying the complex-conjugate root (itself when real)
  std::size_t conjugate_index(std::size_t i) const { return conj_[i]; }

  // certified enclosure of sigma_i(beta): exact-rational Horner at root i
  CBall embed(const FieldElement& beta, std::size_t i) const;

 private:
  friend Embeddings compute_embeddings(const FieldPtr&, prec_t);
  friend Embeddings refine_embeddings(const Embeddings&, prec_t);
  Embeddings() = default;
  FieldPtr field_;
  prec_t prec_ = kPrecDefault;
  std::vector<CBall> roots_;
  std::vector<bool> real_;
  std::vector<std::size_t> conj_;
};

// Root isolation at working precision p >= 64: Sturm bisection plus interval
// Newton for the real roots, Aberth iteration plus disk certification for
// the complex ones. Every enclosure radius is at most 2^{1-p} (1 + |mid|).
Embeddings compute_embeddings(const FieldPtr& K, prec_t p);

// Same machinery for an arbitrary nonzero squarefree integer polynomial:
// certified pairwise-disjoint enclosures of all its complex roots, ordered
// by descending real midpoint then ascending imaginary midpoint.
std::vector<CBall> isolate_roots(const ZPoly& squarefree, prec_t p);

// New set at higher precision (enclosures of the same roots, same order).
Embeddings refine_embeddings(const Embeddings& E, prec_t p);

// Mutable handle implementing the adaptive-precision protocol: start at the
// initial precision, double on demand, hard-cap at kPrecCap (refine past the
// cap raises PrecisionExhausted). Snapshots are immutable and shareable.
class EmbeddingContext {
 public:
  explicit EmbeddingContext(FieldPtr K, prec_t initial = kPrecDefault);
  const Embeddings& current() const { return *cur_; }
  std::shared_ptr<const Embeddings> snapshot() const { return cur_; }
  const Embeddings& refine();
  prec_t precision() const { return cur_->precision(); }
  prec_t highest_precision_used() const { return peak_; }

 private:
  std::shared_ptr<const Embeddings> cur_;
  prec_t peak_;
};

// attempt: callable(const Embeddings&) -> std::optional<T>; retried with
// doubled precision until it yields, or PrecisionExhausted from the context
template <typename F>
auto with_adaptive(EmbeddingContext& ctx, F attempt)
    -> typename std::invoke_result_t<F, const Embeddings&>::value_type {
  for (;;) {
    if (auto r = attempt(ctx.current())) return std::move(*r);
    ctx.refine();
  }
}

// Matrix of log|sigma_i(gamma_k)| balls with its index tags.
struct LogMatrix {
  std::vector<std::size_t> row_embeddings;
  std::vector<std::size_t> col_gammas;
  BallMatrix mat;
};

// nullopt when some modulus enclosure still touches zero at E's precision
std::optional<LogMatrix> try_full_log_matrix(const std::vector<FieldElement>& gammas,
                                             const Embeddings& E);
// adaptive version; ZeroConjugate if some gamma is actually zero
LogMatrix full_log_matrix(const std::vector<FieldElement>& gammas, EmbeddingContext& ctx);

// (d-2) x s matrix of log|sigma_i(g_k) / sigma_ref(g_k)| over embeddings
// i outside {leave_out, reference}. Rows whose embedding is the complex
// conjugate of the reference are exact zeros, produced symbolically.
std::optional<LogMatrix> try_ratio_log_matrix(const std::vector<FieldElement>& gammas,
                                              const Embeddings& E, std::size_t leave_out,
                                              std::size_t reference);
LogMatrix ratio_log_matrix(const std::vector<FieldElement>& gammas, EmbeddingContext& ctx,
                           std::size_t leave_out, std::size_t reference);

}  // namespace tthue
