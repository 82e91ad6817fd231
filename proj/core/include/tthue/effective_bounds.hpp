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
#include <string>
#include <variant>
#include <vector>

#include "tthue/hypotheses.hpp"

namespace tthue {

// A positive quantity that may be far beyond floating range, kept as an
// enclosure of its natural logarithm when needed.
class ExtendedReal {
 public:
  static ExtendedReal from_value(Ball v);     // v > 0, representable
  static ExtendedReal from_log(Ball log_v);   // value = exp(log_v), any size
  static ExtendedReal from_int(Int v);

  bool has_exact_int() const { return kind_ == Kind::Integer; }
  const Int& exact_int() const { return int_; }
  // enclosure of log(value); always available
  Ball log_value() const;
  // value as a ball when it fits the floating range
  std::optional<Ball> value() const;

  // certified comparison against a plain integer
  bool definitely_exceeds(const Int& n) const;
  // monotone comparison between two extended reals (by log enclosure)
  bool definitely_ge(const ExtendedReal& o) const;

  std::string to_string() const;

 private:
  enum class Kind { Integer, LogScale } kind_ = Kind::Integer;
  Int int_;
  Ball log_;
};

struct LedgerEntry {
  std::string name;
  std::variant<Ball, Rat, Int> value;
  std::string derivation;            // how it was obtained, with its validity threshold
  std::vector<std::string> inputs;   // names of earlier entries used
};

// Insertion-ordered map of every named effective constant with provenance.
class ConstantLedger {
 public:
  void put(LedgerEntry e);
  bool has(const std::string& name) const;
  const LedgerEntry& get(const std::string& name) const;
  const std::vector<LedgerEntry>& entries() const { return entries_; }
  Ball ball(const std::string& name) const;  // value as a Ball view

 private:
  std::vector<LedgerEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

// C(t, D) = 18 (t+1)! t^{t+1} (32 D)^{t+2} log(2 t D): exact integer part
// times a log enclosure.
Ball baker_constant(unsigned long t, unsigned long D, prec_t prec);

// lower bound -C h_1' ... h_t' log B' for log|Lambda|, with the height
// floors h_i' = max(h_i, 0.16/D, log_gamma_i/D) folded in by the caller via
// `floored_heights`; B' = max(B, 3).
Ball baker_lower_bound(const std::vector<Ball>& floored_heights, const Ball& B, unsigned long D,
                       prec_t prec);

// height floor max(h, |log gamma|/D, 0.16/D) with the worst-case D = 1 for
// the middle term when `conservative_middle` is set
Ball baker_height_floor(const Ball& h, const Ball& abs_log, unsigned long D, prec_t prec);

// c = 3^{r+27} (r+1)^{7r+19} n^{2n+6r+14}, exact
Int bugeaud_gyory_constant(unsigned long n, unsigned long r);

// log max(|x|,|y|) <= c R* max(log R*, 1)(R* + log(H B)) with R* the upper
// end of the regulator ball and B fixed to e (the equation right side is 1)
Ball bugeaud_gyory_xy_bound(const Ball& regulator, const Ball& log_H, unsigned long n,
                            unsigned long r, prec_t prec);

struct Lemma4Instance {
  std::vector<double> a;  // ascending positive reals, product 1, a.back() > 1
  std::size_t j;          // distinguished index, 0-based
};

struct Lemma4Result {
  double product;  // prod_{i != j} max(a_i, a_j)
  double bound;    // a_d^{1/(d-1)}
  bool holds;
};

// verifies the pairwise-maximum product inequality on one instance;
// InvariantViolated when the preconditions fail beyond 1e-12
Lemma4Result lemma4_bound(const Lemma4Instance& inst);

// induced infinity norm (max absolute row sum) of the full d x s log matrix
Ball c1_row_norm(const LogMatrix& gamma_matrix);

// (d-1) * induced infinity norm of the pseudoinverse; RankDeficient if the
// pseudoinverse cannot be certified
Ball c2_pinv_norm(const LogMatrix& gamma_matrix, unsigned long d);

struct GapBoundResult {
  Ball M, m;      // larger and smaller conjugate modulus
  Ball c_gap;     // ledger constant
  Ball lower;     // M * exp(-c_gap h(gamma^t)): the certified gap lower bound
  bool holds;     // M - m > lower, ball-verified strictly
};

// Inputs shared by the tijdeman gap bound and by compose_bounds; every entry
// derived from certified quantities once per (K, gammas, units) instance.
struct BoundInputs {
  unsigned long d = 0, s = 0, r = 0;
  std::vector<Ball> gamma_heights;        // h(gamma_k), upper-inflated balls
  std::vector<Ball> eta_heights;          // h(eta_i)
  Ball c1;                                // ||Gamma||_inf
  Ball c2;                                // (d-1) ||pinv Gamma||_inf
  Ball c2_star;                           // max over ratio-matrix pinv norms
  Ball c4;                                // ||H^{-1}||_inf
  Ball regulator;
  Ball ct_l1;                             // ||pinv||_l1 of the S-adic valuation matrix
  Ball max_abs_log_gamma;                 // max_{i,k} |log|gamma_k^{(i)}||
  Ball max_abs_log_eta;                   // max over units
  unsigned long t0 = 3;                   // validity threshold for the asymptotic chain
  std::optional<double> kappa_override;
};

// Gathers every certified input (errors propagate: RankDeficient,
// PrecisionExhausted, IndexDivisorPrime...).
BoundInputs gather_bound_inputs(const std::vector<FieldElement>& gammas, const UnitSystem& units,
                                EmbeddingContext& ctx, unsigned long t0 = 3,
                                const ManualValuations* manual = nullptr,
                                std::optional<double> kappa_override = std::nullopt);

// Lemma-3-style gap for the element gamma(t) at two embeddings with
// certifiedly distinct moduli. EqualModuli when the moduli coincide
// structurally or cannot be separated.
GapBoundResult tijdeman_gap(const std::vector<FieldElement>& gammas,
                            const std::vector<unsigned long>& exponents, std::size_t i1,
                            std::size_t i2, const BoundInputs& in, EmbeddingContext& ctx,
                            ConstantLedger& ledger);

struct EffectiveBounds {
  ExtendedReal t_max;
  ExtendedReal case1_bound;
  ExtendedReal case2_bound;
  ExtendedReal x_max;  // bound on log max(|x|, |y|)
  double kappa = 0;
};

// Least integer T at or above the upper fixed point with T > c log T (the
// Case-2 recurrence solver).
Int least_t_exceeding_clog(const Ball& c, unsigned long t_start, prec_t prec);

// Composes the full effective chain into T_max and X_max, recording every
// constant in the ledger. Deterministic for fixed inputs.
EffectiveBounds compose_bounds(const BoundInputs& in, ConstantLedger& ledger, prec_t prec);

}  // namespace tthue
