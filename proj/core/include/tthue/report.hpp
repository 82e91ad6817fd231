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

#include "tthue/config.hpp"
#include "tthue/effective_bounds.hpp"
#include "tthue/proof_analysis.hpp"
#include "tthue/search.hpp"

namespace tthue {

enum class Stage { Check, Bounds, Search, Analyze };

struct HypothesesReport {
  TriState mult_independence;
  ConditionStarResult condition_star;
  bool q_linear_independent = false;
  bool units_supplied = false;
  std::optional<Ball> regulator;
  unsigned long torsion_order = 0;
  std::vector<std::string> warnings;
  bool all_certified() const;
  bool any_certified_false() const;
};

struct DiagnosedSolution {
  Solution solution;
  std::optional<SolutionDiagnostics> diagnostics;  // absent for skipped-stage runs
};

struct Report {
  JobConfig config;
  HypothesesReport hypotheses;
  ConstantLedger ledger;
  std::optional<EffectiveBounds> bounds;
  std::string covered_regime;
  std::vector<DiagnosedSolution> solutions;
  std::vector<SkippedExponent> skipped;
  std::vector<std::string> banners;
  // meta
  prec_t initial_precision = kPrecDefault;
  prec_t highest_precision = kPrecDefault;
  long runtime_ms = 0;
  Stage completed_stage = Stage::Check;
};

// Runs the pipeline check -> bounds -> search -> analyze up to `upto`. A
// CertifiedFalse or Undecided hypothesis halts before bounds unless force
// is set (the report then carries an explanatory banner).
Report run_pipeline(const JobConfig& cfg, Stage upto = Stage::Analyze, bool force = false);

// JSON (canonical key order, exact rationals as strings, balls as {mid, rad}
// decimal strings) or a human-readable summary.
std::string emit_report(const Report& r, const std::string& format);

// process exit code semantics: 0 ok, 1 hypotheses failed, 2 undecided
int report_exit_code(const Report& r);

}  // namespace tthue
