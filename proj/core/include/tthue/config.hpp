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
#include "tthue/search.hpp"

namespace tthue {

// Job description parsed from JSON. All rationals travel as exact "p/q"
// strings; decimal literals are rejected.
struct JobConfig {
  std::vector<Int> field;                       // coefficients of f, ascending
  std::vector<std::vector<Rat>> gammas;         // coordinate vectors
  std::vector<std::vector<Rat>> units;          // optional (empty = absent)
  ManualValuations manual_valuations;           // optional
  SearchConfig search;
  prec_t precision = kPrecDefault;
  unsigned long t0 = 3;
  std::optional<double> kappa_override;
  bool assume_units_fundamental = true;
};

// ParseError carries a location; ValidationError carries the field path.
JobConfig parse_config(const std::string& text);

// canonical JSON text of a config (the round-trip fixture of the report)
std::string config_to_json(const JobConfig& cfg);

}  // namespace tthue
