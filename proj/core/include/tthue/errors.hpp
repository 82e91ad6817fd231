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

#include <stdexcept>
#include <string>

namespace tthue {

enum class errc {
  degree_too_small,
  reducible,
  not_integral,
  zero_element,
  precision_exhausted,
  zero_conjugate,
  index_divisor_prime,
  s_too_large,
  not_a_unit,
  rank_deficient,
  equal_moduli,
  degenerate_conjugates,
  rounding_failed,
  invariant_violated,
  hypotheses_not_certified,
  preceding_stage_missing,
  search_space_too_large,
  not_generating,
  parse_error,
  validation_error,
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// A reducibility certificate: carries one nontrivial factor as a printable
// coefficient list so the caller can re-verify the division.
class ReducibleError : public Error {
 public:
  ReducibleError(const std::string& what, std::string factor)
      : Error(errc::reducible, what + " (factor: " + factor + ")"), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

class IndexDivisorError : public Error {
 public:
  IndexDivisorError(const std::string& what, std::string prime)
      : Error(errc::index_divisor_prime, what + " (prime: " + prime + ")"),
        prime_(std::move(prime)) {}
  const std::string& prime() const noexcept { return prime_; }

 private:
  std::string prime_;
};

class NotAUnitError : public Error {
 public:
  NotAUnitError(const std::string& what, std::size_t index)
      : Error(errc::not_a_unit, what + " (index " + std::to_string(index) + ")"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::reducible: return "Reducible";
    case errc::not_integral: return "NotIntegral";
    case errc::zero_element: return "ZeroElement";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::zero_conjugate: return "ZeroConjugate";
    case errc::index_divisor_prime: return "IndexDivisorPrime";
    case errc::s_too_large: return "STooLarge";
    case errc::not_a_unit: return "NotAUnit";
    case errc::rank_deficient: return "RankDeficient";
    case errc::equal_moduli: return "EqualModuli";
    case errc::degenerate_conjugates: return "DegenerateConjugates";
    case errc::rounding_failed: return "RoundingFailed";
    case errc::invariant_violated: return "InvariantViolated";
    case errc::hypotheses_not_certified: return "HypothesesNotCertified";
    case errc::preceding_stage_missing: return "PrecedingStageMissing";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    case errc::not_generating: return "NotGenerating";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace tthue
