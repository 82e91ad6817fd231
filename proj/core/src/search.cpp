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

#include "tthue/search.hpp"

#include <algorithm>
#include <future>

#include "tthue/errors.hpp"

namespace tthue {

namespace {

FieldElement gamma_power_signed(const std::vector<FieldElement>& gammas,
                                const std::vector<long>& exps) {
  FieldElement gt = FieldElement::one(gammas.at(0).field());
  for (std::size_t k = 0; k < gammas.size(); ++k) gt = gt * gammas[k].pow_signed(exps.at(k));
  return gt;
}

// homogenized characteristic polynomial with exact rational coefficients:
// N(x - beta y) = sum c_k x^k y^{d-k}
struct NormFormQ {
  std::vector<Rat> c;
  Rat eval(const Int& x, const Int& y) const {
    Rat acc = 0;
    Rat xq(x);
    for (std::size_t k = c.size(); k-- > 0;) {
      acc = acc * xq + c[k] * Rat(int_pow(y, static_cast<unsigned long>(c.size() - 1 - k)));
    }
    return acc;
  }
  bool is_solution(const Int& x, const Int& y) const {
    Rat v = eval(x, y);
    return v == 1 || v == -1;
  }
};

NormFormQ norm_form_q(const FieldElement& beta) {
  NormFormQ f;
  f.c = beta.charpoly_rational().coeffs();
  return f;
}

}  // namespace

namespace {

std::vector<std::pair<Int, Int>> solve_fixed_t_impl(const std::vector<FieldElement>& gammas,
                                                    const std::vector<long>& exps,
                                                    const Int& y_cap, const Embeddings& E) {
  if (y_cap < 1) throw Error(errc::validation_error, "y_cap must be at least 1");
  FieldElement beta = gamma_power_signed(gammas, exps);
  NormFormQ F = norm_form_q(beta);
  prec_t prec = E.precision();

  std::vector<std::pair<Int, Int>> out;
  out.emplace_back(Int(1), Int(0));
  out.emplace_back(Int(-1), Int(0));

  std::vector<CBall> sigmas;
  for (std::size_t i = 0; i < E.count(); ++i) sigmas.push_back(E.embed(beta, i));

  Ball one = Ball::exact(1L, prec);
  for (Int y = 1; y <= y_cap; y += 1) {
    Ball yb = Ball::exact(y, prec);
    std::vector<Int> candidates;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      // only embeddings with |Im sigma_i| y <= 1 can host the minimal beta
      Ball imy = sigmas[i].im().abs() * yb;
      if (imy.definitely_gt(one)) continue;
      Ball centre = sigmas[i].re() * yb;
      Int lo = (centre - one).ceil_of_lo();
      Int hi = (centre + one).floor_of_hi();
      for (Int x = lo; x <= hi; x += 1) candidates.push_back(x);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Int& x : candidates) {
      if (F.is_solution(x, y)) {
        out.emplace_back(x, y);
        out.emplace_back(Int(-x), Int(-y));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // defense in depth: re-verify every emitted pair exactly
  for (const auto& [x, y] : out)
    if (!F.is_solution(x, y)) throw Error(errc::internal, "emitted non-solution");
  return out;
}

}  // namespace

std::vector<std::pair<Int, Int>> solve_fixed_t(const std::vector<FieldElement>& gammas,
                                               const std::vector<long>& exps, const Int& y_cap,
                                               EmbeddingContext& ctx) {
  return solve_fixed_t_impl(gammas, exps, y_cap, ctx.current());
}

namespace {

std::vector<std::vector<long>> exponent_box(std::size_t s, unsigned long T, bool negatives) {
  std::vector<std::vector<long>> box;
  long lo = negatives ? -static_cast<long>(T) : 0;
  long hi = static_cast<long>(T);
  std::vector<long> cur(s, lo);
  for (;;) {
    box.push_back(cur);
    std::size_t pos = 0;
    while (pos < s) {
      if (++cur[pos] <= hi) break;
      cur[pos] = lo;
      ++pos;
    }
    if (pos == s) break;
  }
  std::sort(box.begin(), box.end());
  return box;
}

struct BlockResult {
  std::vector<Solution> solutions;
  std::vector<SkippedExponent> skipped;
};

BlockResult search_block(const std::vector<FieldElement>& gammas,
                         const std::vector<std::vector<long>>& exps_block, const SearchConfig& cfg,
                         std::shared_ptr<const Embeddings> shared) {
  BlockResult out;
  // workers are pure functions of their block; the embedding set is shared
  // read-only, refinement never happens here
  for (const auto& exps : exps_block) {
    FieldElement gt = gamma_power_signed(gammas, exps);
    if (!gt.generates_field()) {
      out.skipped.push_back({exps, "NotGenerating"});
      continue;
    }
    for (auto& [x, y] : solve_fixed_t_impl(gammas, exps, cfg.y_cap, *shared)) {
      Solution s;
      s.x = x;
      s.y = y;
      s.exps = exps;
      s.trivial = (x == 0 || y == 0);
      s.generating = true;
      out.solutions.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

SearchOutcome search_box(const std::vector<FieldElement>& gammas, const SearchConfig& cfg,
                         EmbeddingContext& ctx) {
  if (cfg.y_cap < 1) throw Error(errc::validation_error, "y_cap must be at least 1");
  auto box = exponent_box(gammas.size(), cfg.T, cfg.extend_negative);
  auto shared = ctx.snapshot();

  unsigned threads = std::max(1u, cfg.threads);
  threads = std::min<unsigned>(threads, static_cast<unsigned>(box.size()));
  SearchOutcome out;
  if (threads <= 1) {
    BlockResult r = search_block(gammas, box, cfg, shared);
    out.solutions = std::move(r.solutions);
    out.skipped = std::move(r.skipped);
  } else {
    // contiguous blocks, deterministic merge by block order
    std::vector<std::future<BlockResult>> futures;
    std::size_t per = (box.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      std::size_t lo = w * per, hi = std::min(box.size(), lo + per);
      if (lo >= hi) break;
      std::vector<std::vector<long>> block(box.begin() + static_cast<long>(lo),
                                           box.begin() + static_cast<long>(hi));
      futures.push_back(std::async(std::launch::async, [&gammas, block, &cfg, shared] {
        return search_block(gammas, block, cfg, shared);
      }));
    }
    for (auto& fut : futures) {
      BlockResult r = fut.get();
      out.solutions.insert(out.solutions.end(), r.solutions.begin(), r.solutions.end());
      out.skipped.insert(out.skipped.end(), r.skipped.begin(), r.skipped.end());
    }
  }
  if (!cfg.report_trivial) {
    out.solutions.erase(std::remove_if(out.solutions.begin(), out.solutions.end(),
                                       [](const Solution& s) { return s.trivial; }),
                        out.solutions.end());
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()),
                      out.solutions.end());
  return out;
}

SearchOutcome brute_force_oracle(const std::vector<FieldElement>& gammas, unsigned long T,
                                 const Int& x_cap, const Int& y_cap, bool extend_negative) {
  Int volume = (2 * x_cap + 1) * (2 * y_cap + 1);
  unsigned long per_dim = extend_negative ? 2 * T + 1 : T + 1;
  for (std::size_t i = 0; i < gammas.size(); ++i) volume *= static_cast<long>(per_dim);
  if (volume > 100000000)
    throw Error(errc::search_space_too_large,
                "oracle volume " + volume.get_str() + " exceeds the 10^8 guard");

  SearchOutcome out;
  for (const auto& exps : exponent_box(gammas.size(), T, extend_negative)) {
    FieldElement gt = gamma_power_signed(gammas, exps);
    if (!gt.generates_field()) {
      out.skipped.push_back({exps, "NotGenerating"});
      continue;
    }
    NormFormQ F = norm_form_q(gt);
    for (Int y = -y_cap; y <= y_cap; y += 1) {
      for (Int x = -x_cap; x <= x_cap; x += 1) {
        if (F.is_solution(x, y)) {
          Solution s;
          s.x = x;
          s.y = y;
          s.exps = exps;
          s.trivial = (x == 0 || y == 0);
          s.generating = true;
          out.solutions.push_back(std::move(s));
        }
      }
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

}  // namespace tthue
