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

#include "tthue/report.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "tthue/errors.hpp"

namespace tthue {

namespace {
using json = nlohmann::ordered_json;

json ball_json(const Ball& b, std::size_t digits = 20) {
  json o;
  o["mid"] = b.mid_string(digits);
  o["rad"] = b.rad_string();
  return o;
}

json cball_json(const CBall& b) {
  json o;
  o["re"] = ball_json(b.re());
  o["im"] = ball_json(b.im());
  return o;
}

json tristate_json(const TriState& t) {
  json o;
  o["verdict"] = verdict_name(t.verdict);
  o["certificate"] = t.certificate;
  if (!t.relation.empty()) {
    json rel = json::array();
    for (const auto& k : t.relation) rel.push_back(k.get_str());
    o["relation"] = rel;
  }
  return o;
}

unsigned thread_count_from_env() {
  if (const char* env = std::getenv("THREAD_COUNT")) {
    long v = std::atol(env);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

bool HypothesesReport::all_certified() const {
  return mult_independence.verdict == Verdict::CertifiedTrue &&
         condition_star.overall.verdict == Verdict::CertifiedTrue;
}

bool HypothesesReport::any_certified_false() const {
  return mult_independence.verdict == Verdict::CertifiedFalse ||
         condition_star.overall.verdict == Verdict::CertifiedFalse;
}

Report run_pipeline(const JobConfig& cfg, Stage upto, bool force) {
  auto started = std::chrono::steady_clock::now();
  Report rep;
  rep.config = cfg;
  rep.initial_precision = cfg.precision;

  FieldPtr K = NumberField::create(ZPoly(std::vector<Int>(cfg.field)));
  EmbeddingContext ctx(K, cfg.precision);
  std::vector<FieldElement> gammas;
  for (const auto& coords : cfg.gammas) gammas.emplace_back(K, coords);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i].is_zero())
      throw Error(errc::validation_error, "gammas[" + std::to_string(i) + "] is zero");
    if (!gammas[i].is_algebraic_integer())
      throw Error(errc::validation_error,
                  "gammas[" + std::to_string(i) + "] is not an algebraic integer");
  }
  const ManualValuations* manual =
      cfg.manual_valuations.empty() ? nullptr : &cfg.manual_valuations;

  // stage: check
  rep.hypotheses.mult_independence = check_mult_independence(gammas, ctx, manual);
  rep.hypotheses.condition_star = check_condition_star(gammas, ctx);
  rep.hypotheses.q_linear_independent = check_q_linear_independence(gammas);
  std::optional<UnitSystem> units;
  if (!cfg.units.empty()) {
    std::vector<FieldElement> etas;
    for (const auto& coords : cfg.units) etas.emplace_back(K, coords);
    units = verify_unit_system(etas, K, ctx);
    rep.hypotheses.units_supplied = true;
    rep.hypotheses.regulator = units->regulator;
    rep.hypotheses.torsion_order = units->torsion_order;
    if (!cfg.assume_units_fundamental)
      rep.hypotheses.warnings.push_back(
          "units were supplied as independent-of-full-rank only: the regulator is an integer "
          "multiple of the true one, and the composed bounds remain valid only if it is not "
          "smaller");
  }
  rep.completed_stage = Stage::Check;

  bool proceed = rep.hypotheses.all_certified();
  if (!proceed && upto != Stage::Check) {
    if (!force) {
      rep.banners.push_back("pipeline halted before bounds: hypotheses not certified");
      rep.highest_precision = ctx.highest_precision_used();
      auto ended = std::chrono::steady_clock::now();
      rep.runtime_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(ended - started).count();
      return rep;
    }
    rep.banners.push_back("unconditional-bounds-not-certified: --force proceeded past "
                          "non-certified hypotheses");
  }

  // stage: bounds
  std::optional<BoundInputs> inputs;
  if (upto != Stage::Check) {
    if (units) {
      try {
        inputs = gather_bound_inputs(gammas, *units, ctx, cfg.t0, manual, cfg.kappa_override);
        rep.bounds = compose_bounds(*inputs, rep.ledger, std::max<prec_t>(cfg.precision, 192));
        rep.covered_regime =
            "the search below exhausts the box t in [0, " + std::to_string(cfg.search.T) +
            "]^s with |y| <= " + cfg.search.y_cap.get_str() +
            "; the unconditional bound T_max = " + rep.bounds->t_max.to_string() +
            " is astronomically larger and is reported, not enumerated";
        if (!cfg.assume_units_fundamental) {
          LedgerEntry r = rep.ledger.get("R");
          r.derivation += "; WARNING: supplied units asserted independent only, R may be an "
                          "integer multiple of the true regulator";
          rep.ledger.put(r);
        }
      } catch (const Error& e) {
        if (!force) throw;
        rep.banners.push_back(std::string("bounds stage failed: ") + e.what());
      }
      rep.completed_stage = Stage::Bounds;
    } else if (upto != Stage::Search) {
      throw Error(errc::validation_error,
                  "units are required for the bounds and analyze stages");
    }
  }

  // stage: search
  if (upto == Stage::Search || upto == Stage::Analyze) {
    SearchConfig scfg = cfg.search;
    scfg.threads = thread_count_from_env();
    SearchOutcome found = search_box(gammas, scfg, ctx);
    rep.skipped = found.skipped;
    for (auto& s : found.solutions) rep.solutions.push_back({s, std::nullopt});
    rep.completed_stage = Stage::Search;
  }

  // stage: analyze
  if (upto == Stage::Analyze && units) {
    Ball kappa = rep.bounds ? Ball::exact(Rat(rep.bounds->kappa), 192)
                            : Ball::exact(2L, 192);
    if (cfg.kappa_override) kappa = Ball::exact(Rat(*cfg.kappa_override), 192);
    for (auto& entry : rep.solutions) {
      const Solution& s = entry.solution;
      if (!s.generating) continue;
      entry.diagnostics = diagnose(s.x, s.y,
                                   std::vector<unsigned long>(s.exps.begin(), s.exps.end()),
                                   gammas, *units, ctx, kappa, cfg.t0);
    }
    rep.completed_stage = Stage::Analyze;
  }

  rep.highest_precision = ctx.highest_precision_used();
  auto ended = std::chrono::steady_clock::now();
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(ended - started).count();
  return rep;
}

namespace {

json ledger_json(const ConstantLedger& ledger) {
  json out = json::array();
  for (const auto& e : ledger.entries()) {
    json o;
    o["name"] = e.name;
    if (std::holds_alternative<Ball>(e.value)) {
      o["value"] = ball_json(std::get<Ball>(e.value));
    } else if (std::holds_alternative<Rat>(e.value)) {
      o["value"] = std::get<Rat>(e.value).get_str();
    } else {
      o["value"] = std::get<Int>(e.value).get_str();
    }
    o["derivation"] = e.derivation;
    json in = json::array();
    for (const auto& i : e.inputs) in.push_back(i);
    o["inputs"] = in;
    out.push_back(o);
  }
  return out;
}

json diagnostics_json(const SolutionDiagnostics& d) {
  json o;
  o["type_j"] = d.type_embedding + 1;  // 1-based, as in the source convention
  o["type_tie_broken"] = d.type_tie_broken;
  o["case"] = case_name(d.case_tag);
  if (d.case_tag == CaseTag::Case1) {
    o["k"] = d.k;
    o["l"] = d.l;
  }
  json sig = json::array(), bet = json::array();
  for (const auto& s : d.sigmas) sig.push_back(cball_json(s));
  for (const auto& b : d.betas) bet.push_back(cball_json(b));
  o["sigmas"] = sig;
  o["betas"] = bet;
  if (d.L) o["L"] = cball_json(*d.L);
  if (d.Lp) o["L_prime"] = cball_json(*d.Lp);
  if (d.siegel_residual) o["siegel_residual"] = cball_json(*d.siegel_residual);
  if (d.decomposition) {
    json dec;
    json b = json::array();
    for (const auto& e : d.decomposition->exponents) b.push_back(e.get_str());
    dec["b"] = b;
    dec["torsion"] = d.decomposition->torsion.to_string();
    dec["verified_exact"] = d.decomposition->verified_exact;
    o["unit_decomposition"] = dec;
  }
  if (d.lambda) {
    json lam;
    lam["value"] = ball_json(*d.lambda);
    json coeffs = json::array();
    for (const auto& c : d.lambda_unit_coeffs) coeffs.push_back(c.get_str());
    lam["unit_coefficients"] = coeffs;
    lam["A"] = d.A;
    lam["B"] = d.B;
    lam["exactly_zero"] = d.lambda_exactly_zero;
    if (d.lambda_exactly_zero) {
      lam["subcase"] = subcase_name(d.subcase);
      if (d.subcase == VanishSubcase::AjBj)
        lam["contradiction"] = "subcase A=B=j forces sigma_k = sigma_l, which the generating "
                               "hypothesis rules out";
    }
    o["lambda"] = lam;
  }
  o["q_flag_violated"] = d.q_flag_violated;
  return o;
}

}  // namespace

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "text") {
    std::ostringstream os;
    os << "twisted Thue equation report\n";
    os << "  field: degree " << r.config.field.size() - 1 << ", f coefficients (ascending):";
    for (const auto& c : r.config.field) os << " " << c.get_str();
    os << "\n  hypotheses:\n";
    os << "    multiplicative independence: "
       << verdict_name(r.hypotheses.mult_independence.verdict) << "\n";
    os << "    condition (*): " << verdict_name(r.hypotheses.condition_star.overall.verdict)
       << "\n";
    os << "    Q-linear independence (informational): "
       << (r.hypotheses.q_linear_independent ? "true" : "false") << "\n";
    if (r.hypotheses.units_supplied) {
      os << "    unit system: verified, R = " << r.hypotheses.regulator->mid_string(10)
         << ", torsion order " << r.hypotheses.torsion_order << "\n";
    }
    for (const auto& b : r.banners) os << "  ! " << b << "\n";
    if (r.bounds) {
      os << "  bounds: T_max = " << r.bounds->t_max.to_string()
         << ", case2 = " << r.bounds->case2_bound.to_string()
         << ", X_max (bound on log max|x|,|y|) = " << r.bounds->x_max.to_string() << "\n";
      os << "  regime: " << r.covered_regime << "\n";
    }
    if (!r.solutions.empty() || r.completed_stage >= Stage::Search) {
      os << "  solutions (" << r.solutions.size() << "), sorted by (t, y, x):\n";
      for (const auto& entry : r.solutions) {
        const Solution& s = entry.solution;
        os << "    t = (";
        for (std::size_t i = 0; i < s.exps.size(); ++i)
          os << (i ? ", " : "") << s.exps[i];
        os << "), (x, y) = (" << s.x.get_str() << ", " << s.y.get_str() << ")"
           << (s.trivial ? " [trivial]" : "");
        if (entry.diagnostics)
          os << " type j = " << entry.diagnostics->type_embedding + 1 << ", "
             << case_name(entry.diagnostics->case_tag);
        os << "\n";
      }
      os << "  skipped exponent vectors: " << r.skipped.size() << "\n";
    }
    os << "  precision: initial " << r.initial_precision << ", highest "
       << r.highest_precision << " bits; runtime " << r.runtime_ms << " ms\n";
    return os.str();
  }

  json o;
  o["config"] = json::parse(config_to_json(r.config));
  json hyp;
  hyp["multiplicative_independence"] = tristate_json(r.hypotheses.mult_independence);
  json star;
  star["overall"] = tristate_json(r.hypotheses.condition_star.overall);
  json subsets = json::array();
  for (std::size_t i = 0; i < r.hypotheses.condition_star.per_subset.size(); ++i) {
    json sub = tristate_json(r.hypotheses.condition_star.per_subset[i]);
    sub["leave_out"] = i;
    subsets.push_back(sub);
  }
  star["per_subset"] = subsets;
  hyp["condition_star"] = star;
  hyp["q_linear_independence"] = r.hypotheses.q_linear_independent;
  if (r.hypotheses.units_supplied) {
    json u;
    u["regulator"] = ball_json(*r.hypotheses.regulator);
    u["torsion_order"] = r.hypotheses.torsion_order;
    hyp["unit_system"] = u;
  }
  if (!r.hypotheses.warnings.empty()) hyp["warnings"] = r.hypotheses.warnings;
  o["hypotheses"] = hyp;
  o["ledger"] = ledger_json(r.ledger);
  if (r.bounds) {
    json b;
    b["T_max"] = r.bounds->t_max.to_string();
    b["log_T_max"] = ball_json(r.bounds->t_max.log_value());
    b["case1_bound"] = r.bounds->case1_bound.to_string();
    b["case2_bound"] = r.bounds->case2_bound.to_string();
    b["X_max"] = r.bounds->x_max.to_string();
    b["kappa"] = r.bounds->kappa;
    b["covered_regime"] = r.covered_regime;
    o["bounds"] = b;
  }
  json sols = json::array();
  for (const auto& entry : r.solutions) {
    const Solution& s = entry.solution;
    json so;
    so["x"] = s.x.get_str();
    so["y"] = s.y.get_str();
    json t = json::array();
    for (long e : s.exps) t.push_back(e);
    so["t"] = t;
    so["trivial"] = s.trivial;
    so["generating"] = s.generating;
    if (entry.diagnostics) so["diagnostics"] = diagnostics_json(*entry.diagnostics);
    sols.push_back(so);
  }
  o["solutions"] = sols;
  json skipped = json::array();
  for (const auto& sk : r.skipped) {
    json s;
    json t = json::array();
    for (long e : sk.exps) t.push_back(e);
    s["t"] = t;
    s["reason"] = sk.reason;
    skipped.push_back(s);
  }
  o["skipped_t"] = skipped;
  if (!r.banners.empty()) o["banners"] = r.banners;
  json meta;
  meta["tool"] = "twisted-thue";
  meta["version"] = "0.1.0";
  meta["initial_precision"] = static_cast<long>(r.initial_precision);
  meta["highest_precision"] = static_cast<long>(r.highest_precision);
  meta["runtime_ms"] = r.runtime_ms;
  o["meta"] = meta;
  return o.dump(2);
}

int report_exit_code(const Report& r) {
  if (r.hypotheses.any_certified_false()) return 1;
  if (!r.hypotheses.all_certified()) return 2;
  return 0;
}

}  // namespace tthue
