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

#include "tthue/effective_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "tthue/errors.hpp"

namespace tthue {

// ---------- ExtendedReal ----------

ExtendedReal ExtendedReal::from_value(Ball v) {
  if (!v.is_positive()) throw Error(errc::internal, "ExtendedReal needs a positive value");
  ExtendedReal r;
  r.kind_ = Kind::LogScale;
  r.log_ = v.log();
  return r;
}

ExtendedReal ExtendedReal::from_log(Ball log_v) {
  ExtendedReal r;
  r.kind_ = Kind::LogScale;
  r.log_ = std::move(log_v);
  return r;
}

ExtendedReal ExtendedReal::from_int(Int v) {
  if (v <= 0) throw Error(errc::internal, "ExtendedReal needs a positive value");
  ExtendedReal r;
  r.kind_ = Kind::Integer;
  r.int_ = std::move(v);
  return r;
}

Ball ExtendedReal::log_value() const {
  if (kind_ == Kind::Integer) return Ball::exact(int_, 192).log();
  return log_;
}

std::optional<Ball> ExtendedReal::value() const {
  if (kind_ == Kind::Integer) return Ball::exact(int_, 192);
  // exp overflows mpfr far above exponent ~ 2^30; stay well inside
  if (Ball::exact(200000000L, 64).definitely_gt(log_.abs())) return log_.exp();
  return std::nullopt;
}

bool ExtendedReal::definitely_exceeds(const Int& n) const {
  if (kind_ == Kind::Integer) return int_ > n;
  if (n <= 0) return true;
  return log_.definitely_gt(Ball::exact(n, 192).log());
}

bool ExtendedReal::definitely_ge(const ExtendedReal& o) const {
  return log_value().definitely_ge(o.log_value()) ||
         (kind_ == Kind::Integer && o.kind_ == Kind::Integer && int_ >= o.int_);
}

std::string ExtendedReal::to_string() const {
  if (kind_ == Kind::Integer) return int_.get_str();
  // render as 10^x for readability
  Ball log10 = Ball::exact(10L, 128).log();
  Ball x = log_ / log10;
  return "10^(" + x.mid_string(6) + ")";
}

// ---------- ConstantLedger ----------

void ConstantLedger::put(LedgerEntry e) {
  auto it = index_.find(e.name);
  if (it != index_.end()) {
    entries_[it->second] = std::move(e);
    return;
  }
  index_[e.name] = entries_.size();
  entries_.push_back(std::move(e));
}

bool ConstantLedger::has(const std::string& name) const { return index_.count(name) > 0; }

const LedgerEntry& ConstantLedger::get(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(errc::internal, "missing ledger entry " + name);
  return entries_[it->second];
}

Ball ConstantLedger::ball(const std::string& name) const {
  const LedgerEntry& e = get(name);
  if (std::holds_alternative<Ball>(e.value)) return std::get<Ball>(e.value);
  if (std::holds_alternative<Rat>(e.value)) return Ball::exact(std::get<Rat>(e.value), 192);
  return Ball::exact(std::get<Int>(e.value), 192);
}

// ---------- formula constants ----------

Ball baker_constant(unsigned long t, unsigned long D, prec_t prec) {
  if (t < 1 || D < 1) throw Error(errc::validation_error, "baker_constant needs t, D >= 1");
  Int exact = Int(18) * factorial(t + 1) * int_pow(Int(t), t + 1) *
              int_pow(Int(32) * Int(static_cast<long>(D)), t + 2);
  Ball lg = Ball::exact(Int(Int(2) * Int(t) * Int(static_cast<long>(D))), prec).log();
  return Ball::exact(exact, prec) * lg;
}

Ball baker_height_floor(const Ball& h, const Ball& abs_log, unsigned long D, prec_t prec) {
  Ball dinv = Ball::exact(Rat(1, D), prec);
  Ball floor1 = abs_log * dinv;
  Ball floor2 = Ball::exact(Rat(16, 100), prec) * dinv;
  return Ball::max(h, Ball::max(floor1, floor2));
}

Ball baker_lower_bound(const std::vector<Ball>& floored_heights, const Ball& B, unsigned long D,
                       prec_t prec) {
  if (floored_heights.empty()) throw Error(errc::validation_error, "no heights supplied");
  Ball C = baker_constant(floored_heights.size(), D, prec);
  Ball prod = C;
  for (const auto& h : floored_heights) prod = prod * h;
  Ball Bc = Ball::max(B, Ball::exact(3L, prec));
  return -(prod * Bc.log());
}

Int bugeaud_gyory_constant(unsigned long n, unsigned long r) {
  if (n < 3 || r < 1) throw Error(errc::validation_error, "bugeaud_gyory_constant needs n >= 3, r >= 1");
  return int_pow(Int(3), r + 27) * int_pow(Int(static_cast<long>(r + 1)), 7 * r + 19) *
         int_pow(Int(static_cast<long>(n)), 2 * n + 6 * r + 14);
}

Ball bugeaud_gyory_xy_bound(const Ball& regulator, const Ball& log_H, unsigned long n,
                            unsigned long r, prec_t prec) {
  Ball c = Ball::exact(bugeaud_gyory_constant(n, r), prec);
  Ball one = Ball::exact(1L, prec);
  Ball maxlog = Ball::max(regulator.log(), one);
  // B = e since the right side of the equation is 1: log(H B) = log H + 1
  return c * regulator * maxlog * (regulator + log_H + one);
}

Lemma4Result lemma4_bound(const Lemma4Instance& inst) {
  const std::size_t d = inst.a.size();
  if (d < 2 || inst.j >= d) throw Error(errc::invariant_violated, "bad instance shape");
  double prod_all = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    if (!(inst.a[i] > 0)) throw Error(errc::invariant_violated, "entries must be positive");
    if (i + 1 < d && inst.a[i] > inst.a[i + 1] * (1 + 1e-12))
      throw Error(errc::invariant_violated, "entries must ascend");
    prod_all *= inst.a[i];
  }
  if (std::abs(prod_all - 1.0) > 1e-12 * d)
    throw Error(errc::invariant_violated, "product of entries must be 1");
  if (!(inst.a.back() > 1.0)) throw Error(errc::invariant_violated, "a_d must exceed 1");
  Lemma4Result r;
  r.product = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == inst.j) continue;
    r.product *= std::max(inst.a[i], inst.a[inst.j]);
  }
  r.bound = std::pow(inst.a.back(), 1.0 / static_cast<double>(d - 1));
  r.holds = r.product >= r.bound * (1 - 1e-11);
  return r;
}

Ball c1_row_norm(const LogMatrix& gamma_matrix) { return gamma_matrix.mat.inf_norm(); }

Ball c2_pinv_norm(const LogMatrix& gamma_matrix, unsigned long d) {
  auto pinv = gamma_matrix.mat.pseudo_inverse();
  if (!pinv)
    throw Error(errc::rank_deficient, "log matrix pseudoinverse could not be certified");
  return pinv->inf_norm() * Ball::exact(static_cast<long>(d - 1), 192);
}

// ---------- gathered inputs ----------

BoundInputs gather_bound_inputs(const std::vector<FieldElement>& gammas, const UnitSystem& units,
                                EmbeddingContext& ctx, unsigned long t0,
                                const ManualValuations* manual,
                                std::optional<double> kappa_override) {
  BoundInputs in;
  in.d = static_cast<unsigned long>(gammas.at(0).field()->degree());
  in.s = gammas.size();
  in.r = units.units.size();
  in.t0 = std::max<unsigned long>(t0, 2);
  in.kappa_override = kappa_override;
  in.regulator = units.regulator;

  for (const auto& g : gammas) in.gamma_heights.push_back(abs_log_height(g, ctx).h);
  for (const auto& e : units.units) in.eta_heights.push_back(abs_log_height(e, ctx).h);

  LogMatrix full = full_log_matrix(gammas, ctx);
  in.c1 = c1_row_norm(full);
  for (;;) {
    auto pinv = full.mat.pseudo_inverse();
    if (pinv) {
      in.c2 = pinv->inf_norm() * Ball::exact(static_cast<long>(in.d - 1), ctx.precision());
      break;
    }
    if (ctx.precision() * 2 > kPrecCap)
      throw Error(errc::rank_deficient, "full log matrix pseudoinverse undecided at the cap");
    ctx.refine();
    full = full_log_matrix(gammas, ctx);
  }
  Ball maxlog = Ball::zero(ctx.precision());
  for (std::size_t i = 0; i < full.mat.rows(); ++i)
    for (std::size_t k = 0; k < full.mat.cols(); ++k)
      maxlog = Ball::max(maxlog, full.mat.at(i, k).abs());
  in.max_abs_log_gamma = maxlog;

  // c2_star: worst pseudoinverse norm over all (leave_out, reference) pairs
  Ball worst = Ball::zero(ctx.precision());
  for (std::size_t leave = 0; leave < in.d; ++leave) {
    for (std::size_t ref = 0; ref < in.d; ++ref) {
      if (ref == leave) continue;
      for (;;) {
        auto ratio = try_ratio_log_matrix(gammas, ctx.current(), leave, ref);
        if (ratio) {
          auto pinv = ratio->mat.pseudo_inverse();
          if (pinv) {
            worst = Ball::max(worst, pinv->inf_norm());
            break;
          }
        }
        if (ctx.precision() * 2 > kPrecCap)
          throw Error(errc::rank_deficient,
                      "ratio matrix pseudoinverse undecided at the cap (condition (*) must be "
                      "certified first)");
        ctx.refine();
      }
    }
  }
  in.c2_star = worst;

  for (;;) {
    auto hinv = units.H.inverse();
    if (hinv) {
      in.c4 = hinv->inf_norm();
      break;
    }
    throw Error(errc::rank_deficient, "unit log matrix inverse was not certified");
  }

  LogMatrix eta_full = full_log_matrix(units.units, ctx);
  Ball maxeta = Ball::zero(ctx.precision());
  for (std::size_t i = 0; i < eta_full.mat.rows(); ++i)
    for (std::size_t k = 0; k < eta_full.mat.cols(); ++k)
      maxeta = Ball::max(maxeta, eta_full.mat.at(i, k).abs());
  in.max_abs_log_eta = maxeta;

  // S-adic valuation matrix pseudoinverse in the l1 operator norm
  {
    std::vector<ValuationVector> vecs;
    for (const auto& g : gammas) vecs.push_back(valuation_vector(g, true, ctx, manual));
    std::vector<std::pair<std::string, std::string>> keys;
    for (const auto& v : vecs)
      for (const auto& fp : v.finite) {
        auto key = std::make_pair(fp.p.get_str(), fp.ideal_poly.to_string());
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
      }
    std::size_t arch = vecs[0].archimedean.size();
    BallMatrix V(arch + keys.size(), in.s, ctx.precision());
    for (std::size_t col = 0; col < in.s; ++col) {
      for (std::size_t i = 0; i < arch; ++i) V.at(i, col) = vecs[col].archimedean[i];
      for (std::size_t k = 0; k < keys.size(); ++k) {
        Ball entry = Ball::zero(ctx.precision());
        for (const auto& fp : vecs[col].finite)
          if (fp.p.get_str() == keys[k].first && fp.ideal_poly.to_string() == keys[k].second)
            entry = fp.log_value;
        V.at(arch + k, col) = entry;
      }
    }
    auto pinv = V.pseudo_inverse();
    if (!pinv)
      throw Error(errc::rank_deficient,
                  "valuation matrix pseudoinverse undecided (multiplicative independence must "
                  "be certified first)");
    in.ct_l1 = pinv->l1_norm();
  }
  return in;
}

// ---------- shared ledger pieces ----------

namespace {

Ball upper(const Ball& b) {
  // collapse to the upper endpoint (bounds only need the conservative end)
  return Ball::from_endpoints(b.hi(), b.hi(), b.precision());
}

std::string ball_str(const Ball& b) { return b.mid_string(8); }

unsigned long factorial_capped(unsigned long d) {
  // D upper bound for the Galois closure degree: d!
  unsigned long f = 1;
  for (unsigned long i = 2; i <= d; ++i) f *= i;
  return f;
}

}  // namespace

Int least_t_exceeding_clog(const Ball& c, unsigned long t_start, prec_t prec) {
  Ball cu = upper(c);
  if (!cu.is_positive()) return Int(std::max<unsigned long>(t_start, 1));
  Ball x = Ball::max(Ball::exact(static_cast<long>(std::max<unsigned long>(t_start, 3)), prec),
                     cu * Ball::exact(2L, prec));
  for (int it = 0; it < 300; ++it) {
    Ball next = Ball::max(cu * x.log(),
                          Ball::exact(static_cast<long>(std::max<unsigned long>(t_start, 3)), prec));
    x = next;
  }
  // scan upward from a little below the fixed point
  Int T = Int(x.floor_of_hi() - 4);
  if (T < static_cast<long>(t_start)) T = static_cast<long>(t_start);
  for (int guard = 0; guard < 100000; ++guard) {
    Ball tb = Ball::exact(T, prec);
    if (T >= static_cast<long>(t_start) && tb.definitely_gt(cu * tb.log())) return T;
    T += 1;
  }
  throw Error(errc::internal, "fixed-point scan failed");
}

namespace {

struct GapConstants {
  Ball h_floor;   // lower bound on h(gamma(t)) for nonzero t
  Ball c_gap;     // multiplicative-height gap exponent
  Ball C_gap;     // Baker constant side
};

GapConstants gap_constants(const BoundInputs& in, ConstantLedger& ledger, prec_t prec) {
  GapConstants g;
  Ball one = Ball::exact(1L, prec);
  Ball two = Ball::exact(2L, prec);

  // |t|_1 <= ||pinv||_l1 |v|_1 = 2 ||pinv||_l1 h(gamma(t)), so
  // h >= 1/(2 ||pinv||_l1) =: h_floor for every nonzero exponent vector
  g.h_floor = one / (two * upper(in.ct_l1));
  ledger.put({"h_floor", g.h_floor,
              "h(gamma(t)) >= 1/(2 ct_l1) for t != 0, from |t|_1 <= ct_l1 |v|_1 and |v|_1 = 2h",
              {"ct_l1"}});

  // Baker over the 2s logarithms log(gamma_k^{(i)} conj(gamma_k^{(i)})) of
  // positive real algebraic numbers in the Galois closure (degree <= d!);
  // heights <= 2 h(gamma_k), |log| <= 2 max|log gamma|; floors taken at the
  // worst-case D = 1
  unsigned long Dup = factorial_capped(in.d);
  Ball C = baker_constant(2 * in.s, Dup, prec);
  Ball prod_h = C;
  for (const auto& h : in.gamma_heights) {
    Ball hf = Ball::max(two * upper(h),
                        Ball::max(two * upper(in.max_abs_log_gamma), Ball::exact(Rat(16, 100), prec)));
    prod_h = prod_h * hf * hf;  // each gamma contributes two logarithms
  }
  g.C_gap = upper(prod_h);
  ledger.put({"C_BW_gap", g.C_gap,
              "C(2s, d!) times the floored heights of the squared-modulus logarithms, two per "
              "gamma; conservative floors at D = 1",
              {"gamma heights"}});

  // B <= max(3, 2 ct_l1 h) <= c_B1 max(1, h), log B <= log c_B1 + h
  Ball cB1 = Ball::max(Ball::exact(3L, prec), two * upper(in.ct_l1));
  // M - m > M e^{-c_gap h}: c_gap = max(C'(1) + (C' log c_B1 + 1.16)/h_floor, 1/(2 h_floor))
  Ball margin = Ball::exact(Rat(116, 100), prec);  // > log(1/0.316)
  Ball cg = Ball::max(g.C_gap + (g.C_gap * cB1.log() + margin) / g.h_floor,
                      one / (two * g.h_floor));
  g.c_gap = upper(cg);
  ledger.put({"c_gap", g.c_gap,
              "gap exponent: M - m > M exp(-c_gap h(gamma(t))) for every nonzero t and every "
              "pair of distinct conjugate moduli; cases |Lambda| >= 1 and < 1 of the "
              "Baker bound joined via h >= h_floor, B <= max(3, 2 ct_l1 h)",
              {"C_BW_gap", "ct_l1", "h_floor"}});
  return g;
}

}  // namespace

GapBoundResult tijdeman_gap(const std::vector<FieldElement>& gammas,
                            const std::vector<unsigned long>& exponents, std::size_t i1,
                            std::size_t i2, const BoundInputs& in, EmbeddingContext& ctx,
                            ConstantLedger& ledger) {
  if (i1 == i2) throw Error(errc::equal_moduli, "same embedding on both sides");
  if (exponents.size() != gammas.size())
    throw Error(errc::validation_error, "exponent count mismatch");
  bool all_zero = true;
  for (auto t : exponents)
    if (t != 0) all_zero = false;
  if (all_zero) throw Error(errc::validation_error, "zero exponent vector");

  FieldElement gt = FieldElement::one(gammas[0].field());
  for (std::size_t k = 0; k < gammas.size(); ++k) gt = gt * gammas[k].pow(exponents[k]);

  if (ctx.current().conjugate_index(i1) == i2)
    throw Error(errc::equal_moduli, "conjugate pair shares its modulus");

  prec_t prec = std::max<prec_t>(ctx.precision(), 192);
  GapConstants g = ledger.has("c_gap")
                       ? GapConstants{ledger.ball("h_floor"), ledger.ball("c_gap"),
                                      ledger.ball("C_BW_gap")}
                       : gap_constants(in, ledger, prec);

  GapBoundResult out;
  for (;;) {
    const Embeddings& E = ctx.current();
    Ball a1 = E.embed(gt, i1).abs();
    Ball a2 = E.embed(gt, i2).abs();
    if (auto lt = a1.less_than(a2)) {
      out.M = *lt ? a2 : a1;
      out.m = *lt ? a1 : a2;
      break;
    }
    if (ctx.precision() * 2 > kPrecCap)
      throw Error(errc::equal_moduli, "moduli not separable at the precision cap");
    ctx.refine();
  }
  out.c_gap = g.c_gap;
  Ball h = abs_log_height(gt, ctx).h;
  out.lower = out.M * (-(g.c_gap * h)).exp();
  out.holds = (out.M - out.m).definitely_gt(out.lower);
  return out;
}

// ---------- the composed chain ----------

EffectiveBounds compose_bounds(const BoundInputs& in, ConstantLedger& ledger, prec_t prec) {
  const unsigned long d = in.d, s = in.s, r = in.r;
  Ball one = Ball::exact(1L, prec), two = Ball::exact(2L, prec);
  Ball log2 = two.log();
  unsigned long Dup = factorial_capped(d);

  ledger.put({"t0", Rat(in.t0), "validity threshold of the asymptotic chain; t below t0 is "
                                "covered by the exhaustive search", {}});
  ledger.put({"c1", upper(in.c1),
              "max absolute row sum of the d x s conjugate log matrix (induced sup norm), so "
              "|log|sigma_i(gamma(t))|| <= c1 t",
              {}});
  ledger.put({"c2", upper(in.c2),
              "(d-1) ||pinv(Gamma)||_inf: t <= c2 log max_i |sigma_i|; the (d-1) factor "
              "converts the max-norm of the conjugate log vector to the positive part",
              {"c1"}});
  ledger.put({"c2_star", upper(in.c2_star),
              "max over leave-one-out ratio matrices of ||pinv||_inf (Case 2 engine)", {}});
  ledger.put({"c4", upper(in.c4), "||H^{-1}||_inf over the first r places", {}});
  ledger.put({"R", in.regulator, "regulator of the verified unit system", {}});
  ledger.put({"ct_l1", upper(in.ct_l1),
              "||pinv||_{l1} of the S-adic valuation matrix of the gammas", {}});
  ledger.put({"c_BG", bugeaud_gyory_constant(d, r),
              "3^{r+27}(r+1)^{7r+19} n^{2n+6r+14} with n = d", {}});

  GapConstants gap = gap_constants(in, ledger, prec);
  (void)gap;

  // c_xy: log max(|x|,|y|) <= c_xy t for t >= 1, via the Thue-solution bound
  // with H = e^{d c1 t} and B = e
  Ball cBG = Ball::exact(bugeaud_gyory_constant(d, r), prec);
  Ball Ru = upper(in.regulator);
  Ball maxlogR = Ball::max(Ru.log(), one);
  Ball c_xy = upper(cBG * Ru * maxlogR *
                    (Ru + one + Ball::exact(static_cast<long>(d), prec) * upper(in.c1)));
  ledger.put({"c_xy", c_xy,
              "coefficient of t in log max(|x|,|y|) <= c_BG R max(log R,1)(R + 1 + d c1 t), "
              "t >= 1 folded",
              {"c_BG", "R", "c1"}});

  // c_beta: |log|beta_i|| <= c_beta t for t >= t0
  Ball t0b = Ball::exact(static_cast<long>(in.t0), prec);
  Ball c_beta = upper(Ball::exact(static_cast<long>(d - 1), prec) *
                      (Ball::exact(3L, prec).log() / t0b + c_xy + upper(in.c1)));
  ledger.put({"c_beta", c_beta,
              "|log|beta_i|| <= (d-1)(log3/t0 + c_xy + c1) t: from |beta_i| <= 3 |y| e^{c1 t} "
              "and -log|beta_j| = sum of the others",
              {"c_xy", "c1", "t0"}});

  // c_bt: every Lambda coefficient bounded by c_bt t
  Ball c_bt = Ball::max(one, Ball::max(Ball::exact(3L, prec) / t0b, upper(in.c4) * c_beta));
  ledger.put({"c_bt", upper(c_bt),
              "coefficient bound B <= c_bt t: unit exponents via |b_i| <= c4 max|log beta| and "
              "the twist exponents t_i <= t",
              {"c4", "c_beta", "t0"}});

  // pair separation: |sigma_j - sigma_i| >= max(|sigma_i|,|sigma_j|)/u(t),
  // u(t) = 2 exp(C_pair log(c_bp t)), via Baker on the principal-branch
  // complex log ratio with the 2 pi i coefficient bounded by s t + 1
  Ball pi = Ball::pi(prec);
  Ball C_pair;
  {
    Ball C = baker_constant(2 * s + 1, Dup, prec);
    Ball prod = C;
    for (const auto& h : in.gamma_heights) {
      Ball hf = Ball::max(upper(h), Ball::max(upper(in.max_abs_log_gamma) + pi,
                                              Ball::exact(Rat(16, 100), prec)));
      prod = prod * hf * hf;
    }
    prod = prod * pi;  // floor for the log(-1) = i pi term
    C_pair = upper(prod);
  }
  ledger.put({"C_pair", C_pair,
              "C(2s+1, d!) times floored heights for the complex log ratio of two conjugates "
              "plus the 2 pi i term; certifies |sigma_j - sigma_i| >= max/u(t)",
              {"c1"}});
  Ball c_bp = Ball::max(Ball::exact(3L, prec) / t0b, Ball::exact(static_cast<long>(s + 1), prec));
  ledger.put({"c_bp", upper(c_bp), "coefficient bound of the pair linear form: B <= c_bp t",
              {"t0"}});

  auto log_u = [&](const Ball& t) { return log2 + C_pair * (upper(c_bp) * t).log(); };

  // c3: L <= 2^{d+2} u(t)^{d+1} exp(-t/((d-1)c2)) <= exp(-c3 t) for t >= t2
  Ball c3 = upper(one / (two * Ball::exact(static_cast<long>(d - 1), prec) * upper(in.c2)));
  ledger.put({"c3", c3,
              "Case-1 Siegel term decay rate 1/(2(d-1)c2); the polynomial prefactor "
              "2^{d+2} u(t)^{d+1} is absorbed for t >= t2",
              {"c2", "C_pair"}});
  // t2: least t >= t0 with (d+2)log2 + (d+1)log u(t) <= t/(2(d-1)c2)
  Int t2;
  {
    Ball coef = two * Ball::exact(static_cast<long>(d - 1), prec) * upper(in.c2) *
                Ball::exact(static_cast<long>(d + 1), prec) * C_pair;
    // t ~ coef log(c_bp t) + const: reuse the c log t solver on a slightly
    // inflated constant (log(c_bp t) <= log c_bp + log t <= (1 + log c_bp/log t0) log t)
    Ball infl = one + upper(c_bp).log() / Ball::exact(static_cast<long>(in.t0), prec).log();
    Ball c_for_solver = upper(coef * infl + two * Ball::exact(static_cast<long>(d - 1), prec) *
                                                upper(in.c2) *
                                                Ball::exact(static_cast<long>(2 * d + 4), prec));
    t2 = least_t_exceeding_clog(c_for_solver, in.t0, prec);
  }
  ledger.put({"t2", Rat(t2), "threshold past which the Case-1 prefactor is absorbed into c3",
              {"c3", "C_pair", "c_bp"}});

  // c5: Baker-side constant of the main Case-1 linear form (2r + 2s logs),
  // and the vanishing-subcase variants c6 (2r logs), c7/c8 (2r + 1 logs
  // with the extra log 2)
  auto eta_floor_product = [&](Ball base) {
    for (const auto& h : in.eta_heights) {
      Ball hf = Ball::max(two * upper(h), Ball::max(two * upper(in.max_abs_log_eta),
                                                    Ball::exact(Rat(16, 100), prec)));
      base = base * hf * hf;
    }
    return base;
  };
  Ball c5_main;
  {
    Ball C = baker_constant(2 * r + 2 * s, Dup, prec);
    Ball prod = eta_floor_product(C);
    for (const auto& h : in.gamma_heights) {
      Ball hf = Ball::max(two * upper(h), Ball::max(two * upper(in.max_abs_log_gamma),
                                                    Ball::exact(Rat(16, 100), prec)));
      prod = prod * hf * hf;
    }
    c5_main = upper(prod);
  }
  Ball c6_baker = upper(eta_floor_product(baker_constant(std::max(2 * r, 1ul), Dup, prec)));
  Ball c78_baker;
  {
    Ball C = baker_constant(2 * r + 1, Dup, prec);
    Ball prod = eta_floor_product(C) * Ball::max(log2, Ball::exact(Rat(16, 100), prec));
    c78_baker = upper(prod);
  }
  Ball c5 = Ball::max(c5_main, Ball::max(c6_baker, c78_baker));
  ledger.put({"c5", c5,
              "Baker-side constant: max over the main linear form (2r+2s squared-modulus "
              "logs) and the vanishing subcases, floors at D = 1, C at D = d!",
              {"C_BW", "c_bt"}});
  ledger.put({"C_BW", upper(baker_constant(2 * r + 2 * s, Dup, prec)),
              "C(2r+2s, d!) of the main Case-1 application", {}});
  ledger.put({"c6", c3,
              "decay rate of the subcase with beta_l sigma_k = beta_k sigma_l; same engine "
              "as c3",
              {"c3"}});
  ledger.put({"c7", c78_baker,
              "Baker-side constant of the subcase A=k, B=j (2r+1 logs with the log 2 term)",
              {"C_BW"}});
  ledger.put({"c8", c78_baker,
              "Baker-side constant of the subcase A=j, B=l (mirror of c7)", {"c7"}});

  // kappa: smallest sufficient integer above every Baker-side constant
  Int kappa;
  {
    Ball candidate = c5 + one;
    kappa = Int(candidate.floor_of_hi() + 1);
  }
  if (in.kappa_override) {
    ledger.put({"kappa_requested", Rat(Int(static_cast<long>(*in.kappa_override))),
                "user override; diagnostics use it, the composed bounds keep the sufficient "
                "value",
                {}});
  }
  ledger.put({"kappa", Rat(kappa), "ceil(c5) + 1: smallest sufficient integer", {"c5"}});
  Ball kappab = Ball::exact(kappa, prec);

  // thresholds tying the chain together
  Int t5;
  {
    // e^{-c3 t} <= 1/2
    Ball need = log2 / c3;
    t5 = Int(need.floor_of_hi() + 1);
    if (t5 < static_cast<long>(in.t0)) t5 = static_cast<long>(in.t0);
  }
  Int t6 = least_t_exceeding_clog(upper(kappab / c3), in.t0, prec);
  Int tE = least_t_exceeding_clog(upper(two * kappab * upper(in.c2)), in.t0, prec);
  ledger.put({"t5", Rat(t5), "e^{-c3 t} <= 1/2 from here on", {"c3"}});
  ledger.put({"t6", Rat(t6), "e^{-c3 t} <= t^{-kappa} from here on", {"c3", "kappa"}});
  ledger.put({"t_E", Rat(tE),
              "t^{2 kappa} e^{-t/c2} <= 1 from here on (needed when the largest conjugate "
              "does not meet condition (**))",
              {"c2", "kappa"}});

  // branch with |beta_j| > 1/2: t <= c2 (d log 2 + log u(t))
  Int branch2;
  {
    Ball infl = one + upper(c_bp).log() / Ball::exact(static_cast<long>(in.t0), prec).log();
    Ball c_for_solver =
        upper(upper(in.c2) * (C_pair * infl + Ball::exact(static_cast<long>(2 * d), prec)));
    branch2 = least_t_exceeding_clog(c_for_solver, in.t0, prec);
  }
  ledger.put({"branch2_bound", Rat(branch2),
              "bound for solutions whose minimal |beta_j| exceeds 1/2", {"c2", "C_pair"}});

  // main Case-1 bound: log t <= c5 log c_bt + log 12 once kappa - c5 >= 1
  Ball main_log = upper(c5 * Ball::max(upper(c_bt), one).log() + Ball::exact(12L, prec).log());
  ExtendedReal main_bound = ExtendedReal::from_log(main_log);

  // vanishing subcase A=k B=l: c3 t <= c6_baker log(c_bt t) + log 8
  Int akbl = least_t_exceeding_clog(
      upper((c6_baker * (one + Ball::max(upper(c_bt), one).log() /
                                   Ball::exact(static_cast<long>(in.t0), prec).log()) +
             Ball::exact(3L, prec)) /
            c3),
      in.t0, prec);
  ledger.put({"akbl_bound", Rat(akbl), "subcase beta_l sigma_k = beta_k sigma_l", {"c6", "c3"}});

  // vanishing subcases with the log 2 term: log t <= c78 log c_bt + log 24
  Ball sub_log = upper(c78_baker * Ball::max(upper(c_bt), one).log() + Ball::exact(24L, prec).log());
  ExtendedReal sub_bound = ExtendedReal::from_log(sub_log);

  // case 1 = max over all branches and thresholds
  Ball case1_log = main_log;
  case1_log = Ball::max(case1_log, sub_log);
  for (const Int& t : {akbl, branch2, t2, t5, t6, tE, Int(static_cast<long>(in.t0))})
    case1_log = Ball::max(case1_log, upper(Ball::exact(t, prec).log()));
  ExtendedReal case1 = ExtendedReal::from_log(upper(case1_log));
  (void)main_bound;
  (void)sub_bound;

  // case 2: least T >= t0 with T > c2_star kappa log T
  Int case2_int = least_t_exceeding_clog(upper(upper(in.c2_star) * kappab), in.t0, prec);
  ExtendedReal case2 = ExtendedReal::from_int(case2_int);
  ledger.put({"case2_bound", Rat(case2_int),
              "least T with T > c2_star kappa log T (fixed point, ceiling)",
              {"c2_star", "kappa"}});

  EffectiveBounds out;
  out.case1_bound = case1;
  out.case2_bound = case2;
  out.kappa = mpz_get_d(kappa.get_mpz_t());
  // T_max = max of the two cases (by log enclosure)
  Ball tmax_log = Ball::max(upper(case1.log_value()), upper(case2.log_value()));
  out.t_max = ExtendedReal::from_log(tmax_log);
  ledger.put({"T_max", tmax_log,
              "log of the exponent bound: max of the Case-1 and Case-2 chains (stored as a "
              "natural log; the bound itself is astronomically large by construction)",
              {"case2_bound", "c5", "kappa"}});

  // X_max: the Thue bound with H = e^{d c1 T_max}; log X_max <= log c_xy + log T_max
  Ball x_log = upper(c_xy.log() + tmax_log);
  out.x_max = ExtendedReal::from_log(x_log);
  ledger.put({"X_max", x_log,
              "log of the bound on log max(|x|,|y|): c_xy T_max with H = e^{d c1 T_max}",
              {"c_xy", "T_max"}});
  return out;
}

}  // namespace tthue
