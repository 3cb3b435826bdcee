// Copyright 2026 The ceoleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CEOLEAK_GAUSSIAN_HPP
#define CEOLEAK_GAUSSIAN_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ceoleak/region.hpp"

namespace ceoleak {

/// Scalar Gaussian CEO source: X ~ N(0, sigma2_x) observed through
/// Y_k = X + N_k with N_k ~ N(0, sigma2_nk).
struct GaussianCeoParams {
  double sigma2_x = 1.0;
  double sigma2_n1 = 1.0;
  double sigma2_n2 = 1.0;

  double sigma2_n(int k) const { return k == 1 ? sigma2_n1 : sigma2_n2; }

  void validate() const {
    if (!(sigma2_x > 0.0)) throw std::invalid_argument("sigma2_x must be > 0");
    if (!(sigma2_n1 > 0.0)) throw std::invalid_argument("sigma2_n1 must be > 0");
    if (!(sigma2_n2 > 0.0)) throw std::invalid_argument("sigma2_n2 must be > 0");
  }
};

/// Auxiliary rate pair; +infinity marks the full-observation limit.
struct AuxRates {
  double r1 = 0.0;
  double r2 = 0.0;
  double of(int k) const { return k == 1 ? r1 : r2; }
};

/// Index pair K subseteq S subseteq {1,2} selecting which compression rates
/// (K) and leakage rates (S \ K) a constraint mixes; S^c drives the noise sum.
struct SubsetPair {
  std::array<bool, 2> in_s{};
  std::array<bool, 2> in_k{};

  void validate() const {
    for (int k = 0; k < 2; ++k) {
      if (in_k[k] && !in_s[k]) throw std::invalid_argument("SubsetPair: K must be within S");
    }
  }

  bool leak(int k) const { return in_s[k - 1] && !in_k[k - 1]; }  // k in S \ K
  bool rate(int k) const { return in_k[k - 1]; }
  bool noise(int k) const { return !in_s[k - 1]; }  // k in S^c

  std::string label() const {
    auto set_str = [](const std::array<bool, 2>& s) {
      std::string out = "{";
      if (s[0]) out += "1";
      if (s[1]) out += (out.size() > 1 ? ",2" : "2");
      return out + "}";
    };
    return "S=" + set_str(in_s) + ",K=" + set_str(in_k);
  }
};

/// The nine (S, K) pairs in a fixed enumeration order.
inline const std::array<SubsetPair, 9>& all_subset_pairs() {
  static const std::array<SubsetPair, 9> pairs = [] {
    std::array<SubsetPair, 9> out{};
    int i = 0;
    for (int s = 0; s < 4; ++s) {
      for (int k = 0; k < 4; ++k) {
        if ((k & s) != k) continue;  // K must be a subset of S
        out[i].in_s = {(s & 1) != 0, (s & 2) != 0};
        out[i].in_k = {(k & 1) != 0, (k & 2) != 0};
        ++i;
      }
    }
    return out;
  }();
  return pairs;
}

/// r_k = (1/2) log2((sigma2 + beta) / beta); beta = +inf corresponds to r = 0.
/// log1p keeps relative precision when beta dominates sigma2.
inline double beta_to_r(double sigma2_nk, double beta) {
  if (std::isinf(beta)) return 0.0;
  if (!(beta > 0.0)) throw std::invalid_argument("beta_to_r: beta must be > 0");
  return 0.5 * std::log1p(sigma2_nk / beta) / std::numbers::ln2;
}

/// Inverse of beta_to_r: beta = sigma2 / (2^{2r} - 1); r = 0 maps to the
/// beta = +inf sentinel.
inline double r_to_beta(double sigma2_nk, double r) {
  if (r < 0.0) throw std::invalid_argument("r_to_beta: r must be >= 0");
  if (r == 0.0) return kInf;
  if (std::isinf(r)) return 0.0;
  return sigma2_nk / std::expm1(2.0 * r * std::numbers::ln2);
}

/// h(X) = (1/2) log2(2 pi e sigma2_x) in bits.
inline double gaussian_source_entropy(const GaussianCeoParams& params) {
  return 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * params.sigma2_x);
}

/// h(X | U_set, Q) = (1/2) log2 2 pi e (1/sigma2_x +
///   sum_{k in set} (1 - 2^{-2 r_k}) / sigma2_nk)^{-1}.
inline double gaussian_cond_entropy(const GaussianCeoParams& params,
                                    std::array<bool, 2> active_set, const AuxRates& rates) {
  params.validate();
  double inv = 1.0 / params.sigma2_x;
  for (int k = 1; k <= 2; ++k) {
    if (active_set[k - 1]) {
      const double r = rates.of(k);
      if (r < 0.0) throw std::invalid_argument("gaussian_cond_entropy: r must be >= 0");
      inv += (1.0 - std::exp2(-2.0 * r)) / params.sigma2_n(k);
    }
  }
  return 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e / inv);
}

/// One constraint of the Gaussian region at the given (S, K) pair:
///   sum_{k in K} R_k + sum_{k' in S\K} L_{k'} + g(D) >=
///   sum_{k in K} r_k + (1/2) log2 [2 pi e] (1/sigma2_x +
///     sum_{j in S^c} (1 - 2^{-2 r_j}) / sigma2_nj)^{-1}
/// with g = identity and the 2 pi e factor under log-loss, g = (1/2) log2 D
/// and no 2 pi e factor under quadratic distortion.
inline Constraint gaussian_rhs(const GaussianCeoParams& params, const AuxRates& rates,
                               const SubsetPair& pair, DistortionMetric metric) {
  params.validate();
  pair.validate();
  if (rates.r1 < 0.0 || rates.r2 < 0.0) {
    throw std::invalid_argument("gaussian_rhs: auxiliary rates must be >= 0");
  }
  if (metric == DistortionMetric::General) {
    throw std::invalid_argument("gaussian_rhs: metric must be logloss or quadratic");
  }

  double inv = 1.0 / params.sigma2_x;
  for (int k = 1; k <= 2; ++k) {
    if (pair.noise(k)) inv += (1.0 - std::exp2(-2.0 * rates.of(k))) / params.sigma2_n(k);
  }
  double rhs = 0.0;
  for (int k = 1; k <= 2; ++k) {
    if (pair.rate(k)) rhs += rates.of(k);
  }
  if (metric == DistortionMetric::LogLoss) {
    rhs += 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e / inv);
  } else {
    rhs += 0.5 * std::log2(1.0 / inv);
  }

  Constraint c;
  c.a = {pair.rate(1) ? 1.0 : 0.0, pair.rate(2) ? 1.0 : 0.0, pair.leak(1) ? 1.0 : 0.0,
         pair.leak(2) ? 1.0 : 0.0};
  c.d_coeff = 1.0;
  c.g = metric == DistortionMetric::Quadratic ? DistortionTransform::HalfLog2
                                              : DistortionTransform::Identity;
  c.rhs = rhs;
  c.label = pair.label();
  return c;
}

/// All nine constraints for the given auxiliary rates.
inline ConstraintSet all_constraints(const GaussianCeoParams& params, const AuxRates& rates,
                                     DistortionMetric metric) {
  ConstraintSet cs;
  cs.metric = metric;
  for (const SubsetPair& pair : all_subset_pairs()) {
    cs.constraints.push_back(gaussian_rhs(params, rates, pair, metric));
  }
  return cs;
}

/// Smallest D satisfying the constraint at the given rates: rhs - a.x under
/// the identity transform, 2^{2(rhs - a.x)} under the half-log transform.
/// Returns -infinity (no restriction) when an unconstrained (+inf) rate
/// participates.
inline double constraint_distortion_lower_bound(const Constraint& c, double r1, double r2,
                                                double l1, double l2) {
  const double x[4] = {r1, r2, l1, l2};
  double ax = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (c.a[i] != 0.0) ax += c.a[i] * x[i];
  }
  if (std::isinf(ax)) return -kInf;
  const double margin = c.rhs - ax;
  return c.g == DistortionTransform::Identity ? margin : std::exp2(2.0 * margin);
}

/// Search configuration for the (r1, r2) optimizations: a dense grid pass
/// followed by coordinate descent with step halving.
struct SearchConfig {
  int grid_points = 201;         // per axis, >= 2
  double r_max = -1.0;           // <= 0 selects sum of finite rates + 4 bits
  double refine_step_tol = 1e-6; // final coordinate-descent step
  double slack_tol = 1e-9;       // membership feasibility slack

  void validate() const {
    if (grid_points < 2) throw std::invalid_argument("search config: grid_points must be >= 2");
    if (!(refine_step_tol > 0.0)) {
      throw std::invalid_argument("search config: refine_step_tol must be > 0");
    }
    if (!(slack_tol > 0.0)) throw std::invalid_argument("search config: slack_tol must be > 0");
  }
};

namespace detail {

inline double resolve_r_max(const SearchConfig& cfg, std::initializer_list<double> rates) {
  if (cfg.r_max > 0.0) return cfg.r_max;
  double sum = 0.0;
  for (double r : rates) {
    if (std::isfinite(r)) sum += r;
  }
  return sum + 4.0;
}

/// Evaluates all nine right-hand sides at (r1, r2) without allocation.
/// Layout of per-constraint data follows all_subset_pairs() order.
class GaussianEvaluator {
 public:
  GaussianEvaluator(const GaussianCeoParams& params, DistortionMetric metric, double rate1,
                    double rate2, double leak1, double leak2)
      : inv_x_(1.0 / params.sigma2_x), n1_(params.sigma2_n1), n2_(params.sigma2_n2),
        quadratic_(metric == DistortionMetric::Quadratic) {
    params.validate();
    const double x[4] = {rate1, rate2, leak1, leak2};
    const auto& pairs = all_subset_pairs();
    for (int i = 0; i < 9; ++i) {
      const SubsetPair& p = pairs[i];
      use_r_[i] = {p.rate(1), p.rate(2)};
      noise_[i] = {p.noise(1), p.noise(2)};
      double ax = 0.0;
      const bool coeffs[4] = {p.rate(1), p.rate(2), p.leak(1), p.leak(2)};
      for (int c = 0; c < 4; ++c) {
        if (coeffs[c]) ax += x[c];
      }
      ax_[i] = ax;
      active_[i] = !std::isinf(ax);
    }
  }

  /// rhs in bits; `e1`, `e2` are the precomputed (1 - 2^{-2 r_k}) / sigma2_nk.
  double rhs(int i, double r1, double r2, double e1, double e2) const {
    double inv = inv_x_;
    if (noise_[i][0]) inv += e1;
    if (noise_[i][1]) inv += e2;
    double v = 0.5 * std::log2((quadratic_ ? 1.0 : k2PiE) / inv);
    if (use_r_[i][0]) v += r1;
    if (use_r_[i][1]) v += r2;
    return v;
  }

  /// Per-constraint D lower bound at index i of all_subset_pairs() order;
  /// -infinity (or 0 under the quadratic transform) when the constraint is
  /// vacuous at these rates.
  double distortion_bound(int i, double r1, double r2) const {
    if (!active_[i]) return quadratic_ ? 0.0 : -kInf;
    const double e1 = (1.0 - std::exp2(-2.0 * r1)) / n1_;
    const double e2 = (1.0 - std::exp2(-2.0 * r2)) / n2_;
    const double margin = rhs(i, r1, r2, e1, e2) - ax_[i];
    return quadratic_ ? std::exp2(2.0 * margin) : margin;
  }

  /// max over active constraints of the per-constraint D lower bound.
  double min_distortion_at(double r1, double r2) const {
    const double e1 = (1.0 - std::exp2(-2.0 * r1)) / n1_;
    const double e2 = (1.0 - std::exp2(-2.0 * r2)) / n2_;
    double best = -kInf;
    for (int i = 0; i < 9; ++i) {
      if (!active_[i]) continue;
      const double margin = rhs(i, r1, r2, e1, e2) - ax_[i];
      best = std::max(best, margin);
    }
    return quadratic_ ? std::exp2(2.0 * best) : best;
  }

  /// min over active constraints of slack at distortion level g(D) = gd.
  double min_slack_at(double r1, double r2, double gd) const {
    const double e1 = (1.0 - std::exp2(-2.0 * r1)) / n1_;
    const double e2 = (1.0 - std::exp2(-2.0 * r2)) / n2_;
    double worst = kInf;
    for (int i = 0; i < 9; ++i) {
      if (!active_[i]) continue;
      worst = std::min(worst, ax_[i] + gd - rhs(i, r1, r2, e1, e2));
    }
    return worst;
  }

 private:
  static constexpr double k2PiE = 2.0 * std::numbers::pi * std::numbers::e;
  double inv_x_;
  double n1_, n2_;
  bool quadratic_;
  std::array<std::array<bool, 2>, 9> use_r_{};
  std::array<std::array<bool, 2>, 9> noise_{};
  std::array<double, 9> ax_{};
  std::array<bool, 9> active_{};
};

struct SearchPoint {
  double r1 = 0.0;
  double r2 = 0.0;
  double value = kInf;
};

/// Pattern search from `start` over the eight compass directions, halving the
/// step until refine_step_tol.
template <typename F>
SearchPoint coordinate_refine(const F& f, SearchPoint start, double step0, double r_max,
                              double step_tol) {
  SearchPoint cur = start;
  for (double step = step0; step >= step_tol; step *= 0.5) {
    bool moved = true;
    while (moved) {
      moved = false;
      const double cand[8][2] = {{cur.r1 + step, cur.r2},
                                 {cur.r1 - step, cur.r2},
                                 {cur.r1, cur.r2 + step},
                                 {cur.r1, cur.r2 - step},
                                 {cur.r1 + step, cur.r2 + step},
                                 {cur.r1 + step, cur.r2 - step},
                                 {cur.r1 - step, cur.r2 + step},
                                 {cur.r1 - step, cur.r2 - step}};
      SearchPoint best = cur;
      for (const auto& c : cand) {
        const double a = std::clamp(c[0], 0.0, r_max);
        const double b = std::clamp(c[1], 0.0, r_max);
        const double v = f(a, b);
        if (v < best.value) best = {a, b, v};
      }
      if (best.value < cur.value) {
        cur = best;
        moved = true;
      }
    }
  }
  return cur;
}

/// Exact minimizer for the convex case. Every per-constraint bound is convex
/// in (r1, r2): the noise sum is concave increasing in each r_j, so its
/// negated log is convex, the K-rate sum is linear, and exp2 preserves
/// convexity for the quadratic transform. Nested ternary search over a convex
/// partial minimum therefore converges to the global optimum.
template <typename F1>
double ternary_min_1d(const F1& f, double lo, double hi, double width_tol) {
  for (int it = 0; it < 200 && hi - lo > width_tol; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    const double f1 = f(m1);
    const double f2 = f(m2);
    if (f1 < f2) {
      hi = m2;
    } else if (f1 > f2) {
      lo = m1;
    } else {
      lo = m1;
      hi = m2;
    }
  }
  return 0.5 * (lo + hi);
}

template <typename F>
SearchPoint nested_ternary_minimize(const F& f, double r_max, double width_tol) {
  const auto inner_argmin = [&](double r1) {
    return ternary_min_1d([&](double r2) { return f(r1, r2); }, 0.0, r_max, width_tol);
  };
  const double r1 = ternary_min_1d(
      [&](double a) { return f(a, inner_argmin(a)); }, 0.0, r_max, width_tol);
  const double r2 = inner_argmin(r1);
  return SearchPoint{r1, r2, f(r1, r2)};
}

/// Dense row-major grid scan, pattern-search refinement, then a convex polish
/// via nested ternary search; deterministic for a fixed configuration (first
/// strict improvement wins grid ties).
template <typename F>
SearchPoint grid_refine_minimize(const F& f, double r_max, const SearchConfig& cfg) {
  cfg.validate();
  const int n = cfg.grid_points;
  const double spacing = r_max / (n - 1);
  SearchPoint best;
  for (int i = 0; i < n; ++i) {
    const double r1 = i * spacing;
    for (int j = 0; j < n; ++j) {
      const double r2 = j * spacing;
      const double v = f(r1, r2);
      if (v < best.value) best = {r1, r2, v};
    }
  }
  best = coordinate_refine(f, best, spacing, r_max, cfg.refine_step_tol);
  const SearchPoint polished = nested_ternary_minimize(f, r_max, 1e-12);
  return polished.value < best.value ? polished : best;
}

inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("CEOLEAK_MAX_WORKERS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
  }
  return n;
}

}  // namespace detail

/// One row of a leakage/distortion trade-off curve.
struct CurveRow {
  double l1 = 0.0;
  double min_d = 0.0;
  AuxRates witness;
};

/// Minimum distortion over the auxiliary-rate search domain with the given
/// rate budget. An absent l2 (std::nullopt) relaxes every constraint that
/// involves L2; l1 may be +infinity to relax L1 likewise.
inline CurveRow min_distortion(const GaussianCeoParams& params, double rate1, double rate2,
                               double leak1, std::optional<double> leak2,
                               DistortionMetric metric, const SearchConfig& cfg = {}) {
  if (metric == DistortionMetric::General) {
    throw std::invalid_argument("min_distortion: metric must be logloss or quadratic");
  }
  const double l2 = leak2.value_or(kInf);
  const detail::GaussianEvaluator eval(params, metric, rate1, rate2, leak1, l2);
  const double r_max = detail::resolve_r_max(cfg, {rate1, rate2, leak1, l2});
  const auto point = detail::grid_refine_minimize(
      [&](double a, double b) { return eval.min_distortion_at(a, b); }, r_max, cfg);
  return CurveRow{leak1, point.value, AuxRates{point.r1, point.r2}};
}

struct MembershipResult {
  bool member = false;
  AuxRates witness;
  double best_slack = -kInf;  // min constraint slack at the witness, bits
};

/// Tests whether the tuple lies in the Gaussian region: true iff some
/// auxiliary rate pair in [0, r_max]^2 satisfies all nine constraints with
/// slack >= -slack_tol.
inline MembershipResult membership(const GaussianCeoParams& params, const RateTuple& tuple,
                                   DistortionMetric metric, const SearchConfig& cfg = {}) {
  if (metric == DistortionMetric::General) {
    throw std::invalid_argument("membership: metric must be logloss or quadratic");
  }
  if (tuple.metric != metric) {
    throw std::invalid_argument(std::string("membership: tuple metric is ") +
                                metric_name(tuple.metric) + ", expected " +
                                metric_name(metric));
  }
  tuple.validate();
  const detail::GaussianEvaluator eval(params, metric, tuple.r1, tuple.r2, tuple.l1,
                                       tuple.l2);
  const double gd = apply_distortion_transform(metric == DistortionMetric::Quadratic
                                                   ? DistortionTransform::HalfLog2
                                                   : DistortionTransform::Identity,
                                               tuple.d);
  const double r_max = detail::resolve_r_max(cfg, {tuple.r1, tuple.r2, tuple.l1, tuple.l2});
  const auto point = detail::grid_refine_minimize(
      [&](double a, double b) { return -eval.min_slack_at(a, b, gd); }, r_max, cfg);
  MembershipResult res;
  res.witness = AuxRates{point.r1, point.r2};
  res.best_slack = -point.value;
  res.member = res.best_slack >= -cfg.slack_tol;
  return res;
}

/// Minimum-distortion sweep over an L1 grid with L2 relaxed unless given.
/// Rows are computed independently (optionally in parallel) and then
/// stitched so each row also sees the previous row's witness; min_d is
/// therefore nonincreasing along the sweep.
inline std::vector<CurveRow> leakage_curve(const GaussianCeoParams& params, double rate1,
                                           double rate2, const std::vector<double>& l1_grid,
                                           DistortionMetric metric,
                                           const SearchConfig& cfg = {},
                                           std::optional<double> leak2 = std::nullopt) {
  std::vector<CurveRow> rows(l1_grid.size());
  const unsigned workers =
      std::min<unsigned>(detail::worker_count(), std::max<std::size_t>(l1_grid.size(), 1));
  auto compute_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      rows[i] = min_distortion(params, rate1, rate2, l1_grid[i], leak2, metric, cfg);
    }
  };
  if (workers <= 1 || l1_grid.size() < 2) {
    compute_range(0, l1_grid.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (l1_grid.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(l1_grid.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(compute_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  // Stitch: relaxing L1 can only help, so the previous witness is always a
  // valid candidate for the next row.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double l2 = leak2.value_or(kInf);
    const detail::GaussianEvaluator eval(params, metric, rate1, rate2, l1_grid[i], l2);
    const double r_max = detail::resolve_r_max(cfg, {rate1, rate2, l1_grid[i], l2});
    const double spacing = r_max / (cfg.grid_points - 1);
    const auto f = [&](double a, double b) { return eval.min_distortion_at(a, b); };
    const double w1 = std::clamp(rows[i - 1].witness.r1, 0.0, r_max);
    const double w2 = std::clamp(rows[i - 1].witness.r2, 0.0, r_max);
    detail::SearchPoint seeded{w1, w2, f(w1, w2)};
    seeded = detail::coordinate_refine(f, seeded, spacing, r_max, cfg.refine_step_tol);
    if (seeded.value < rows[i].min_d) {
      rows[i].min_d = seeded.value;
      rows[i].witness = AuxRates{seeded.r1, seeded.r2};
    }
  }
  return rows;
}

struct SaturationResult {
  bool found = false;
  double l1_star = kInf;
  double d_unconstrained = 0.0;
};

/// Smallest grid L1 past which the curve stays within `tol` of the
/// L1-unconstrained minimum distortion.
inline SaturationResult saturation_threshold(const GaussianCeoParams& params, double rate1,
                                             double rate2, DistortionMetric metric,
                                             double tol, const std::vector<double>& l1_grid,
                                             const SearchConfig& cfg = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("saturation_threshold: tol must be > 0");
  if (l1_grid.empty()) throw std::invalid_argument("saturation_threshold: empty L1 grid");
  SaturationResult res;
  res.d_unconstrained =
      min_distortion(params, rate1, rate2, kInf, std::nullopt, metric, cfg).min_d;
  const std::vector<CurveRow> rows = leakage_curve(params, rate1, rate2, l1_grid, metric, cfg);
  std::size_t first_ok = rows.size();
  for (std::size_t i = rows.size(); i-- > 0;) {
    if (std::abs(rows[i].min_d - res.d_unconstrained) < tol) {
      first_ok = i;
    } else {
      break;
    }
  }
  if (first_ok < rows.size()) {
    res.found = true;
    res.l1_star = l1_grid[first_ok];
  }
  return res;
}

/// Built-in parameter presets for the bundled curve study; selected by the
/// CLI's --table1 flag.
struct CurvePreset {
  double sigma2_x;
  double sigma2_n1;
  double sigma2_n2;
  double rate1;
  double rate2;
};

inline const std::array<CurvePreset, 4>& curve_presets() {
  static const std::array<CurvePreset, 4> rows = {{
      {2.0, 1.0, 1.0, 0.5, 0.5},
      {2.0, 1.0, 1.0, 1.0, 0.5},
      {5.0, 1.0, 1.0, 0.5, 0.5},
      {5.0, 1.0, 1.0, 1.0, 0.5},
  }};
  return rows;
}

}  // namespace ceoleak

#endif  // CEOLEAK_GAUSSIAN_HPP
