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

#ifndef CEOLEAK_REGION_HPP
#define CEOLEAK_REGION_HPP

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ceoleak {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Shared slack tolerance for feasibility and dominance checks.
inline constexpr double kSlackTol = 1e-9;

enum class DistortionMetric { LogLoss, Quadratic, General };

inline const char* metric_name(DistortionMetric m) {
  switch (m) {
    case DistortionMetric::LogLoss: return "logloss";
    case DistortionMetric::Quadratic: return "quadratic";
    case DistortionMetric::General: return "general";
  }
  return "?";
}

/// Transform applied to the distortion coordinate before it enters the
/// half-space form: identity for log-loss/general distortion, (1/2) log2 D
/// for the quadratic Gaussian constraints.
enum class DistortionTransform { Identity, HalfLog2 };

/// A 5-tuple of compression rates, privacy-leakage rates and distortion.
/// Coordinates may be +infinity to mark an unconstrained rate. D is in bits
/// for log-loss and in squared-error units for quadratic.
struct RateTuple {
  double r1 = 0.0;
  double r2 = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double d = 0.0;
  DistortionMetric metric = DistortionMetric::LogLoss;

  double rate(int i) const {
    switch (i) {
      case 0: return r1;
      case 1: return r2;
      case 2: return l1;
      case 3: return l2;
    }
    throw std::out_of_range("RateTuple::rate index");
  }

  void validate() const {
    const char* names[4] = {"R1", "R2", "L1", "L2"};
    for (int i = 0; i < 4; ++i) {
      if (std::isnan(rate(i)) || rate(i) < 0.0) {
        throw std::invalid_argument(std::string("rate tuple: ") + names[i] +
                                    " must be >= 0");
      }
    }
    if (std::isnan(d)) throw std::invalid_argument("rate tuple: D is NaN");
    if (metric == DistortionMetric::Quadratic && !(d > 0.0)) {
      throw std::invalid_argument("rate tuple: D must be > 0 under quadratic distortion");
    }
  }
};

/// One half-space of the canonical form
///   a . (R1,R2,L1,L2) + d_coeff * g(D) >= rhs
/// with a in {0,1}^4 and d_coeff in {0,1}.
struct Constraint {
  std::array<double, 4> a{};  // coefficients on (R1, R2, L1, L2)
  double d_coeff = 0.0;
  DistortionTransform g = DistortionTransform::Identity;
  double rhs = 0.0;
  std::string label;
};

struct ConstraintSet {
  DistortionMetric metric = DistortionMetric::LogLoss;
  std::vector<Constraint> constraints;

  std::size_t size() const { return constraints.size(); }
  const Constraint& find(const std::string& label) const {
    for (const auto& c : constraints) {
      if (c.label == label) return c;
    }
    throw std::invalid_argument("no constraint labeled '" + label + "'");
  }
};

inline double apply_distortion_transform(DistortionTransform g, double d) {
  if (g == DistortionTransform::Identity) return d;
  return 0.5 * std::log2(d);  // requires d > 0, guarded by RateTuple::validate
}

/// Signed slack of the constraint at p: nonnegative means satisfied.
inline double constraint_slack(const Constraint& c, const RateTuple& p) {
  double lhs = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (c.a[i] != 0.0) lhs += c.a[i] * p.rate(i);
  }
  if (c.d_coeff != 0.0) lhs += c.d_coeff * apply_distortion_transform(c.g, p.d);
  return lhs - c.rhs;
}

struct FeasibilityReport {
  bool feasible = true;
  std::vector<std::pair<std::string, double>> violations;  // (label, negative slack)
  double max_violation = 0.0;
};

/// Evaluates all constraints at p; a constraint is violated when its slack is
/// below -eps.
inline FeasibilityReport evaluate(const ConstraintSet& cs, const RateTuple& p,
                                  double eps = kSlackTol) {
  if (p.metric != cs.metric) {
    throw std::invalid_argument(std::string("metric mismatch: tuple is ") +
                                metric_name(p.metric) + ", constraint set is " +
                                metric_name(cs.metric));
  }
  p.validate();
  FeasibilityReport report;
  for (const Constraint& c : cs.constraints) {
    const double slack = constraint_slack(c, p);
    if (slack < -eps) {
      report.feasible = false;
      report.violations.emplace_back(c.label, slack);
      report.max_violation = std::max(report.max_violation, -slack);
    }
  }
  return report;
}

/// Coordinate-wise "p is at least as good as q" with slack; lower is better
/// in every coordinate. Equal points dominate each other.
inline bool dominates(const RateTuple& p, const RateTuple& q, double eps = kSlackTol) {
  for (int i = 0; i < 4; ++i) {
    if (!(p.rate(i) <= q.rate(i) + eps)) return false;
  }
  return p.d <= q.d + eps;
}

/// Minimal subset of `points` under `dominates`, preserving input order.
/// Of two mutually dominating (near-equal) points the earlier one survives.
inline std::vector<RateTuple> pareto_filter(const std::vector<RateTuple>& points,
                                            double eps = kSlackTol) {
  std::vector<RateTuple> kept;
  kept.reserve(points.size());
  for (const RateTuple& p : points) {
    bool is_dominated = false;
    for (const RateTuple& k : kept) {
      if (dominates(k, p, eps)) {
        is_dominated = true;
        break;
      }
    }
    if (is_dominated) continue;
    std::erase_if(kept, [&](const RateTuple& k) { return dominates(p, k, eps); });
    kept.push_back(p);
  }
  return kept;
}

}  // namespace ceoleak

#endif  // CEOLEAK_REGION_HPP
