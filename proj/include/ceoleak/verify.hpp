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

#ifndef CEOLEAK_VERIFY_HPP
#define CEOLEAK_VERIFY_HPP

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "ceoleak/discrete_bounds.hpp"
#include "ceoleak/gaussian.hpp"
#include "ceoleak/info_core.hpp"
#include "ceoleak/region.hpp"
#include "ceoleak/sampling.hpp"

namespace ceoleak {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyConfig {
  int instances = 100;
  int samples_per_instance = 5;
  double xi_tol = 1e-10;
  double slack_tol = kSlackTol;
  double saturation_tol = 1e-6;
  std::optional<double> sigma2_x_override;
  SearchConfig search;
};

namespace detail {

inline std::string fmt_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace detail

/// xi_1, xi_2 vanish on every joint assembled from the inner-bound
/// factorization; checked over seeded binary instances with |Q| in {1,2}.
inline CheckResult check_xi_vanishing(std::uint64_t seed, const VerifyConfig& cfg = {}) {
  SeededRng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < cfg.instances; ++i) {
    const int nq = 1 + (i % 2);
    const DiscreteCeoModel model = random_binary_model(rng, /*with_eve_si=*/true);
    const AuxiliarySystem aux = random_aux(rng, model, nq, 2, 2, 2, 2);
    const JointDistribution joint = build_joint(model, aux);
    worst = std::max({worst, xi_k(joint, 1), xi_k(joint, 2)});
  }
  CheckResult res;
  res.name = "xi";
  res.pass = worst < cfg.xi_tol;
  res.detail = std::to_string(cfg.instances) + " factorized instances, max xi_k = " +
               detail::fmt_sci(worst) + " (tolerance " + detail::fmt_sci(cfg.xi_tol) + ")";
  return res;
}

/// Boundary points of the no-SI inner bound satisfy the matching outer bound
/// for the same auxiliaries.
inline CheckResult check_inner_in_outer(std::uint64_t seed, const VerifyConfig& cfg = {}) {
  SeededRng rng(seed);
  double worst = 0.0;
  int tested = 0;
  for (int i = 0; i < cfg.instances; ++i) {
    const int nq = 1 + (i % 2);
    const DiscreteCeoModel model = random_binary_model(rng, /*with_eve_si=*/false);
    const AuxiliarySystem aux = random_aux(rng, model, nq, 2, 2, 1, 1);
    const ConstraintSet inner = logloss_inner_no_si(model, aux);
    const ConstraintSet outer = logloss_outer_no_si(model, aux);
    for (int s = 0; s < cfg.samples_per_instance; ++s) {
      const RateTuple p = sample_inner_boundary_point(inner, rng);
      const FeasibilityReport rep = evaluate(outer, p, cfg.slack_tol);
      worst = std::max(worst, rep.max_violation);
      ++tested;
    }
  }
  CheckResult res;
  res.name = "inner-outer";
  res.pass = worst <= 0.0;
  res.detail = std::to_string(tested) + " inner boundary points against the outer bound, " +
               "max violation = " + detail::fmt_sci(worst) + " (slack " +
               detail::fmt_sci(cfg.slack_tol) + ")";
  return res;
}

/// All ten outer extreme points are feasible for the outer bound and
/// dominated by their prescribed inner points.
inline CheckResult check_dominance(std::uint64_t seed, const VerifyConfig& cfg = {}) {
  SeededRng rng(seed);
  int failures = 0;
  std::string first_failure;
  for (int i = 0; i < cfg.instances; ++i) {
    const int nq = 1 + (i % 2);
    const DiscreteCeoModel model = random_binary_model(rng, /*with_eve_si=*/false);
    const AuxiliarySystem aux = random_aux(rng, model, nq, 2, 2, 1, 1);
    const ConstraintSet outer = logloss_outer_no_si(model, aux);
    for (const LabeledPoint& lp : extreme_points(model, aux)) {
      if (!evaluate(outer, lp.point, cfg.slack_tol).feasible) {
        ++failures;
        if (first_failure.empty()) {
          first_failure = lp.label + " infeasible for the outer bound (instance " +
                          std::to_string(i) + ")";
        }
      }
    }
    const DominanceReport report = dominance_report(model, aux, cfg.slack_tol);
    if (!report.all_dominated) {
      ++failures;
      if (first_failure.empty()) {
        for (const DominanceEntry& e : report.entries) {
          if (!e.dominated) {
            first_failure = e.point_label + " not dominated: coordinate " +
                            e.violated_coordinate + " exceeds by " +
                            detail::fmt_sci(e.violation) + " (instance " +
                            std::to_string(i) + ")";
            break;
          }
        }
      }
    }
  }
  CheckResult res;
  res.name = "dominance";
  res.pass = failures == 0;
  res.detail = std::to_string(cfg.instances) + " instances x 10 extreme points";
  if (failures > 0) res.detail += "; first failure: " + first_failure;
  return res;
}

/// Each bundled Gaussian preset saturates: past a finite L1* the minimum
/// distortion stays within tolerance of the L1-unconstrained value.
inline CheckResult check_saturation(std::uint64_t /*seed*/, const VerifyConfig& cfg = {}) {
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(0.05 * i);
  bool pass = true;
  std::string detail;
  for (const CurvePreset& preset : curve_presets()) {
    GaussianCeoParams params{preset.sigma2_x, preset.sigma2_n1, preset.sigma2_n2};
    if (cfg.sigma2_x_override) params.sigma2_x = *cfg.sigma2_x_override;
    for (DistortionMetric metric : {DistortionMetric::LogLoss, DistortionMetric::Quadratic}) {
      const SaturationResult sat = saturation_threshold(
          params, preset.rate1, preset.rate2, metric, cfg.saturation_tol, grid, cfg.search);
      if (!sat.found) pass = false;
      if (!detail.empty()) detail += "; ";
      char buf[160];
      std::snprintf(buf, sizeof buf, "sx2=%g R=(%g,%g) %s: L1*=%s", params.sigma2_x,
                    preset.rate1, preset.rate2, metric_name(metric),
                    sat.found ? detail::fmt_sci(sat.l1_star).c_str() : "none");
      detail += buf;
    }
  }
  CheckResult res;
  res.name = "saturation";
  res.pass = pass;
  res.detail = detail;
  return res;
}

inline const std::vector<std::string>& available_checks() {
  static const std::vector<std::string> names = {"xi", "inner-outer", "dominance",
                                                 "saturation"};
  return names;
}

inline CheckResult run_check(const std::string& name, std::uint64_t seed,
                             const VerifyConfig& cfg = {}) {
  if (name == "xi") return check_xi_vanishing(seed, cfg);
  if (name == "inner-outer") return check_inner_in_outer(seed, cfg);
  if (name == "dominance") return check_dominance(seed, cfg);
  if (name == "saturation") return check_saturation(seed, cfg);
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace ceoleak

#endif  // CEOLEAK_VERIFY_HPP
