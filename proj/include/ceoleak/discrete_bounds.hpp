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

#ifndef CEOLEAK_DISCRETE_BOUNDS_HPP
#define CEOLEAK_DISCRETE_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ceoleak/info_core.hpp"
#include "ceoleak/model.hpp"
#include "ceoleak/region.hpp"

namespace ceoleak {

/// Named map of every single-letter information term used by the discrete
/// bounds, evaluated on one joint distribution. Insertion order is stable so
/// reports serialize deterministically.
struct InformationQuantities {
  std::vector<std::pair<std::string, double>> values;

  double at(const std::string& name) const {
    for (const auto& [k, v] : values) {
      if (k == name) return v;
    }
    throw std::invalid_argument("unknown information quantity: " + name);
  }

  void set(std::string name, double v) { values.emplace_back(std::move(name), v); }
};

/// xi_k = I(V_k ; U_{k'} | Y_k, Y_{k'}, Q) for k' = 3 - k. Vanishes whenever
/// the joint factorizes through the V_k - U_k - Y_k chains.
inline double xi_k(const JointDistribution& joint, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("xi_k: agent index must be 1 or 2");
  const AxisSet vk = (k == 1) ? AxisSet{Axis::V1} : AxisSet{Axis::V2};
  const AxisSet u_other = (k == 1) ? AxisSet{Axis::U2} : AxisSet{Axis::U1};
  return conditional_mutual_information(joint, vk, u_other,
                                        AxisSet{Axis::Y1, Axis::Y2, Axis::Q});
}

/// xi' = I(V1 ; V2 | Q).
inline double xi_prime(const JointDistribution& joint) {
  return conditional_mutual_information(joint, AxisSet{Axis::V1}, AxisSet{Axis::V2},
                                        AxisSet{Axis::Q});
}

inline InformationQuantities compute_information_quantities(const JointDistribution& j) {
  const AxisSet Q{Axis::Q}, X{Axis::X}, Z{Axis::Z};
  const AxisSet Y1{Axis::Y1}, Y2{Axis::Y2}, U1{Axis::U1}, U2{Axis::U2};
  const AxisSet V1{Axis::V1}, V2{Axis::V2};
  const AxisSet U1U2{Axis::U1, Axis::U2}, V1V2{Axis::V1, Axis::V2};
  const AxisSet U1Q{Axis::U1, Axis::Q}, U2Q{Axis::U2, Axis::Q};
  const AxisSet V1Q{Axis::V1, Axis::Q}, V2Q{Axis::V2, Axis::Q};
  const AxisSet XQ{Axis::X, Axis::Q};

  InformationQuantities iq;
  iq.set("H(X)", entropy(j, X));
  iq.set("H(X|U1,Q)", conditional_entropy(j, X, U1Q));
  iq.set("H(X|U2,Q)", conditional_entropy(j, X, U2Q));
  iq.set("H(X|U1,U2,Q)", conditional_entropy(j, X, AxisSet{Axis::U1, Axis::U2, Axis::Q}));

  iq.set("I(Y1;U1|U2,Q)", conditional_mutual_information(j, Y1, U1, U2Q));
  iq.set("I(Y2;U2|U1,Q)", conditional_mutual_information(j, Y2, U2, U1Q));
  iq.set("I(Y1,Y2;U1,U2|Q)",
         conditional_mutual_information(j, AxisSet{Axis::Y1, Axis::Y2}, U1U2, Q));
  iq.set("I(X;U1|U2,Q)", conditional_mutual_information(j, X, U1, U2Q));
  iq.set("I(X;U2|U1,Q)", conditional_mutual_information(j, X, U2, U1Q));
  iq.set("I(X;U1,U2|Q)", conditional_mutual_information(j, X, U1U2, Q));
  iq.set("I(Y1,X;U1,U2|Q)",
         conditional_mutual_information(j, AxisSet{Axis::Y1, Axis::X}, U1U2, Q));
  iq.set("I(X,Y2;U1,U2|Q)",
         conditional_mutual_information(j, AxisSet{Axis::X, Axis::Y2}, U1U2, Q));

  iq.set("I(Y1;U1|X,Q)", conditional_mutual_information(j, Y1, U1, XQ));
  iq.set("I(Y2;U2|X,Q)", conditional_mutual_information(j, Y2, U2, XQ));
  iq.set("I(Y1;U1|Q)", conditional_mutual_information(j, Y1, U1, Q));
  iq.set("I(Y2;U2|Q)", conditional_mutual_information(j, Y2, U2, Q));
  iq.set("I(X;U1|Q)", conditional_mutual_information(j, X, U1, Q));
  iq.set("I(X;U2|Q)", conditional_mutual_information(j, X, U2, Q));

  iq.set("I(V1;U2|Q)", conditional_mutual_information(j, V1, U2, Q));
  iq.set("I(V2;U1|Q)", conditional_mutual_information(j, V2, U1, Q));
  iq.set("I(V1;V2|Q)", conditional_mutual_information(j, V1, V2, Q));
  iq.set("I(Z;V1|Q)", conditional_mutual_information(j, Z, V1, Q));
  iq.set("I(Z;V2|Q)", conditional_mutual_information(j, Z, V2, Q));
  iq.set("I(X;V1|V2,Q)", conditional_mutual_information(j, X, V1, V2Q));
  iq.set("I(X;V2|V1,Q)", conditional_mutual_information(j, X, V2, V1Q));
  iq.set("I(X;V1,V2|Q)", conditional_mutual_information(j, X, V1V2, Q));
  iq.set("I(X;V1|Q)", conditional_mutual_information(j, X, V1, Q));
  iq.set("I(X;V2|Q)", conditional_mutual_information(j, X, V2, Q));

  iq.set("xi1", xi_k(j, 1));
  iq.set("xi2", xi_k(j, 2));
  iq.set("xi_prime", xi_prime(j));
  return iq;
}

/// Distortion configuration for the general-measure bounds. Log-loss uses the
/// optimal soft reproduction (distortion floor H(X|U1,U2,Q)); General carries
/// an |X| x |Xhat| cost matrix minimized exhaustively over deterministic
/// reproduction maps Xhat(u1,u2,q).
struct DistortionSpec {
  DistortionMetric metric = DistortionMetric::LogLoss;
  std::vector<double> cost;  // row-major |X| x |Xhat|, empty for log-loss
  int num_reproductions = 0;

  static DistortionSpec log_loss() { return DistortionSpec{}; }

  static DistortionSpec general(std::vector<double> cost_matrix, int num_x, int num_xhat) {
    if (cost_matrix.size() != static_cast<std::size_t>(num_x) * num_xhat) {
      throw std::invalid_argument("distortion matrix size does not match |X| x |Xhat|");
    }
    DistortionSpec s;
    s.metric = DistortionMetric::General;
    s.cost = std::move(cost_matrix);
    s.num_reproductions = num_xhat;
    return s;
  }
};

/// Minimum achievable E[d(X, Xhat(U1,U2,Q))]: the reproduction map decomposes
/// per (u1,u2,q) cell, so the exhaustive minimum is the per-cell minimum.
inline double min_expected_distortion(const JointDistribution& joint,
                                      const DistortionSpec& spec) {
  if (spec.metric != DistortionMetric::General) {
    return conditional_entropy(joint, AxisSet{Axis::X},
                               AxisSet{Axis::U1, Axis::U2, Axis::Q});
  }
  const int nx = joint.dim(Axis::X);
  if (spec.cost.size() != static_cast<std::size_t>(nx) * spec.num_reproductions) {
    throw std::invalid_argument("distortion matrix does not match the model's |X|");
  }
  const std::vector<double> m = joint.marginal(AxisSet{Axis::Q, Axis::X, Axis::U1, Axis::U2});
  const int nq = joint.dim(Axis::Q);
  const int nu1 = joint.dim(Axis::U1);
  const int nu2 = joint.dim(Axis::U2);
  // marginal layout: ((q * nx + x) * nu1 + u1) * nu2 + u2
  double total = 0.0;
  for (int q = 0; q < nq; ++q) {
    for (int u1 = 0; u1 < nu1; ++u1) {
      for (int u2 = 0; u2 < nu2; ++u2) {
        double best = kInf;
        for (int xh = 0; xh < spec.num_reproductions; ++xh) {
          double cell = 0.0;
          for (int x = 0; x < nx; ++x) {
            const std::size_t idx =
                ((static_cast<std::size_t>(q) * nx + x) * nu1 + u1) * nu2 + u2;
            cell += m[idx] * spec.cost[static_cast<std::size_t>(x) * spec.num_reproductions + xh];
          }
          best = std::min(best, cell);
        }
        total += best;
      }
    }
  }
  return total;
}

namespace detail {

inline Constraint rate_constraint(std::array<double, 4> a, double d_coeff, double rhs,
                                  std::string label) {
  Constraint c;
  c.a = a;
  c.d_coeff = d_coeff;
  c.g = DistortionTransform::Identity;
  c.rhs = rhs;
  c.label = std::move(label);
  return c;
}

inline void require_no_si_inputs(const DiscreteCeoModel& model, const AuxiliarySystem& aux,
                                 const char* op) {
  if (model.num_z() != 1 && !model.z_independent_of_x()) {
    throw std::invalid_argument(std::string(op) +
                                ": requires Z independent of X (or a trivial Z alphabet)");
  }
  if (!aux.v_constant()) {
    throw std::invalid_argument(std::string(op) +
                                ": requires a U-layer-only auxiliary system (constant V)");
  }
}

}  // namespace detail

/// Inner bound for a general distortion measure: nine half-spaces on
/// (R1,R2,L1,L2,D) evaluated at the given auxiliary choice.
inline ConstraintSet inner_bound_constraints(const DiscreteCeoModel& model,
                                             const AuxiliarySystem& aux,
                                             const DistortionSpec& dist = DistortionSpec::log_loss()) {
  check_cardinality_caps(aux, CardinalityCaps::inner_general(model));
  const JointDistribution joint = build_joint(model, aux);
  const InformationQuantities iq = compute_information_quantities(joint);

  ConstraintSet cs;
  cs.metric = dist.metric;
  using detail::rate_constraint;
  cs.constraints = {
      rate_constraint({1, 0, 0, 0}, 0, iq.at("I(Y1;U1|U2,Q)"), "R1"),
      rate_constraint({0, 1, 0, 0}, 0, iq.at("I(Y2;U2|U1,Q)"), "R2"),
      rate_constraint({1, 1, 0, 0}, 0, iq.at("I(Y1,Y2;U1,U2|Q)"), "R1+R2"),
      rate_constraint({0, 0, 1, 0}, 0,
                      iq.at("I(X;U1|U2,Q)") + iq.at("I(V1;U2|Q)") - iq.at("I(Z;V1|Q)"), "L1"),
      rate_constraint({0, 0, 0, 1}, 0,
                      iq.at("I(X;U2|U1,Q)") + iq.at("I(V2;U1|Q)") - iq.at("I(Z;V2|Q)"), "L2"),
      rate_constraint({0, 0, 1, 1}, 0,
                      iq.at("I(X;U1,U2|Q)") + iq.at("I(V1;V2|Q)") - iq.at("I(Z;V1|Q)") -
                          iq.at("I(Z;V2|Q)"),
                      "L1+L2"),
      rate_constraint({1, 0, 0, 1}, 0, iq.at("I(Y1,X;U1,U2|Q)") - iq.at("I(Z;V2|Q)"), "R1+L2"),
      rate_constraint({0, 1, 1, 0}, 0, iq.at("I(X,Y2;U1,U2|Q)") - iq.at("I(Z;V1|Q)"), "R2+L1"),
      rate_constraint({0, 0, 0, 0}, 1, min_expected_distortion(joint, dist), "D"),
  };
  return cs;
}

/// Outer bound for a general distortion measure, with the xi_k corrections in
/// the leakage constraints.
inline ConstraintSet outer_bound_constraints(const DiscreteCeoModel& model,
                                             const AuxiliarySystem& aux,
                                             const DistortionSpec& dist = DistortionSpec::log_loss()) {
  check_cardinality_caps(aux, CardinalityCaps::outer_general(model));
  const JointDistribution joint = build_joint(model, aux);
  const InformationQuantities iq = compute_information_quantities(joint);
  const double x1 = iq.at("xi1");
  const double x2 = iq.at("xi2");

  ConstraintSet cs;
  cs.metric = dist.metric;
  using detail::rate_constraint;
  cs.constraints = {
      rate_constraint({1, 0, 0, 0}, 0, iq.at("I(Y1;U1|U2,Q)"), "R1"),
      rate_constraint({0, 1, 0, 0}, 0, iq.at("I(Y2;U2|U1,Q)"), "R2"),
      rate_constraint({1, 1, 0, 0}, 0, iq.at("I(Y1,Y2;U1,U2|Q)"), "R1+R2"),
      rate_constraint({0, 0, 1, 0}, 0,
                      iq.at("I(X;V1|V2,Q)") + iq.at("I(V1;U2|Q)") - iq.at("I(Z;V1|Q)") - x1,
                      "L1"),
      rate_constraint({0, 0, 0, 1}, 0,
                      iq.at("I(X;V2|V1,Q)") + iq.at("I(V2;U1|Q)") - iq.at("I(Z;V2|Q)") - x2,
                      "L2"),
      rate_constraint({0, 0, 1, 1}, 0,
                      iq.at("I(X;V1,V2|Q)") + iq.at("I(V1;V2|Q)") - iq.at("I(Z;V1|Q)") -
                          iq.at("I(Z;V2|Q)") - std::min(x1, x2),
                      "L1+L2"),
      rate_constraint({1, 0, 0, 1}, 0,
                      iq.at("I(Y1;U1|U2,Q)") + iq.at("I(X;V2|Q)") - iq.at("I(Z;V2|Q)"),
                      "R1+L2"),
      rate_constraint({0, 1, 1, 0}, 0,
                      iq.at("I(Y2;U2|U1,Q)") + iq.at("I(X;V1|Q)") - iq.at("I(Z;V1|Q)"),
                      "R2+L1"),
      rate_constraint({0, 0, 0, 0}, 1, min_expected_distortion(joint, dist), "D"),
  };
  return cs;
}

/// Tight log-loss inner bound for the model without side information at the
/// eavesdropper. Only the U-layer enters.
inline ConstraintSet logloss_inner_no_si(const DiscreteCeoModel& model,
                                         const AuxiliarySystem& aux) {
  detail::require_no_si_inputs(model, aux, "logloss_inner_no_si");
  check_cardinality_caps(aux, CardinalityCaps::logloss_no_si(model));
  const JointDistribution joint = build_joint(model, aux);
  const InformationQuantities iq = compute_information_quantities(joint);

  ConstraintSet cs;
  cs.metric = DistortionMetric::LogLoss;
  using detail::rate_constraint;
  cs.constraints = {
      rate_constraint({1, 0, 0, 0}, 0, iq.at("I(Y1;U1|U2,Q)"), "R1"),
      rate_constraint({0, 1, 0, 0}, 0, iq.at("I(Y2;U2|U1,Q)"), "R2"),
      rate_constraint({1, 1, 0, 0}, 0, iq.at("I(Y1,Y2;U1,U2|Q)"), "R1+R2"),
      rate_constraint({0, 0, 1, 0}, 0, iq.at("I(X;U1|U2,Q)"), "L1"),
      rate_constraint({0, 0, 0, 1}, 0, iq.at("I(X;U2|U1,Q)"), "L2"),
      rate_constraint({0, 0, 1, 1}, 0, iq.at("I(X;U1,U2|Q)"), "L1+L2"),
      rate_constraint({1, 0, 0, 1}, 0, iq.at("I(Y1,X;U1,U2|Q)"), "R1+L2"),
      rate_constraint({0, 1, 1, 0}, 0, iq.at("I(X,Y2;U1,U2|Q)"), "R2+L1"),
      rate_constraint({0, 0, 0, 0}, 1, iq.at("H(X|U1,U2,Q)"), "D"),
  };
  return cs;
}

/// Matching outer bound for the no-SI model: every rate constraint carries
/// the distortion on its left-hand side.
inline ConstraintSet logloss_outer_no_si(const DiscreteCeoModel& model,
                                         const AuxiliarySystem& aux) {
  detail::require_no_si_inputs(model, aux, "logloss_outer_no_si");
  check_cardinality_caps(aux, CardinalityCaps::logloss_no_si(model));
  const JointDistribution joint = build_joint(model, aux);
  const InformationQuantities iq = compute_information_quantities(joint);
  const double g1 = iq.at("I(Y1;U1|X,Q)");
  const double g2 = iq.at("I(Y2;U2|X,Q)");
  const double hx = iq.at("H(X)");

  ConstraintSet cs;
  cs.metric = DistortionMetric::LogLoss;
  using detail::rate_constraint;
  cs.constraints = {
      rate_constraint({1, 0, 0, 0}, 1, g1 + iq.at("H(X|U2,Q)"), "R1"),
      rate_constraint({0, 1, 0, 0}, 1, g2 + iq.at("H(X|U1,Q)"), "R2"),
      rate_constraint({1, 1, 0, 0}, 1, g1 + g2 + hx, "R1+R2"),
      rate_constraint({0, 0, 1, 0}, 1, iq.at("H(X|U2,Q)"), "L1"),
      rate_constraint({0, 0, 0, 1}, 1, iq.at("H(X|U1,Q)"), "L2"),
      rate_constraint({0, 0, 1, 1}, 1, hx, "L1+L2"),
      rate_constraint({1, 0, 0, 1}, 1, g1 + hx, "R1+L2"),
      rate_constraint({0, 1, 1, 0}, 1, g2 + hx, "R2+L1"),
      rate_constraint({0, 0, 0, 0}, 1, iq.at("H(X|U1,U2,Q)"), "D"),
  };
  return cs;
}

/// Log-loss inner bound for the model with side information at the
/// eavesdropper: the general inner bound with the log-loss distortion floor.
inline ConstraintSet logloss_inner_si(const DiscreteCeoModel& model,
                                      const AuxiliarySystem& aux) {
  return inner_bound_constraints(model, aux, DistortionSpec::log_loss());
}

/// Log-loss outer bound for the model with side information at the
/// eavesdropper; the leakage constraints carry the -xi' correction.
inline ConstraintSet logloss_outer_si(const DiscreteCeoModel& model,
                                      const AuxiliarySystem& aux) {
  check_cardinality_caps(aux, CardinalityCaps::logloss_si_outer(model));
  const JointDistribution joint = build_joint(model, aux);
  const InformationQuantities iq = compute_information_quantities(joint);
  const double g1 = iq.at("I(Y1;U1|X,Q)");
  const double g2 = iq.at("I(Y2;U2|X,Q)");
  const double hx = iq.at("H(X)");
  const double xp = iq.at("xi_prime");

  ConstraintSet cs;
  cs.metric = DistortionMetric::LogLoss;
  using detail::rate_constraint;
  cs.constraints = {
      rate_constraint({1, 0, 0, 0}, 1, g1 + iq.at("H(X|U2,Q)"), "R1"),
      rate_constraint({0, 1, 0, 0}, 1, g2 + iq.at("H(X|U1,Q)"), "R2"),
      rate_constraint({1, 1, 0, 0}, 1, g1 + g2 + hx, "R1+R2"),
      rate_constraint({0, 0, 1, 0}, 1,
                      iq.at("H(X|U2,Q)") + iq.at("I(V1;U2|Q)") - iq.at("I(Z;V1|Q)") - xp,
                      "L1"),
      rate_constraint({0, 0, 0, 1}, 1,
                      iq.at("H(X|U1,Q)") + iq.at("I(V2;U1|Q)") - iq.at("I(Z;V2|Q)") - xp,
                      "L2"),
      rate_constraint({0, 0, 1, 1}, 1,
                      hx + iq.at("I(V1;V2|Q)") - iq.at("I(Z;V1|Q)") - iq.at("I(Z;V2|Q)") - xp,
                      "L1+L2"),
      rate_constraint({1, 0, 0, 1}, 1, g1 + hx - iq.at("I(Z;V2|Q)"), "R1+L2"),
      rate_constraint({0, 1, 1, 0}, 1, g2 + hx - iq.at("I(Z;V1|Q)"), "R2+L1"),
      rate_constraint({0, 0, 0, 0}, 1, iq.at("H(X|U1,U2,Q)"), "D"),
  };
  return cs;
}

struct LabeledPoint {
  std::string label;
  RateTuple point;
};

/// The ten extreme points of the no-SI outer-bound polytope at fixed
/// auxiliaries, in the order P1..P10.
inline std::vector<LabeledPoint> extreme_points(const DiscreteCeoModel& model,
                                                const AuxiliarySystem& aux) {
  detail::require_no_si_inputs(model, aux, "extreme_points");
  const JointDistribution joint = build_joint(model, aux);
  const InformationQuantities iq = compute_information_quantities(joint);

  const double g1 = iq.at("I(Y1;U1|X,Q)");
  const double g2 = iq.at("I(Y2;U2|X,Q)");
  const double hx = iq.at("H(X)");
  const double i1 = iq.at("I(Y1;U1|Q)");
  const double i2 = iq.at("I(Y2;U2|Q)");
  const double x1 = iq.at("I(X;U1|Q)");
  const double x2 = iq.at("I(X;U2|Q)");
  const double h1 = iq.at("H(X|U1,Q)");
  const double h2 = iq.at("H(X|U2,Q)");
  const double h12 = iq.at("H(X|U1,U2,Q)");
  const double i1c2 = iq.at("I(Y1;U1|U2,Q)");
  const double i2c1 = iq.at("I(Y2;U2|U1,Q)");
  const double x1c2 = iq.at("I(X;U1|U2,Q)");
  const double x2c1 = iq.at("I(X;U2|U1,Q)");

  auto pt = [](double r1, double r2, double l1, double l2, double d) {
    return RateTuple{r1, r2, l1, l2, d, DistortionMetric::LogLoss};
  };
  return {
      {"P1", pt(0, 0, 0, 0, g1 + g2 + hx)},
      {"P2", pt(0, g2, 0, 0, g1 + hx)},
      {"P3", pt(g1, 0, 0, 0, g2 + hx)},
      {"P4", pt(g1, g2, 0, 0, hx)},
      {"P5", pt(0, i2, 0, x2, g1 + h2)},
      {"P6", pt(i1, 0, x1, 0, g2 + h1)},
      {"P7", pt(g1, i2, 0, x2, h2)},
      {"P8", pt(i1, g2, x1, 0, h1)},
      {"P9", pt(i1, i2c1, x1, x2c1, h12)},
      {"P10", pt(i1c2, i2, x1c2, x2, h12)},
  };
}

struct DominanceEntry {
  std::string point_label;
  RateTuple point;
  std::string dominator_label;
  RateTuple dominator;
  bool dominated = false;
  std::string violated_coordinate;  // empty when dominated
  double violation = 0.0;           // magnitude, in bits
  bool dominator_inner_feasible = false;
};

struct DominanceReport {
  std::vector<DominanceEntry> entries;
  bool all_dominated = false;
};

namespace detail {

inline std::pair<std::string, double> worst_coordinate(const RateTuple& dom,
                                                       const RateTuple& pt) {
  static constexpr const char* kCoord[5] = {"R1", "R2", "L1", "L2", "D"};
  std::string name;
  double worst = 0.0;
  const double diffs[5] = {dom.r1 - pt.r1, dom.r2 - pt.r2, dom.l1 - pt.l1,
                           dom.l2 - pt.l2, dom.d - pt.d};
  for (int i = 0; i < 5; ++i) {
    if (diffs[i] > worst) {
      worst = diffs[i];
      name = kCoord[i];
    }
  }
  return {name, worst};
}

}  // namespace detail

/// Verifies the region-equivalence argument numerically: each outer extreme
/// point is dominated by the prescribed inner-bound point, constructed by
/// degenerating the auxiliaries. A failed check names the violated coordinate
/// and its magnitude.
inline DominanceReport dominance_report(const DiscreteCeoModel& model,
                                        const AuxiliarySystem& aux,
                                        double eps = kSlackTol) {
  const std::vector<LabeledPoint> pts = extreme_points(model, aux);
  const JointDistribution joint = build_joint(model, aux);
  const InformationQuantities iq = compute_information_quantities(joint);

  auto pt = [](double r1, double r2, double l1, double l2, double d) {
    return RateTuple{r1, r2, l1, l2, d, DistortionMetric::LogLoss};
  };
  const RateTuple both_const = pt(0, 0, 0, 0, iq.at("H(X)"));
  const RateTuple u1_const = pt(0, iq.at("I(Y2;U2|Q)"), 0, iq.at("I(X;U2|Q)"),
                                iq.at("H(X|U2,Q)"));
  const RateTuple u2_const = pt(iq.at("I(Y1;U1|Q)"), 0, iq.at("I(X;U1|Q)"), 0,
                                iq.at("H(X|U1,Q)"));

  const bool both_const_ok =
      evaluate(logloss_inner_no_si(model, AuxiliarySystem::trivial(model.num_y(1),
                                                                   model.num_y(2))),
               both_const, eps)
          .feasible;
  const bool u1_const_ok =
      evaluate(logloss_inner_no_si(model, aux.with_constant_u(1)), u1_const, eps).feasible;
  const bool u2_const_ok =
      evaluate(logloss_inner_no_si(model, aux.with_constant_u(2)), u2_const, eps).feasible;
  const ConstraintSet inner_self = logloss_inner_no_si(model, aux);

  DominanceReport report;
  report.all_dominated = true;
  for (const LabeledPoint& lp : pts) {
    DominanceEntry e;
    e.point_label = lp.label;
    e.point = lp.point;
    if (lp.label == "P9" || lp.label == "P10") {
      e.dominator_label = "self (lies in the inner region)";
      e.dominator = lp.point;
      e.dominator_inner_feasible = evaluate(inner_self, lp.point, eps).feasible;
    } else if (lp.label == "P5" || lp.label == "P7") {
      e.dominator_label = "inner point with U1 constant";
      e.dominator = u1_const;
      e.dominator_inner_feasible = u1_const_ok;
    } else if (lp.label == "P6" || lp.label == "P8") {
      e.dominator_label = "inner point with U2 constant";
      e.dominator = u2_const;
      e.dominator_inner_feasible = u2_const_ok;
    } else {
      e.dominator_label = "inner point with U1,U2 constant";
      e.dominator = both_const;
      e.dominator_inner_feasible = both_const_ok;
    }
    e.dominated = dominates(e.dominator, e.point, eps) && e.dominator_inner_feasible;
    if (!e.dominated) {
      auto [coord, mag] = detail::worst_coordinate(e.dominator, e.point);
      e.violated_coordinate = coord.empty() ? "(inner feasibility)" : coord;
      e.violation = mag;
      report.all_dominated = false;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

struct CounterexampleReport {
  double gap = 0.0;               // I(Y1;U1|X,Q)
  double outer_delta1_cap = 0.0;  // equivocation cap at the extreme point
  double inner_delta1_max = 0.0;  // H(X)
  double distortion_at_extreme = 0.0;
  bool strict = false;
};

/// The equivocation-region gap: at the extreme point where R1 = 0 the outer
/// bound allows Delta1 up to H(X) + I(Y1;U1|X,Q), exceeding the inner bound's
/// maximum H(X) whenever the gap is positive.
inline CounterexampleReport equivocation_counterexample(const DiscreteCeoModel& model,
                                                        const AuxiliarySystem& aux) {
  if (!aux.v_constant()) {
    throw std::invalid_argument(
        "equivocation_counterexample: requires a U-layer-only auxiliary system");
  }
  const JointDistribution joint = build_joint(model, aux);
  const double gap = conditional_mutual_information(joint, AxisSet{Axis::Y1}, AxisSet{Axis::U1},
                                                    AxisSet{Axis::X, Axis::Q});
  const double hx = entropy(joint, AxisSet{Axis::X});
  const double hx_u2q = conditional_entropy(joint, AxisSet{Axis::X},
                                            AxisSet{Axis::U2, Axis::Q});
  CounterexampleReport r;
  r.gap = gap;
  r.distortion_at_extreme = gap + hx_u2q;
  r.outer_delta1_cap = hx - hx_u2q + r.distortion_at_extreme;
  r.inner_delta1_max = hx;
  r.strict = gap > 1e-9;
  if (std::abs(r.outer_delta1_cap - r.inner_delta1_max - r.gap) > 1e-10) {
    throw std::logic_error("equivocation_counterexample: cap/gap identity violated");
  }
  return r;
}

struct SiGapRow {
  std::string label;
  double inner_rhs = 0.0;
  double outer_rhs = 0.0;
  double inner_minus_outer = 0.0;
  double inner_d_coeff = 0.0;
  double outer_d_coeff = 0.0;
};

struct SiGapReport {
  std::vector<SiGapRow> rows;
  double xi_prime = 0.0;
  double leak_z_v1 = 0.0;
  double leak_z_v2 = 0.0;
};

/// Per-constraint difference between the SI-at-Eve inner and outer bounds.
/// The leakage rows are reported, not asserted: the residual gap is exactly
/// what the outer bound leaves open.
inline SiGapReport si_gap_report(const DiscreteCeoModel& model, const AuxiliarySystem& aux) {
  const ConstraintSet inner = logloss_inner_si(model, aux);
  const ConstraintSet outer = logloss_outer_si(model, aux);
  const JointDistribution joint = build_joint(model, aux);
  SiGapReport report;
  report.xi_prime = xi_prime(joint);
  report.leak_z_v1 = conditional_mutual_information(joint, AxisSet{Axis::Z}, AxisSet{Axis::V1},
                                                    AxisSet{Axis::Q});
  report.leak_z_v2 = conditional_mutual_information(joint, AxisSet{Axis::Z}, AxisSet{Axis::V2},
                                                    AxisSet{Axis::Q});
  for (std::size_t i = 0; i < inner.constraints.size(); ++i) {
    const Constraint& ci = inner.constraints[i];
    const Constraint& co = outer.find(ci.label);
    SiGapRow row;
    row.label = ci.label;
    row.inner_rhs = ci.rhs;
    row.outer_rhs = co.rhs;
    row.inner_minus_outer = ci.rhs - co.rhs;
    row.inner_d_coeff = ci.d_coeff;
    row.outer_d_coeff = co.d_coeff;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ceoleak

#endif  // CEOLEAK_DISCRETE_BOUNDS_HPP
