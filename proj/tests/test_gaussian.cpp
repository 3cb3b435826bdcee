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

#include "ceoleak/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "ceoleak/sampling.hpp"

namespace {

using namespace ceoleak;

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

const GaussianCeoParams kRowOne{2.0, 1.0, 1.0};

TEST(BetaRateMap, KnownValues) {
  EXPECT_NEAR(beta_to_r(1.7, 1.7), 0.5, 1e-15);           // beta = sigma2
  EXPECT_EQ(beta_to_r(1.7, kInf), 0.0);                   // beta -> inf sentinel
  EXPECT_NEAR(r_to_beta(1.0, 1.0), 1.0 / 3.0, 1e-15);     // solve 2^{2r} = (1+b)/b
  EXPECT_EQ(r_to_beta(1.0, 0.0), kInf);
  EXPECT_THROW(beta_to_r(1.0, -0.2), std::invalid_argument);
}

TEST(BetaRateMap, RoundTripAcrossTwelveDecades) {
  for (int i = 0; i <= 240; ++i) {
    const double beta = std::pow(10.0, -6.0 + i * 0.05);  // [1e-6, 1e6]
    const double r = beta_to_r(0.7, beta);
    const double back = r_to_beta(0.7, r);
    EXPECT_LT(std::abs(back - beta) / beta, 1e-10) << "beta = " << beta;
  }
}

TEST(CondEntropy, EmptySetGivesTheSourceEntropy) {
  EXPECT_NEAR(gaussian_cond_entropy(kRowOne, {false, false}, {0, 0}), 2.547095585180641,
              1e-12);  // (1/2) log2(2 pi e * 2)
  EXPECT_NEAR(gaussian_source_entropy(kRowOne), 2.547095585180641, 1e-12);
}

TEST(CondEntropy, FullRateLimitGivesTheObservationConditional) {
  // h(X|Y1) = (1/2) log2(2 pi e * sigma2_x sigma2_n / (sigma2_x + sigma2_n)).
  EXPECT_NEAR(gaussian_cond_entropy(kRowOne, {true, false}, {kInf, 0}), 1.754614334820063,
              1e-12);
}

TEST(CondEntropy, HalfRateSingletonMatchesTheArithmetic) {
  // 1/sigma2_x + (1 - 2^{-1}) / 1 = 1, so the value is (1/2) log2(2 pi e).
  EXPECT_NEAR(gaussian_cond_entropy(kRowOne, {false, true}, {0, 0.5}), 2.047095585180641,
              1e-12);
}

TEST(GaussianRhs, EmptySubsetIsTheDistortionFloor) {
  const AuxRates r{0.4, 0.7};
  const Constraint c = gaussian_rhs(kRowOne, r, all_subset_pairs()[0], DistortionMetric::LogLoss);
  EXPECT_EQ(c.a, (std::array<double, 4>{0, 0, 0, 0}));
  EXPECT_EQ(c.d_coeff, 1.0);
  const double inv = 1.0 / 2.0 + (1.0 - std::exp2(-0.8)) / 1.0 + (1.0 - std::exp2(-1.4)) / 1.0;
  EXPECT_NEAR(c.rhs, 0.5 * std::log2(kTwoPiE / inv), 1e-14);
}

TEST(GaussianRhs, FullSubsetAtZeroRatesGivesTheSourceEntropy) {
  const Constraint c =
      gaussian_rhs(kRowOne, {0, 0}, all_subset_pairs()[8], DistortionMetric::LogLoss);
  EXPECT_EQ(c.a, (std::array<double, 4>{1, 1, 0, 0}));
  EXPECT_NEAR(c.rhs, 2.547095585180641, 1e-12);  // h(X)
  EXPECT_EQ(c.label, "S={1,2},K={1,2}");
}

TEST(GaussianRhs, QuadraticLeakageBoundMatchesTheAlternativeForm) {
  // S={1}, K=empty: D >= 2^{-2 L1} (1/sigma2_x + (1 - 2^{-2 r2})/sigma2_n2)^{-1}.
  const AuxRates r{0.0, 0.5};
  const Constraint c =
      gaussian_rhs(kRowOne, r, all_subset_pairs()[1], DistortionMetric::Quadratic);
  EXPECT_EQ(c.label, "S={1},K={}");
  EXPECT_EQ(c.g, DistortionTransform::HalfLog2);
  for (double l1 : {0.0, 0.3, 1.7}) {
    const double bound = constraint_distortion_lower_bound(c, 9.9, 9.9, l1, 9.9);
    const double direct = std::exp2(-2.0 * l1) / (1.0 / 2.0 + (1.0 - std::exp2(-1.0)) / 1.0);
    EXPECT_NEAR(bound, direct, 1e-14) << "L1 = " << l1;
  }
}

TEST(AllConstraints, AlwaysNineWithUniqueLabels) {
  SeededRng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const GaussianCeoParams params{rng.uniform(0.5, 5), rng.uniform(0.5, 5),
                                   rng.uniform(0.5, 5)};
    const AuxRates rates{rng.uniform(0, 2), rng.uniform(0, 2)};
    for (DistortionMetric metric : {DistortionMetric::LogLoss, DistortionMetric::Quadratic}) {
      const ConstraintSet cs = all_constraints(params, rates, metric);
      ASSERT_EQ(cs.constraints.size(), 9u);
      for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = i + 1; j < 9; ++j) {
          EXPECT_NE(cs.constraints[i].label, cs.constraints[j].label);
        }
      }
    }
  }
}

TEST(AllConstraints, InfiniteRatesGiveTheFullObservationFloor) {
  const ConstraintSet cs = all_constraints(kRowOne, {kInf, kInf}, DistortionMetric::LogLoss);
  EXPECT_NEAR(cs.find("S={},K={}").rhs, 1.3861315377369599, 1e-12);
}

// Second, hand-coded transcription of the constraint formulas at the first
// preset with r1 = r2 = 0.3; values frozen from that arithmetic.
TEST(AllConstraints, PresetRowOneMatchesTheIndependentTranscription) {
  const ConstraintSet cs = all_constraints(kRowOne, {0.3, 0.3}, DistortionMetric::LogLoss);
  const struct {
    const char* label;
    double rhs;
  } expected[9] = {
      {"S={},K={}", 1.92740139831141},
      {"S={1},K={}", 2.172653709531497},
      {"S={1},K={1}", 2.472653709531497},
      {"S={2},K={}", 2.172653709531497},
      {"S={2},K={2}", 2.472653709531497},
      {"S={1,2},K={}", 2.547095585180641},
      {"S={1,2},K={1}", 2.8470955851806408},
      {"S={1,2},K={2}", 2.8470955851806408},
      {"S={1,2},K={1,2}", 3.147095585180641},
  };
  for (const auto& [label, rhs] : expected) {
    EXPECT_NEAR(cs.find(label).rhs, rhs, 1e-12) << label;
  }
}

TEST(Membership, SourceEntropyPointIsAchievableWithZeroRates) {
  const RateTuple p{0, 0, 0, 0, 2.547095585180641, DistortionMetric::LogLoss};
  const MembershipResult res = membership(kRowOne, p, DistortionMetric::LogLoss);
  EXPECT_TRUE(res.member);
  EXPECT_NEAR(res.witness.r1, 0.0, 1e-5);
  EXPECT_NEAR(res.witness.r2, 0.0, 1e-5);
}

TEST(Membership, BelowTheFullObservationFloorIsInfeasible) {
  const RateTuple p{10, 10, 10, 10, 1.3861315377369599 - 0.01, DistortionMetric::LogLoss};
  EXPECT_FALSE(membership(kRowOne, p, DistortionMetric::LogLoss).member);
}

TEST(Membership, QuadraticSourceVariancePointIsOnTheBoundary) {
  const RateTuple on{0, 0, 0, 0, 2.0, DistortionMetric::Quadratic};  // D = sigma2_x
  EXPECT_TRUE(membership(kRowOne, on, DistortionMetric::Quadratic).member);
  const RateTuple under{0, 0, 0, 0, 2.0 * (1.0 - 1e-3), DistortionMetric::Quadratic};
  EXPECT_FALSE(membership(kRowOne, under, DistortionMetric::Quadratic).member);
}

TEST(Membership, InvalidTuplesFailNamingTheField) {
  const RateTuple p{-0.1, 0, 0, 0, 1.0, DistortionMetric::LogLoss};
  try {
    membership(kRowOne, p, DistortionMetric::LogLoss);
    FAIL() << "expected a validation failure";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("R1"), std::string::npos) << e.what();
  }
}

// Exhaustive grid oracle: feasibility from a 2001x2001 scan of the raw
// constraint formulas, fully independent of the library's evaluator.
bool brute_force_member(const GaussianCeoParams& params, const RateTuple& p,
                        DistortionMetric metric, double r_max) {
  const int n = 2001;
  for (int i = 0; i < n; ++i) {
    const double r1 = r_max * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double r2 = r_max * j / (n - 1);
      bool ok = true;
      for (const SubsetPair& pair : all_subset_pairs()) {
        double inv = 1.0 / params.sigma2_x;
        if (!pair.in_s[0]) inv += (1.0 - std::exp2(-2.0 * r1)) / params.sigma2_n1;
        if (!pair.in_s[1]) inv += (1.0 - std::exp2(-2.0 * r2)) / params.sigma2_n2;
        double rhs = 0.5 * std::log2((metric == DistortionMetric::LogLoss ? kTwoPiE : 1.0) / inv);
        if (pair.in_k[0]) rhs += r1;
        if (pair.in_k[1]) rhs += r2;
        double lhs = metric == DistortionMetric::LogLoss ? p.d : 0.5 * std::log2(p.d);
        if (pair.in_k[0]) lhs += p.r1;
        if (pair.in_k[1]) lhs += p.r2;
        if (pair.in_s[0] && !pair.in_k[0]) lhs += p.l1;
        if (pair.in_s[1] && !pair.in_k[1]) lhs += p.l2;
        if (!(lhs - rhs >= -1e-9)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

TEST(Membership, PresetTupleMatchesTheExhaustiveGridOracle) {
  const double d_star =
      min_distortion(kRowOne, 0.5, 0.5, 0.2, std::nullopt, DistortionMetric::LogLoss).min_d;
  // The objective is a max of near-planes, so the 2001-point oracle grid can
  // overshoot the true minimum by about slope * spacing (~5e-4 here); the
  // probe margins stay clear of that resolution.
  const RateTuple above{0.5, 0.5, 0.2, kInf, d_star + 2e-3, DistortionMetric::LogLoss};
  const RateTuple below{0.5, 0.5, 0.2, kInf, d_star - 5e-3, DistortionMetric::LogLoss};
  EXPECT_TRUE(membership(kRowOne, above, DistortionMetric::LogLoss).member);
  EXPECT_FALSE(membership(kRowOne, below, DistortionMetric::LogLoss).member);
  EXPECT_TRUE(brute_force_member(kRowOne, above, DistortionMetric::LogLoss, 5.2));
  EXPECT_FALSE(brute_force_member(kRowOne, below, DistortionMetric::LogLoss, 5.2));
}

// Brute-force minimum over an (r1, r2) grid, straight from the formulas.
double brute_force_min_d(const GaussianCeoParams& params, double rate1, double rate2,
                         double leak1, DistortionMetric metric, double r_hi, double step) {
  const int n = static_cast<int>(r_hi / step + 0.5);
  double best = kInf;
  for (int i = 0; i <= n; ++i) {
    const double r1 = i * step;
    for (int j = 0; j <= n; ++j) {
      const double r2 = j * step;
      double worst = -kInf;
      for (const SubsetPair& pair : all_subset_pairs()) {
        double lhs = 0.0;
        if (pair.in_k[0]) lhs += rate1;
        if (pair.in_k[1]) lhs += rate2;
        if (pair.in_s[0] && !pair.in_k[0]) lhs += leak1;
        if (pair.in_s[1] && !pair.in_k[1]) continue;  // L2 relaxed
        if (std::isinf(lhs)) continue;
        double inv = 1.0 / params.sigma2_x;
        if (!pair.in_s[0]) inv += (1.0 - std::exp2(-2.0 * r1)) / params.sigma2_n1;
        if (!pair.in_s[1]) inv += (1.0 - std::exp2(-2.0 * r2)) / params.sigma2_n2;
        double rhs = 0.5 * std::log2((metric == DistortionMetric::LogLoss ? kTwoPiE : 1.0) / inv);
        if (pair.in_k[0]) rhs += r1;
        if (pair.in_k[1]) rhs += r2;
        worst = std::max(worst, rhs - lhs);
      }
      const double d = metric == DistortionMetric::Quadratic ? std::exp2(2.0 * worst) : worst;
      best = std::min(best, d);
    }
  }
  return best;
}

// The optimum sits at a kink between constraint surfaces, so the grid oracle
// overshoots linearly in the step: with step 1e-4 the gap stays below ~3e-4.
TEST(MinDistortion, UnconstrainedLeakageMatchesTheFineGridOracle) {
  const double got =
      min_distortion(kRowOne, 0.5, 0.5, kInf, std::nullopt, DistortionMetric::Quadratic).min_d;
  const double brute =
      brute_force_min_d(kRowOne, 0.5, 0.5, kInf, DistortionMetric::Quadratic, 0.5, 1e-4);
  EXPECT_LE(got, brute + 1e-12);  // the optimizer may only improve on the grid
  EXPECT_NEAR(got, brute, 5e-4);
}

TEST(MinDistortion, ZeroLeakageLogLossMatchesTheFineGridOracle) {
  const double got =
      min_distortion(kRowOne, 0.5, 0.5, 0.0, std::nullopt, DistortionMetric::LogLoss).min_d;
  const double brute =
      brute_force_min_d(kRowOne, 0.5, 0.5, 0.0, DistortionMetric::LogLoss, 1.0, 1e-4);
  EXPECT_LE(got, brute + 1e-12);
  EXPECT_NEAR(got, brute, 5e-4);
}

TEST(MinDistortion, NonincreasingInTheLeakageBudget) {
  for (DistortionMetric metric : {DistortionMetric::LogLoss, DistortionMetric::Quadratic}) {
    const double d01 = min_distortion(kRowOne, 0.5, 0.5, 0.1, std::nullopt, metric).min_d;
    const double d05 = min_distortion(kRowOne, 0.5, 0.5, 0.5, std::nullopt, metric).min_d;
    const double d20 = min_distortion(kRowOne, 0.5, 0.5, 2.0, std::nullopt, metric).min_d;
    EXPECT_GE(d01, d05 - 1e-9);
    EXPECT_GE(d05, d20 - 1e-9);
  }
}

TEST(MinDistortion, NonincreasingInEveryRate) {
  SeededRng rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    const double r1 = rng.uniform(0.1, 1.0);
    const double r2 = rng.uniform(0.1, 1.0);
    const double l1 = rng.uniform(0.0, 1.0);
    const double l2 = rng.uniform(0.0, 1.0);
    const auto metric = trial % 2 == 0 ? DistortionMetric::LogLoss : DistortionMetric::Quadratic;
    const double base = min_distortion(kRowOne, r1, r2, l1, l2, metric).min_d;
    EXPECT_LE(min_distortion(kRowOne, r1 + 0.2, r2, l1, l2, metric).min_d, base + 1e-9);
    EXPECT_LE(min_distortion(kRowOne, r1, r2 + 0.2, l1, l2, metric).min_d, base + 1e-9);
    EXPECT_LE(min_distortion(kRowOne, r1, r2, l1 + 0.2, l2, metric).min_d, base + 1e-9);
    EXPECT_LE(min_distortion(kRowOne, r1, r2, l1, l2 + 0.2, metric).min_d, base + 1e-9);
  }
}

TEST(MinDistortion, ObjectiveIsConvexInTheAuxiliaryRates) {
  // Supports the ternary polish: sample the midpoint inequality.
  SeededRng rng(13);
  const detail::GaussianEvaluator eval_ll(kRowOne, DistortionMetric::LogLoss, 0.5, 0.5, 0.3,
                                          kInf);
  const detail::GaussianEvaluator eval_q(kRowOne, DistortionMetric::Quadratic, 0.5, 0.5, 0.3,
                                         kInf);
  for (int trial = 0; trial < 200; ++trial) {
    const double a1 = rng.uniform(0, 3), a2 = rng.uniform(0, 3);
    const double b1 = rng.uniform(0, 3), b2 = rng.uniform(0, 3);
    const double m1 = 0.5 * (a1 + b1), m2 = 0.5 * (a2 + b2);
    EXPECT_LE(eval_ll.min_distortion_at(m1, m2),
              0.5 * eval_ll.min_distortion_at(a1, a2) + 0.5 * eval_ll.min_distortion_at(b1, b2) +
                  1e-12);
    EXPECT_LE(eval_q.min_distortion_at(m1, m2),
              0.5 * eval_q.min_distortion_at(a1, a2) + 0.5 * eval_q.min_distortion_at(b1, b2) +
                  1e-12);
  }
}

TEST(LeakageCurve, SinglePointGridEqualsMinDistortion) {
  const auto rows = leakage_curve(kRowOne, 0.5, 0.5, {0.7}, DistortionMetric::LogLoss);
  ASSERT_EQ(rows.size(), 1u);
  const CurveRow direct =
      min_distortion(kRowOne, 0.5, 0.5, 0.7, std::nullopt, DistortionMetric::LogLoss);
  EXPECT_EQ(rows[0].min_d, direct.min_d);
  EXPECT_EQ(rows[0].l1, 0.7);
}

std::vector<double> coarse_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 30; ++i) grid.push_back(0.1 * i);
  return grid;
}

TEST(LeakageCurve, RowsNonincreasingAndHigherRateCurveLiesBelow) {
  for (DistortionMetric metric : {DistortionMetric::LogLoss, DistortionMetric::Quadratic}) {
    const auto low = leakage_curve(kRowOne, 0.5, 0.5, coarse_grid(), metric);
    const auto high = leakage_curve(kRowOne, 1.0, 0.5, coarse_grid(), metric);
    for (std::size_t i = 1; i < low.size(); ++i) {
      EXPECT_LE(low[i].min_d, low[i - 1].min_d);
      EXPECT_LE(high[i].min_d, high[i - 1].min_d);
    }
    for (std::size_t i = 0; i < low.size(); ++i) {
      EXPECT_LE(high[i].min_d, low[i].min_d + 1e-9);
    }
  }
}

TEST(Saturation, PresetRowOneSaturatesUnderBothMetrics) {
  for (DistortionMetric metric : {DistortionMetric::LogLoss, DistortionMetric::Quadratic}) {
    const SaturationResult sat =
        saturation_threshold(kRowOne, 0.5, 0.5, metric, 1e-6, coarse_grid());
    EXPECT_TRUE(sat.found);
    EXPECT_GT(sat.l1_star, 0.0);
    EXPECT_LT(sat.l1_star, 3.0);
  }
}

TEST(Saturation, UselessAgentsSaturateImmediately) {
  const GaussianCeoParams params{2.0, 1e9, 1e9};
  const SaturationResult log_sat =
      saturation_threshold(params, 0.5, 0.5, DistortionMetric::LogLoss, 1e-6, coarse_grid());
  EXPECT_TRUE(log_sat.found);
  EXPECT_EQ(log_sat.l1_star, 0.0);
  EXPECT_NEAR(log_sat.d_unconstrained, 2.547095585180641, 1e-6);  // h(X)

  const SaturationResult quad_sat =
      saturation_threshold(params, 0.5, 0.5, DistortionMetric::Quadratic, 1e-6, coarse_grid());
  EXPECT_TRUE(quad_sat.found);
  EXPECT_EQ(quad_sat.l1_star, 0.0);
  EXPECT_NEAR(quad_sat.d_unconstrained, 2.0, 1e-6);  // sigma2_x
}

TEST(Saturation, ThirdPresetLogLossSaturates) {
  const GaussianCeoParams params{5.0, 1.0, 1.0};
  const SaturationResult sat =
      saturation_threshold(params, 0.5, 0.5, DistortionMetric::LogLoss, 1e-6, coarse_grid());
  EXPECT_TRUE(sat.found);
}

TEST(MonotoneRhs, DirectionalFiniteDifferences) {
  SeededRng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const GaussianCeoParams params{rng.uniform(0.5, 4), rng.uniform(0.5, 4),
                                   rng.uniform(0.5, 4)};
    const AuxRates base{rng.uniform(0, 2), rng.uniform(0, 2)};
    const double h = 1e-3;
    for (const SubsetPair& pair : all_subset_pairs()) {
      const double f0 = gaussian_rhs(params, base, pair, DistortionMetric::LogLoss).rhs;
      const double f1 =
          gaussian_rhs(params, {base.r1 + h, base.r2}, pair, DistortionMetric::LogLoss).rhs;
      const double f2 =
          gaussian_rhs(params, {base.r1, base.r2 + h}, pair, DistortionMetric::LogLoss).rhs;
      // rhs grows with r_k for k in K and shrinks as the noise sum grows
      // with r_j for j in S^c; it is flat in rates outside both sets.
      auto expect_dir = [&](int k, double fwd) {
        if (pair.rate(k)) {
          EXPECT_GT(fwd, f0 - 1e-12);
        } else if (pair.noise(k)) {
          EXPECT_LE(fwd, f0 + 1e-12);
        } else {
          EXPECT_NEAR(fwd, f0, 1e-12);
        }
      };
      expect_dir(1, f1);
      expect_dir(2, f2);
    }
  }
}

TEST(Reduction, DroppingLeakageKeepsExactlyTheRateFamily) {
  const ConstraintSet cs = all_constraints(kRowOne, {0.3, 0.4}, DistortionMetric::LogLoss);
  std::vector<std::string> rate_only;
  for (const Constraint& c : cs.constraints) {
    if (c.a[2] == 0.0 && c.a[3] == 0.0) rate_only.push_back(c.label);
  }
  const std::vector<std::string> expected = {"S={},K={}", "S={1},K={1}", "S={2},K={2}",
                                             "S={1,2},K={1,2}"};
  EXPECT_EQ(rate_only, expected);

  // Dropping the leakage constraints never increases the minimum distortion.
  const double with_l =
      min_distortion(kRowOne, 0.5, 0.5, 0.2, 0.2, DistortionMetric::LogLoss).min_d;
  const double without_l =
      min_distortion(kRowOne, 0.5, 0.5, kInf, std::nullopt, DistortionMetric::LogLoss).min_d;
  EXPECT_LE(without_l, with_l + 1e-9);
}

}  // namespace
