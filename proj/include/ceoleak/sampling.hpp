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

#ifndef CEOLEAK_SAMPLING_HPP
#define CEOLEAK_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceoleak/model.hpp"
#include "ceoleak/region.hpp"

namespace ceoleak {

/// Deterministic uniform source. mt19937_64 output is fully specified by the
/// standard and the 53-bit mapping avoids the implementation-defined
/// std::uniform_real_distribution, so streams are reproducible everywhere.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 gen_;
};

/// Random probability vector with every entry bounded away from zero, so the
/// induced information quantities stay well conditioned.
inline ProbVector random_prob_vector(SeededRng& rng, int n, double min_mass = 0.05) {
  ProbVector p(n);
  double sum = 0.0;
  for (double& v : p) {
    v = rng.uniform(min_mass, 1.0);
    sum += v;
  }
  for (double& v : p) v /= sum;
  return p;
}

inline StochasticKernel random_kernel(SeededRng& rng, int num_in, int num_out,
                                      std::string name) {
  std::vector<double> rows;
  rows.reserve(static_cast<std::size_t>(num_in) * num_out);
  for (int i = 0; i < num_in; ++i) {
    const ProbVector row = random_prob_vector(rng, num_out);
    rows.insert(rows.end(), row.begin(), row.end());
  }
  return StochasticKernel(num_in, num_out, std::move(rows), std::move(name));
}

/// Random model over the given alphabet sizes; nz = 1 yields a trivial
/// eavesdropper channel.
inline DiscreteCeoModel random_model(SeededRng& rng, int nx, int ny1, int ny2, int nz) {
  DiscreteCeoModel m;
  m.p_x = random_prob_vector(rng, nx);
  m.p_y1_given_x = random_kernel(rng, nx, ny1, "py1_given_x");
  m.p_y2_given_x = random_kernel(rng, nx, ny2, "py2_given_x");
  m.p_z_given_x = nz == 1 ? StochasticKernel::constant(nx, "pz_given_x")
                          : random_kernel(rng, nx, nz, "pz_given_x");
  return m;
}

/// Random binary-alphabet model. With `with_eve_si` false the eavesdropper
/// channel degenerates to a singleton alphabet (no side information).
inline DiscreteCeoModel random_binary_model(SeededRng& rng, bool with_eve_si) {
  return random_model(rng, 2, 2, 2, with_eve_si ? 2 : 1);
}

/// Random auxiliary system for the given model. nv1 = nv2 = 1 yields a
/// U-layer-only system.
inline AuxiliarySystem random_aux(SeededRng& rng, const DiscreteCeoModel& model, int nq,
                                  int nu1, int nu2, int nv1, int nv2) {
  AuxiliarySystem aux;
  aux.p_q = nq == 1 ? ProbVector{1.0} : random_prob_vector(rng, nq);
  for (int q = 0; q < nq; ++q) {
    aux.p_u_given_y[0].push_back(random_kernel(rng, model.num_y(1), nu1, "pu1_given_y1_q"));
    aux.p_u_given_y[1].push_back(random_kernel(rng, model.num_y(2), nu2, "pu2_given_y2_q"));
    aux.p_v_given_u[0].push_back(nv1 == 1 ? StochasticKernel::constant(nu1, "pv1_given_u1_q")
                                          : random_kernel(rng, nu1, nv1, "pv1_given_u1_q"));
    aux.p_v_given_u[1].push_back(nv2 == 1 ? StochasticKernel::constant(nu2, "pv2_given_u2_q")
                                          : random_kernel(rng, nu2, nv2, "pv2_given_u2_q"));
  }
  return aux;
}

/// Random boundary point of an inner-style constraint set (pure rate
/// half-spaces plus one distortion floor): rates are lifted until every rate
/// constraint holds, then D is pinned to the floor so the point sits on the
/// region boundary.
inline RateTuple sample_inner_boundary_point(const ConstraintSet& inner, SeededRng& rng,
                                             double max_extra = 1.0) {
  RateTuple p;
  p.metric = inner.metric;
  double coords[4] = {rng.uniform(0.0, max_extra), rng.uniform(0.0, max_extra),
                      rng.uniform(0.0, max_extra), rng.uniform(0.0, max_extra)};
  const Constraint* floor = nullptr;
  for (const Constraint& c : inner.constraints) {
    if (c.d_coeff != 0.0) {
      if (c.a != std::array<double, 4>{0, 0, 0, 0}) {
        throw std::invalid_argument(
            "sample_inner_boundary_point: expected an inner-style set (constraint '" +
            c.label + "' mixes rates with D)");
      }
      floor = &c;
    }
  }
  if (floor == nullptr) {
    throw std::invalid_argument("sample_inner_boundary_point: no distortion floor");
  }
  // One lifting sweep suffices: raising a coordinate never breaks another
  // nonnegative-coefficient constraint.
  for (const Constraint& c : inner.constraints) {
    if (c.d_coeff != 0.0) continue;
    double lhs = 0.0;
    for (int i = 0; i < 4; ++i) lhs += c.a[i] * coords[i];
    if (lhs < c.rhs) {
      for (int i = 0; i < 4; ++i) {
        if (c.a[i] != 0.0) {
          coords[i] += c.rhs - lhs;
          break;
        }
      }
    }
  }
  p.r1 = coords[0];
  p.r2 = coords[1];
  p.l1 = coords[2];
  p.l2 = coords[3];
  p.d = floor->rhs;
  return p;
}

}  // namespace ceoleak

#endif  // CEOLEAK_SAMPLING_HPP
