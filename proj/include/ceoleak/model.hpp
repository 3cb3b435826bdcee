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

#ifndef CEOLEAK_MODEL_HPP
#define CEOLEAK_MODEL_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ceoleak {

using ProbVector = std::vector<double>;

/// Tolerance for "sums to one" checks on probability vectors and kernel rows.
inline constexpr double kProbSumTol = 1e-12;

inline void validate_prob_vector(const ProbVector& p, const std::string& name) {
  if (p.empty()) {
    throw std::invalid_argument(name + ": probability vector is empty");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0)) {
      throw std::invalid_argument(name + ": entry " + std::to_string(i) +
                                  " is negative (" + std::to_string(p[i]) + ")");
    }
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw std::invalid_argument(name + ": entries sum to " + std::to_string(sum) +
                                ", expected 1");
  }
}

/// Row-stochastic kernel P(out|in). Rows are indexed by the input symbol and
/// stored contiguously; every row must be a probability vector.
class StochasticKernel {
 public:
  StochasticKernel() = default;

  StochasticKernel(int num_inputs, int num_outputs, std::vector<double> probs,
                   std::string name = "kernel")
      : num_inputs_(num_inputs), num_outputs_(num_outputs), p_(std::move(probs)),
        name_(std::move(name)) {
    if (num_inputs_ <= 0 || num_outputs_ <= 0) {
      throw std::invalid_argument(name_ + ": alphabet sizes must be positive");
    }
    if (p_.size() != static_cast<std::size_t>(num_inputs_) * num_outputs_) {
      throw std::invalid_argument(
          name_ + ": expected " + std::to_string(num_inputs_) + "x" +
          std::to_string(num_outputs_) + " entries, got " + std::to_string(p_.size()));
    }
    for (int i = 0; i < num_inputs_; ++i) {
      double sum = 0.0;
      for (int o = 0; o < num_outputs_; ++o) {
        const double v = (*this)(i, o);
        if (!(v >= 0.0)) {
          throw std::invalid_argument(name_ + ": row " + std::to_string(i) +
                                      " has negative entry " + std::to_string(v));
        }
        sum += v;
      }
      if (std::abs(sum - 1.0) > kProbSumTol) {
        throw std::invalid_argument(name_ + ": row " + std::to_string(i) +
                                    " sums to " + std::to_string(sum) + ", expected 1");
      }
    }
  }

  double operator()(int in, int out) const {
    return p_[static_cast<std::size_t>(in) * num_outputs_ + out];
  }

  int num_inputs() const { return num_inputs_; }
  int num_outputs() const { return num_outputs_; }
  const std::vector<double>& data() const { return p_; }
  const std::string& name() const { return name_; }

  /// P(out|in) = [out == in].
  static StochasticKernel identity(int n, std::string name = "identity") {
    std::vector<double> p(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i) * n + i] = 1.0;
    return StochasticKernel(n, n, std::move(p), std::move(name));
  }

  /// Single-output (constant) kernel: the output carries no information.
  static StochasticKernel constant(int num_inputs, std::string name = "constant") {
    return StochasticKernel(num_inputs, 1,
                            std::vector<double>(static_cast<std::size_t>(num_inputs), 1.0),
                            std::move(name));
  }

  /// Binary symmetric kernel with the given crossover probability.
  static StochasticKernel binary_symmetric(double crossover, std::string name = "bsc") {
    return StochasticKernel(2, 2, {1.0 - crossover, crossover, crossover, 1.0 - crossover},
                            std::move(name));
  }

  /// True when all rows are identical: the output is independent of the input.
  bool output_independent_of_input(double tol = kProbSumTol) const {
    for (int i = 1; i < num_inputs_; ++i) {
      for (int o = 0; o < num_outputs_; ++o) {
        if (std::abs((*this)(i, o) - (*this)(0, o)) > tol) return false;
      }
    }
    return true;
  }

 private:
  int num_inputs_ = 0;
  int num_outputs_ = 0;
  std::vector<double> p_;
  std::string name_;
};

/// Discrete memoryless CEO source: a remote source X observed by two agents
/// through P_{Y1|X}, P_{Y2|X} and by the eavesdropper through P_{Z|X}.
struct DiscreteCeoModel {
  ProbVector p_x;
  StochasticKernel p_y1_given_x;
  StochasticKernel p_y2_given_x;
  StochasticKernel p_z_given_x;

  int num_x() const { return static_cast<int>(p_x.size()); }
  int num_y(int k) const { return k == 1 ? p_y1_given_x.num_outputs() : p_y2_given_x.num_outputs(); }
  int num_z() const { return p_z_given_x.num_outputs(); }

  const StochasticKernel& p_y_given_x(int k) const {
    return k == 1 ? p_y1_given_x : p_y2_given_x;
  }

  void validate() const {
    validate_prob_vector(p_x, "px");
    const int nx = num_x();
    auto check = [nx](const StochasticKernel& kern, const char* name) {
      if (kern.num_inputs() != nx) {
        throw std::invalid_argument(std::string(name) + ": expected " +
                                    std::to_string(nx) + " rows (one per source symbol), got " +
                                    std::to_string(kern.num_inputs()));
      }
    };
    check(p_y1_given_x, "py1_given_x");
    check(p_y2_given_x, "py2_given_x");
    check(p_z_given_x, "pz_given_x");
  }

  /// True when the eavesdropper observation is independent of the source
  /// (all rows of P_{Z|X} equal, or a singleton Z alphabet).
  bool z_independent_of_x(double tol = kProbSumTol) const {
    return p_z_given_x.output_independent_of_input(tol);
  }
};

/// Time-sharing weight plus per-agent two-layer auxiliary channels
/// P_{U_k|Y_k,Q} and P_{V_k|U_k,Q}. Kernels are stored per time-sharing
/// symbol q, so p_u_given_y[k-1][q] maps y -> u and p_v_given_u[k-1][q]
/// maps u -> v.
struct AuxiliarySystem {
  ProbVector p_q;
  std::array<std::vector<StochasticKernel>, 2> p_u_given_y;
  std::array<std::vector<StochasticKernel>, 2> p_v_given_u;

  int num_q() const { return static_cast<int>(p_q.size()); }
  int num_u(int k) const { return p_u_given_y[k - 1].at(0).num_outputs(); }
  int num_v(int k) const { return p_v_given_u[k - 1].at(0).num_outputs(); }

  void validate() const {
    validate_prob_vector(p_q, "pq");
    const int nq = num_q();
    for (int k = 1; k <= 2; ++k) {
      const auto& us = p_u_given_y[k - 1];
      const auto& vs = p_v_given_u[k - 1];
      const std::string uname = "pu" + std::to_string(k) + "_given_y" + std::to_string(k) + "_q";
      const std::string vname = "pv" + std::to_string(k) + "_given_u" + std::to_string(k) + "_q";
      if (static_cast<int>(us.size()) != nq) {
        throw std::invalid_argument(uname + ": expected " + std::to_string(nq) +
                                    " per-q kernels, got " + std::to_string(us.size()));
      }
      if (static_cast<int>(vs.size()) != nq) {
        throw std::invalid_argument(vname + ": expected " + std::to_string(nq) +
                                    " per-q kernels, got " + std::to_string(vs.size()));
      }
      for (int q = 0; q < nq; ++q) {
        if (us[q].num_inputs() != us[0].num_inputs() ||
            us[q].num_outputs() != us[0].num_outputs()) {
          throw std::invalid_argument(uname + ": kernel for q=" + std::to_string(q) +
                                      " has inconsistent dimensions");
        }
        if (vs[q].num_inputs() != us[0].num_outputs() ||
            vs[q].num_outputs() != vs[0].num_outputs()) {
          throw std::invalid_argument(vname + ": kernel for q=" + std::to_string(q) +
                                      " does not chain with " + uname);
        }
      }
    }
  }

  bool v_constant(int k) const { return num_v(k) == 1; }
  bool v_constant() const { return v_constant(1) && v_constant(2); }

  /// |Q| = |U_k| = |V_k| = 1: all auxiliaries carry no information.
  static AuxiliarySystem trivial(int ny1, int ny2) {
    AuxiliarySystem aux;
    aux.p_q = {1.0};
    aux.p_u_given_y[0] = {StochasticKernel::constant(ny1, "pu1_given_y1_q")};
    aux.p_u_given_y[1] = {StochasticKernel::constant(ny2, "pu2_given_y2_q")};
    aux.p_v_given_u[0] = {StochasticKernel::constant(1, "pv1_given_u1_q")};
    aux.p_v_given_u[1] = {StochasticKernel::constant(1, "pv2_given_u2_q")};
    return aux;
  }

  /// U_k = Y_k, V_k constant, |Q| = 1.
  static AuxiliarySystem identity_u(int ny1, int ny2) {
    AuxiliarySystem aux;
    aux.p_q = {1.0};
    aux.p_u_given_y[0] = {StochasticKernel::identity(ny1, "pu1_given_y1_q")};
    aux.p_u_given_y[1] = {StochasticKernel::identity(ny2, "pu2_given_y2_q")};
    aux.p_v_given_u[0] = {StochasticKernel::constant(ny1, "pv1_given_u1_q")};
    aux.p_v_given_u[1] = {StochasticKernel::constant(ny2, "pv2_given_u2_q")};
    return aux;
  }

  /// Copy with agent k's U-layer replaced by a constant channel (and the
  /// V-layer degenerated to match). Used by the dominance argument.
  AuxiliarySystem with_constant_u(int k) const {
    AuxiliarySystem out = *this;
    const int ny = p_u_given_y[k - 1].at(0).num_inputs();
    const std::string uname = "pu" + std::to_string(k) + "_given_y" + std::to_string(k) + "_q";
    const std::string vname = "pv" + std::to_string(k) + "_given_u" + std::to_string(k) + "_q";
    out.p_u_given_y[k - 1].assign(num_q(), StochasticKernel::constant(ny, uname));
    out.p_v_given_u[k - 1].assign(num_q(), StochasticKernel::constant(1, vname));
    return out;
  }

  /// Copy with V_k = U_k for both agents (identity V-layer).
  AuxiliarySystem with_v_equal_u() const {
    AuxiliarySystem out = *this;
    for (int k = 1; k <= 2; ++k) {
      const std::string vname = "pv" + std::to_string(k) + "_given_u" + std::to_string(k) + "_q";
      out.p_v_given_u[k - 1].assign(num_q(), StochasticKernel::identity(num_u(k), vname));
    }
    return out;
  }
};

/// Cardinality caps on the auxiliary alphabets, resolved against a concrete
/// model. Each bound family carries its own caps; they are treated purely as
/// configuration limits here.
struct CardinalityCaps {
  int max_q = 6;
  std::array<int, 2> max_u{};
  std::array<int, 2> max_v{};

  static CardinalityCaps inner_general(const DiscreteCeoModel& m) {
    CardinalityCaps c;
    for (int k = 1; k <= 2; ++k) {
      const int ny = m.num_y(k);
      c.max_v[k - 1] = ny + 8;
      c.max_u[k - 1] = (ny + 8) * (ny + 6);
    }
    return c;
  }

  static CardinalityCaps outer_general(const DiscreteCeoModel& m) {
    CardinalityCaps c;
    for (int k = 1; k <= 2; ++k) {
      const int ny = m.num_y(k);
      c.max_v[k - 1] = ny + 10;
      c.max_u[k - 1] = (ny + 10) * (ny + 5);
    }
    return c;
  }

  static CardinalityCaps logloss_no_si(const DiscreteCeoModel& m) {
    CardinalityCaps c;
    for (int k = 1; k <= 2; ++k) {
      c.max_u[k - 1] = m.num_y(k) + 3;
      c.max_v[k - 1] = 1;
    }
    return c;
  }

  static CardinalityCaps logloss_si_outer(const DiscreteCeoModel& m) {
    CardinalityCaps c;
    for (int k = 1; k <= 2; ++k) {
      const int ny = m.num_y(k);
      c.max_v[k - 1] = ny + 9;
      c.max_u[k - 1] = (ny + 9) * (ny + 4);
    }
    return c;
  }
};

inline void check_cardinality_caps(const AuxiliarySystem& aux, const CardinalityCaps& caps) {
  if (aux.num_q() > caps.max_q) {
    throw std::invalid_argument("pq: |Q| = " + std::to_string(aux.num_q()) +
                                " exceeds cap " + std::to_string(caps.max_q));
  }
  for (int k = 1; k <= 2; ++k) {
    if (aux.num_u(k) > caps.max_u[k - 1]) {
      throw std::invalid_argument("pu" + std::to_string(k) + "_given_y" + std::to_string(k) +
                                  "_q: |U| = " + std::to_string(aux.num_u(k)) +
                                  " exceeds cap " + std::to_string(caps.max_u[k - 1]));
    }
    if (aux.num_v(k) > caps.max_v[k - 1]) {
      throw std::invalid_argument("pv" + std::to_string(k) + "_given_u" + std::to_string(k) +
                                  "_q: |V| = " + std::to_string(aux.num_v(k)) +
                                  " exceeds cap " + std::to_string(caps.max_v[k - 1]));
    }
  }
}

/// Requires kernel input alphabets of `aux` to match the model's measurement
/// alphabets; throws naming the offending kernel.
inline void check_model_aux_consistency(const DiscreteCeoModel& model,
                                        const AuxiliarySystem& aux) {
  for (int k = 1; k <= 2; ++k) {
    const int ny = model.num_y(k);
    const int got = aux.p_u_given_y[k - 1].at(0).num_inputs();
    if (got != ny) {
      throw std::invalid_argument("pu" + std::to_string(k) + "_given_y" + std::to_string(k) +
                                  "_q: expects |Y" + std::to_string(k) + "| = " +
                                  std::to_string(got) + " but the model has |Y" +
                                  std::to_string(k) + "| = " + std::to_string(ny));
    }
  }
}

}  // namespace ceoleak

#endif  // CEOLEAK_MODEL_HPP
