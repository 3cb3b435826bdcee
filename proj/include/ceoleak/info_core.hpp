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

#ifndef CEOLEAK_INFO_CORE_HPP
#define CEOLEAK_INFO_CORE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceoleak/model.hpp"

namespace ceoleak {

/// Axes of the dense joint tensor, in storage order.
enum class Axis : int { Q = 0, X, Z, Y1, Y2, U1, U2, V1, V2 };

inline constexpr int kNumAxes = 9;

inline const char* axis_name(Axis a) {
  static constexpr const char* kNames[kNumAxes] = {"Q",  "X",  "Z",  "Y1", "Y2",
                                                   "U1", "U2", "V1", "V2"};
  return kNames[static_cast<int>(a)];
}

inline Axis axis_from_name(const std::string& name) {
  for (int i = 0; i < kNumAxes; ++i) {
    if (name == axis_name(static_cast<Axis>(i))) return static_cast<Axis>(i);
  }
  throw std::invalid_argument("unknown variable symbol: " + name);
}

/// A set of tensor axes, used to name the variables of an information
/// quantity. Bit i corresponds to Axis i.
class AxisSet {
 public:
  constexpr AxisSet() = default;
  AxisSet(std::initializer_list<Axis> axes) {
    for (Axis a : axes) mask_ |= bit(a);
  }

  static constexpr AxisSet from_mask(std::uint32_t mask) {
    AxisSet s;
    s.mask_ = mask;
    return s;
  }

  bool contains(Axis a) const { return (mask_ & bit(a)) != 0; }
  bool empty() const { return mask_ == 0; }
  std::uint32_t mask() const { return mask_; }

  AxisSet operator|(AxisSet other) const { return from_mask(mask_ | other.mask_); }
  bool intersects(AxisSet other) const { return (mask_ & other.mask_) != 0; }
  bool operator==(const AxisSet&) const = default;

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < kNumAxes; ++i) {
      if (contains(static_cast<Axis>(i))) {
        if (!out.empty()) out += ",";
        out += axis_name(static_cast<Axis>(i));
      }
    }
    return out.empty() ? "()" : out;
  }

 private:
  static constexpr std::uint32_t bit(Axis a) { return 1u << static_cast<int>(a); }
  std::uint32_t mask_ = 0;
};

/// Dense probability tensor over (Q, X, Z, Y1, Y2, U1, U2, V1, V2).
///
/// Mass must total one to within 1e-10. The tensor is immutable after
/// construction; all information measures are computed from marginals.
class JointDistribution {
 public:
  static constexpr double kMassTol = 1e-10;

  JointDistribution(std::array<int, kNumAxes> dims, std::vector<double> p)
      : dims_(dims), p_(std::move(p)) {
    std::size_t cells = 1;
    for (int i = 0; i < kNumAxes; ++i) {
      if (dims_[i] <= 0) {
        throw std::invalid_argument(std::string("joint tensor axis ") +
                                    axis_name(static_cast<Axis>(i)) +
                                    " has non-positive size");
      }
      cells *= static_cast<std::size_t>(dims_[i]);
    }
    if (p_.size() != cells) {
      throw std::invalid_argument("joint tensor has " + std::to_string(p_.size()) +
                                  " entries, expected " + std::to_string(cells));
    }
    double mass = 0.0;
    for (double v : p_) {
      if (!(v >= 0.0) || v > 1.0 + kMassTol) {
        throw std::invalid_argument("joint tensor entry out of [0,1]: " + std::to_string(v));
      }
      mass += v;
    }
    if (std::abs(mass - 1.0) > kMassTol) {
      throw std::invalid_argument("joint tensor mass is " + std::to_string(mass) +
                                  ", expected 1");
    }
  }

  const std::array<int, kNumAxes>& dims() const { return dims_; }
  int dim(Axis a) const { return dims_[static_cast<int>(a)]; }
  const std::vector<double>& data() const { return p_; }

  /// Marginal over the axes in `vars`, densely indexed in canonical axis
  /// order (lower-numbered axis varies slowest).
  std::vector<double> marginal(AxisSet vars) const {
    std::array<std::size_t, kNumAxes> out_stride{};
    std::size_t out_size = 1;
    for (int i = kNumAxes - 1; i >= 0; --i) {
      if (vars.contains(static_cast<Axis>(i))) {
        out_stride[i] = out_size;
        out_size *= static_cast<std::size_t>(dims_[i]);
      } else {
        out_stride[i] = 0;
      }
    }
    std::vector<double> out(out_size, 0.0);
    std::array<int, kNumAxes> coord{};
    std::size_t out_index = 0;
    for (double v : p_) {
      out[out_index] += v;
      // Odometer increment, keeping out_index in sync.
      for (int i = kNumAxes - 1; i >= 0; --i) {
        ++coord[i];
        out_index += out_stride[i];
        if (coord[i] < dims_[i]) break;
        coord[i] = 0;
        out_index -= out_stride[i] * static_cast<std::size_t>(dims_[i]);
      }
    }
    return out;
  }

 private:
  std::array<int, kNumAxes> dims_{};
  std::vector<double> p_;
};

/// Assembles the dense joint
///   P_Q P_X P_{Z|X} prod_k P_{Y_k|X} P_{U_k|Y_k,Q} P_{V_k|U_k,Q}
/// over (Q,X,Z,Y1,Y2,U1,U2,V1,V2).
inline JointDistribution build_joint(const DiscreteCeoModel& model,
                                     const AuxiliarySystem& aux) {
  model.validate();
  aux.validate();
  check_model_aux_consistency(model, aux);

  const std::array<int, kNumAxes> dims = {aux.num_q(),  model.num_x(), model.num_z(),
                                          model.num_y(1), model.num_y(2), aux.num_u(1),
                                          aux.num_u(2), aux.num_v(1),  aux.num_v(2)};
  std::size_t cells = 1;
  for (int d : dims) cells *= static_cast<std::size_t>(d);
  std::vector<double> p(cells);

  std::size_t idx = 0;
  for (int q = 0; q < dims[0]; ++q) {
    const double pq = aux.p_q[q];
    for (int x = 0; x < dims[1]; ++x) {
      const double pqx = pq * model.p_x[x];
      for (int z = 0; z < dims[2]; ++z) {
        const double pqxz = pqx * model.p_z_given_x(x, z);
        for (int y1 = 0; y1 < dims[3]; ++y1) {
          const double p4 = pqxz * model.p_y1_given_x(x, y1);
          for (int y2 = 0; y2 < dims[4]; ++y2) {
            const double p5 = p4 * model.p_y2_given_x(x, y2);
            for (int u1 = 0; u1 < dims[5]; ++u1) {
              const double p6 = p5 * aux.p_u_given_y[0][q](y1, u1);
              for (int u2 = 0; u2 < dims[6]; ++u2) {
                const double p7 = p6 * aux.p_u_given_y[1][q](y2, u2);
                for (int v1 = 0; v1 < dims[7]; ++v1) {
                  const double p8 = p7 * aux.p_v_given_u[0][q](u1, v1);
                  for (int v2 = 0; v2 < dims[8]; ++v2) {
                    p[idx++] = p8 * aux.p_v_given_u[1][q](u2, v2);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return JointDistribution(dims, std::move(p));
}

/// Clamp tolerance for tiny negative values produced by floating-point
/// cancellation in entropy differences.
inline constexpr double kInfoClampTol = 1e-12;

inline double clamp_info(double v) {
  return (v < 0.0 && v >= -kInfoClampTol) ? 0.0 : v;
}

/// H(vars) in bits. 0 log 0 contributes zero.
inline double entropy(const JointDistribution& joint, AxisSet vars) {
  if (vars.empty()) return 0.0;
  const std::vector<double> m = joint.marginal(vars);
  double h = 0.0;
  for (double v : m) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

/// H(vars | given) in bits.
inline double conditional_entropy(const JointDistribution& joint, AxisSet vars,
                                  AxisSet given) {
  if (vars.intersects(given)) {
    throw std::invalid_argument("conditional_entropy: variable sets overlap (" +
                                vars.to_string() + " | " + given.to_string() + ")");
  }
  return clamp_info(entropy(joint, vars | given) - entropy(joint, given));
}

/// I(a ; b | c) in bits, computed as H(a|c) - H(a|b,c).
inline double conditional_mutual_information(const JointDistribution& joint, AxisSet a,
                                             AxisSet b, AxisSet c) {
  if (a.intersects(b) || a.intersects(c) || b.intersects(c)) {
    throw std::invalid_argument("conditional_mutual_information: sets overlap (" +
                                a.to_string() + " ; " + b.to_string() + " | " +
                                c.to_string() + ")");
  }
  if (a.empty() || b.empty()) return 0.0;
  const double v = entropy(joint, a | c) + entropy(joint, b | c) -
                   entropy(joint, a | b | c) - entropy(joint, c);
  return clamp_info(v);
}

inline double mutual_information(const JointDistribution& joint, AxisSet a, AxisSet b) {
  return conditional_mutual_information(joint, a, b, AxisSet{});
}

}  // namespace ceoleak

#endif  // CEOLEAK_INFO_CORE_HPP
