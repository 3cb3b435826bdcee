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

#ifndef CEOLEAK_IO_HPP
#define CEOLEAK_IO_HPP

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ceoleak/discrete_bounds.hpp"
#include "ceoleak/gaussian.hpp"
#include "ceoleak/model.hpp"
#include "ceoleak/region.hpp"
#include "ceoleak/verify.hpp"

namespace ceoleak {

using Json = nlohmann::ordered_json;

inline constexpr int kModelSchemaVersion = 1;

/// Shortest round-trippable decimal; used everywhere a number reaches a file
/// so identical configurations produce byte-identical artifacts.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct ModelFile {
  DiscreteCeoModel model;
  AuxiliarySystem aux;
};

namespace io_detail {

inline std::vector<double> parse_vector(const Json& j, const std::string& field) {
  if (!j.is_array()) throw std::invalid_argument(field + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw std::invalid_argument(field + ": expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

inline StochasticKernel parse_kernel(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument(field + ": expected a non-empty array of rows");
  }
  std::vector<double> flat;
  const std::size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::vector<double> row = parse_vector(j.at(r), field + " row " + std::to_string(r));
    if (row.size() != cols) {
      throw std::invalid_argument(field + " row " + std::to_string(r) +
                                  ": ragged kernel (expected " + std::to_string(cols) +
                                  " entries)");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return StochasticKernel(static_cast<int>(j.size()), static_cast<int>(cols), std::move(flat),
                          field);
}

/// Per-q kernel stack: [q][in][out].
inline std::vector<StochasticKernel> parse_kernel_stack(const Json& j, const std::string& field,
                                                        int expected_q) {
  if (!j.is_array() || static_cast<int>(j.size()) != expected_q) {
    throw std::invalid_argument(field + ": expected " + std::to_string(expected_q) +
                                " per-q kernels");
  }
  std::vector<StochasticKernel> out;
  for (int q = 0; q < expected_q; ++q) {
    out.push_back(parse_kernel(j.at(q), field + "[q=" + std::to_string(q) + "]"));
  }
  return out;
}

}  // namespace io_detail

/// Parses the schema-1 model document. Optional fields: pz_given_x (defaults
/// to a trivial eavesdropper channel), pq (defaults to |Q| = 1), and the
/// V-layer kernels (default to constant V).
inline ModelFile parse_model_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("model file: expected a JSON object");
  if (!j.contains("schema")) throw std::invalid_argument("model file: missing 'schema'");
  if (!j.at("schema").is_number_integer() ||
      j.at("schema").get<int>() != kModelSchemaVersion) {
    throw std::invalid_argument("model file: unsupported schema version (expected " +
                                std::to_string(kModelSchemaVersion) + ")");
  }
  for (const char* required : {"px", "py1_given_x", "py2_given_x"}) {
    if (!j.contains(required)) {
      throw std::invalid_argument(std::string("model file: missing required field '") +
                                  required + "'");
    }
  }

  ModelFile out;
  out.model.p_x = io_detail::parse_vector(j.at("px"), "px");
  validate_prob_vector(out.model.p_x, "px");
  out.model.p_y1_given_x = io_detail::parse_kernel(j.at("py1_given_x"), "py1_given_x");
  out.model.p_y2_given_x = io_detail::parse_kernel(j.at("py2_given_x"), "py2_given_x");
  out.model.p_z_given_x =
      j.contains("pz_given_x")
          ? io_detail::parse_kernel(j.at("pz_given_x"), "pz_given_x")
          : StochasticKernel::constant(out.model.num_x(), "pz_given_x");
  out.model.validate();

  if (j.contains("pq")) {
    out.aux.p_q = io_detail::parse_vector(j.at("pq"), "pq");
    validate_prob_vector(out.aux.p_q, "pq");
  } else {
    out.aux.p_q = {1.0};
  }
  const int nq = out.aux.num_q();

  for (int k = 1; k <= 2; ++k) {
    const std::string ufield = "pu" + std::to_string(k) + "_given_y" + std::to_string(k) + "_q";
    if (j.contains(ufield)) {
      out.aux.p_u_given_y[k - 1] = io_detail::parse_kernel_stack(j.at(ufield), ufield, nq);
    } else {
      out.aux.p_u_given_y[k - 1].assign(nq,
                                        StochasticKernel::constant(out.model.num_y(k), ufield));
    }
    const int nu = out.aux.p_u_given_y[k - 1].at(0).num_outputs();
    const std::string vfield = "pv" + std::to_string(k) + "_given_u" + std::to_string(k) + "_q";
    if (j.contains(vfield)) {
      out.aux.p_v_given_u[k - 1] = io_detail::parse_kernel_stack(j.at(vfield), vfield, nq);
    } else {
      out.aux.p_v_given_u[k - 1].assign(nq, StochasticKernel::constant(nu, vfield));
    }
  }
  out.aux.validate();
  check_model_aux_consistency(out.model, out.aux);
  return out;
}

inline ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("model file '" + path + "': " + e.what());
  }
  try {
    return parse_model_json(j);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("model file '" + path + "': " + e.what());
  }
}

inline Json to_json(const Constraint& c) {
  Json j;
  j["label"] = c.label;
  j["a"] = {{"R1", c.a[0]}, {"R2", c.a[1]}, {"L1", c.a[2]}, {"L2", c.a[3]}};
  j["d"] = c.d_coeff;
  j["g"] = c.g == DistortionTransform::Identity ? "identity" : "half_log2";
  j["rhs"] = c.rhs;
  return j;
}

inline Json to_json(const ConstraintSet& cs) {
  Json j;
  j["metric"] = metric_name(cs.metric);
  j["constraints"] = Json::array();
  for (const Constraint& c : cs.constraints) j["constraints"].push_back(to_json(c));
  return j;
}

inline Json to_json(const InformationQuantities& iq) {
  Json j = Json::object();
  for (const auto& [name, value] : iq.values) j[name] = value;
  return j;
}

inline Json to_json(const RateTuple& p) {
  Json j;
  j["R1"] = p.r1;
  j["R2"] = p.r2;
  j["L1"] = p.l1;
  j["L2"] = p.l2;
  j["D"] = p.d;
  j["metric"] = metric_name(p.metric);
  return j;
}

inline Json to_json(const FeasibilityReport& r) {
  Json j;
  j["feasible"] = r.feasible;
  j["max_violation"] = r.max_violation;
  j["violations"] = Json::array();
  for (const auto& [label, slack] : r.violations) {
    j["violations"].push_back({{"label", label}, {"slack", slack}});
  }
  return j;
}

inline Json to_json(const DominanceReport& r) {
  Json j;
  j["all_dominated"] = r.all_dominated;
  j["entries"] = Json::array();
  for (const DominanceEntry& e : r.entries) {
    Json je;
    je["point"] = e.point_label;
    je["coordinates"] = to_json(e.point);
    je["dominator"] = e.dominator_label;
    je["dominator_coordinates"] = to_json(e.dominator);
    je["dominated"] = e.dominated;
    if (!e.dominated) {
      je["violated_coordinate"] = e.violated_coordinate;
      je["violation"] = e.violation;
    }
    j["entries"].push_back(je);
  }
  return j;
}

inline Json to_json(const CounterexampleReport& r) {
  Json j;
  j["gap"] = r.gap;
  j["outer_delta1_cap"] = r.outer_delta1_cap;
  j["inner_delta1_max"] = r.inner_delta1_max;
  j["distortion_at_extreme"] = r.distortion_at_extreme;
  j["verdict"] = r.strict ? "strict" : "non-strict";
  return j;
}

inline Json to_json(const SiGapReport& r) {
  Json j;
  j["xi_prime"] = r.xi_prime;
  j["I(Z;V1|Q)"] = r.leak_z_v1;
  j["I(Z;V2|Q)"] = r.leak_z_v2;
  j["rows"] = Json::array();
  for (const SiGapRow& row : r.rows) {
    j["rows"].push_back({{"label", row.label},
                         {"inner_rhs", row.inner_rhs},
                         {"outer_rhs", row.outer_rhs},
                         {"inner_minus_outer", row.inner_minus_outer},
                         {"inner_d", row.inner_d_coeff},
                         {"outer_d", row.outer_d_coeff}});
  }
  return j;
}

inline Json to_json(const CheckResult& r) {
  Json j;
  j["check"] = r.name;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j;
}

/// Aligned text rendering of a constraint set, one inequality per line.
inline std::string format_constraint_table(const ConstraintSet& cs) {
  std::ostringstream os;
  os << "metric: " << metric_name(cs.metric) << '\n';
  for (const Constraint& c : cs.constraints) {
    std::string lhs;
    static constexpr const char* kNames[4] = {"R1", "R2", "L1", "L2"};
    for (int i = 0; i < 4; ++i) {
      if (c.a[i] != 0.0) {
        if (!lhs.empty()) lhs += " + ";
        lhs += kNames[i];
      }
    }
    if (c.d_coeff != 0.0) {
      if (!lhs.empty()) lhs += " + ";
      lhs += c.g == DistortionTransform::Identity ? "D" : "(1/2)log2(D)";
    }
    if (lhs.empty()) lhs = "0";
    os << "  ";
    os.width(18);
    os << std::left << c.label;
    os.width(28);
    os << std::left << lhs;
    os << ">= " << format_double(c.rhs) << '\n';
  }
  return os.str();
}

inline std::string format_quantities_table(const InformationQuantities& iq) {
  std::ostringstream os;
  for (const auto& [name, value] : iq.values) {
    os << "  ";
    os.width(20);
    os << std::left << name;
    os << "= " << format_double(value) << '\n';
  }
  return os.str();
}

/// CSV of labeled points, columns: label,R1,R2,L1,L2,D.
inline void write_extreme_points_csv(std::ostream& os, const std::vector<LabeledPoint>& pts) {
  os << "label,R1,R2,L1,L2,D\n";
  for (const LabeledPoint& lp : pts) {
    os << lp.label << ',' << format_double(lp.point.r1) << ',' << format_double(lp.point.r2)
       << ',' << format_double(lp.point.l1) << ',' << format_double(lp.point.l2) << ','
       << format_double(lp.point.d) << '\n';
  }
}

/// CSV of curve rows, columns: L1,minD,r1_witness,r2_witness.
inline void write_curve_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
  os << "L1,minD,r1_witness,r2_witness\n";
  for (const CurveRow& row : rows) {
    os << format_double(row.l1) << ',' << format_double(row.min_d) << ','
       << format_double(row.witness.r1) << ',' << format_double(row.witness.r2) << '\n';
  }
}

}  // namespace ceoleak

#endif  // CEOLEAK_IO_HPP
