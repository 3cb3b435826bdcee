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

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ceoleak/discrete_bounds.hpp"
#include "ceoleak/gaussian.hpp"
#include "ceoleak/info_core.hpp"
#include "ceoleak/io.hpp"
#include "ceoleak/model.hpp"
#include "ceoleak/region.hpp"
#include "ceoleak/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

ceoleak::DistortionMetric parse_metric(const std::string& name) {
  if (name == "logloss") return ceoleak::DistortionMetric::LogLoss;
  if (name == "quadratic") return ceoleak::DistortionMetric::Quadratic;
  throw std::invalid_argument("metric must be 'logloss' or 'quadratic', got '" + name + "'");
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = spec.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("grid must be start:end:step, got '" + spec + "'");
  }
  const double start = std::stod(spec.substr(0, first));
  const double end = std::stod(spec.substr(first + 1, second - first - 1));
  const double step = std::stod(spec.substr(second + 1));
  if (!(step > 0.0) || end < start || start < 0.0) {
    throw std::invalid_argument("grid must satisfy 0 <= start <= end with step > 0");
  }
  std::vector<double> grid;
  const int n = static_cast<int>(std::floor((end - start) / step + 1e-9));
  for (int i = 0; i <= n; ++i) grid.push_back(start + i * step);
  return grid;
}

double parse_rate(const std::string& text, const char* flag) {
  try {
    const double v = std::stod(text);
    if (std::isnan(v)) throw std::invalid_argument("nan");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(flag) + ": expected a number or 'inf', got '" +
                                text + "'");
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  return out;
}

void emit_json(const ceoleak::Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    auto out = open_output(out_path);
    out << j.dump(2) << '\n';
  }
}

std::string stem_with_suffix(const std::string& path, const std::string& suffix) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos || path.find('/', dot) != std::string::npos) {
    return path + suffix;
  }
  return path.substr(0, dot) + suffix + path.substr(dot);
}

struct GaussianFlags {
  double sigma2_x = 2.0;
  double sigma2_n1 = 1.0;
  double sigma2_n2 = 1.0;
  int grid_points = 201;
  double r_max = -1.0;

  ceoleak::GaussianCeoParams params() const { return {sigma2_x, sigma2_n1, sigma2_n2}; }
  ceoleak::SearchConfig search() const {
    ceoleak::SearchConfig cfg;
    cfg.grid_points = grid_points;
    cfg.r_max = r_max;
    return cfg;
  }
};

void add_gaussian_flags(CLI::App* cmd, GaussianFlags& f) {
  cmd->add_option("--sigma-x2", f.sigma2_x, "Source variance sigma_X^2");
  cmd->add_option("--sigma-n1", f.sigma2_n1, "Noise variance sigma_N1^2");
  cmd->add_option("--sigma-n2", f.sigma2_n2, "Noise variance sigma_N2^2");
  cmd->add_option("--grid-points", f.grid_points, "Search grid points per axis")
      ->check(CLI::Range(2, 100000));
  cmd->add_option("--r-max", f.r_max, "Auxiliary-rate search bound (default: auto)");
}

int cmd_gaussian_curve(const GaussianFlags& flags, double rate1, double rate2,
                       const std::string& metric_name, const std::string& grid_spec,
                       const std::string& out_path, bool table1) {
  const ceoleak::DistortionMetric metric = parse_metric(metric_name);
  const std::vector<double> grid = parse_grid(grid_spec);
  if (table1) {
    const auto& presets = ceoleak::curve_presets();
    for (std::size_t i = 0; i < presets.size(); ++i) {
      const auto& row = presets[i];
      ceoleak::GaussianCeoParams params{row.sigma2_x, row.sigma2_n1, row.sigma2_n2};
      const auto rows =
          ceoleak::leakage_curve(params, row.rate1, row.rate2, grid, metric, flags.search());
      const std::string path =
          stem_with_suffix(out_path, "_row" + std::to_string(i + 1));
      auto out = open_output(path);
      ceoleak::write_curve_csv(out, rows);
      std::cout << path << '\n';
    }
    return kExitOk;
  }
  const auto rows =
      ceoleak::leakage_curve(flags.params(), rate1, rate2, grid, metric, flags.search());
  auto out = open_output(out_path);
  ceoleak::write_curve_csv(out, rows);
  std::cout << out_path << '\n';
  return kExitOk;
}

int cmd_gaussian_member(const GaussianFlags& flags, const std::string& metric_name,
                        double rate1, double rate2, const std::string& leak1,
                        const std::string& leak2, double d, const std::string& out_path) {
  const ceoleak::DistortionMetric metric = parse_metric(metric_name);
  ceoleak::RateTuple tuple;
  tuple.r1 = rate1;
  tuple.r2 = rate2;
  tuple.l1 = parse_rate(leak1, "--l1");
  tuple.l2 = parse_rate(leak2, "--l2");
  tuple.d = d;
  tuple.metric = metric;
  const auto res = ceoleak::membership(flags.params(), tuple, metric, flags.search());
  ceoleak::Json j;
  j["tuple"] = ceoleak::to_json(tuple);
  j["member"] = res.member;
  j["witness"] = {{"r1", res.witness.r1}, {"r2", res.witness.r2}};
  j["min_slack_bits"] = res.best_slack;
  emit_json(j, out_path);
  return kExitOk;
}

int cmd_discrete_eval(const std::string& model_path, const std::string& out_path,
                      const std::string& format) {
  const ceoleak::ModelFile file = ceoleak::load_model_file(model_path);
  const ceoleak::JointDistribution joint = ceoleak::build_joint(file.model, file.aux);
  const ceoleak::InformationQuantities iq = ceoleak::compute_information_quantities(joint);

  if (format == "table") {
    std::ostringstream os;
    os << "information quantities\n" << ceoleak::format_quantities_table(iq);
    os << "\ninner bound (general distortion, log-loss floor)\n"
       << ceoleak::format_constraint_table(
              ceoleak::inner_bound_constraints(file.model, file.aux));
    os << "\nouter bound (general distortion, log-loss floor)\n"
       << ceoleak::format_constraint_table(
              ceoleak::outer_bound_constraints(file.model, file.aux));
    const bool no_si_table =
        file.model.num_z() == 1 || file.model.z_independent_of_x();
    if (no_si_table && file.aux.v_constant()) {
      os << "\nlog-loss inner bound (no side information at Eve)\n"
         << ceoleak::format_constraint_table(
                ceoleak::logloss_inner_no_si(file.model, file.aux));
      os << "\nlog-loss outer bound (no side information at Eve)\n"
         << ceoleak::format_constraint_table(
                ceoleak::logloss_outer_no_si(file.model, file.aux));
    } else {
      os << "\nlog-loss inner bound (side information at Eve)\n"
         << ceoleak::format_constraint_table(
                ceoleak::logloss_inner_si(file.model, file.aux));
      os << "\nlog-loss outer bound (side information at Eve)\n"
         << ceoleak::format_constraint_table(
                ceoleak::logloss_outer_si(file.model, file.aux));
    }
    if (out_path.empty()) {
      std::cout << os.str();
    } else {
      auto out = open_output(out_path);
      out << os.str();
    }
    return kExitOk;
  }
  if (format != "json") {
    throw std::invalid_argument("--format must be 'json' or 'table', got '" + format + "'");
  }

  ceoleak::Json j;
  j["schema"] = 1;
  j["alphabets"] = {{"X", file.model.num_x()},   {"Y1", file.model.num_y(1)},
                    {"Y2", file.model.num_y(2)}, {"Z", file.model.num_z()},
                    {"Q", file.aux.num_q()},     {"U1", file.aux.num_u(1)},
                    {"U2", file.aux.num_u(2)},   {"V1", file.aux.num_v(1)},
                    {"V2", file.aux.num_v(2)}};
  j["quantities"] = ceoleak::to_json(iq);
  j["xi"] = {{"xi1", iq.at("xi1")}, {"xi2", iq.at("xi2")}, {"xi_prime", iq.at("xi_prime")}};
  j["inner_general"] = ceoleak::to_json(ceoleak::inner_bound_constraints(file.model, file.aux));
  j["outer_general"] = ceoleak::to_json(ceoleak::outer_bound_constraints(file.model, file.aux));

  const bool no_si = file.model.num_z() == 1 || file.model.z_independent_of_x();
  if (no_si && file.aux.v_constant()) {
    j["logloss_inner_no_si"] =
        ceoleak::to_json(ceoleak::logloss_inner_no_si(file.model, file.aux));
    j["logloss_outer_no_si"] =
        ceoleak::to_json(ceoleak::logloss_outer_no_si(file.model, file.aux));
  } else {
    j["logloss_inner_si"] = ceoleak::to_json(ceoleak::logloss_inner_si(file.model, file.aux));
    j["logloss_outer_si"] = ceoleak::to_json(ceoleak::logloss_outer_si(file.model, file.aux));
    j["si_gap"] = ceoleak::to_json(ceoleak::si_gap_report(file.model, file.aux));
  }
  emit_json(j, out_path);
  return kExitOk;
}

int cmd_extreme_points(const std::string& model_path, const std::string& out_path,
                       const std::string& report_path) {
  const ceoleak::ModelFile file = ceoleak::load_model_file(model_path);
  const auto points = ceoleak::extreme_points(file.model, file.aux);
  const auto report = ceoleak::dominance_report(file.model, file.aux);
  if (out_path.empty()) {
    ceoleak::write_extreme_points_csv(std::cout, points);
  } else {
    auto out = open_output(out_path);
    ceoleak::write_extreme_points_csv(out, points);
  }
  if (!report_path.empty()) emit_json(ceoleak::to_json(report), report_path);
  std::cout << (report.all_dominated
                    ? "dominance: inner dominates outer extreme points\n"
                    : "dominance: FAILED (see report)\n");
  return report.all_dominated ? kExitOk : kExitVerificationFailure;
}

int cmd_counterexample(const std::string& model_path, const std::string& out_path) {
  const ceoleak::ModelFile file = ceoleak::load_model_file(model_path);
  const auto report = ceoleak::equivocation_counterexample(file.model, file.aux);
  emit_json(ceoleak::to_json(report), out_path);
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, std::vector<std::string> checks, int instances,
               std::optional<double> sigma2_x) {
  ceoleak::VerifyConfig cfg;
  cfg.instances = instances;
  cfg.sigma2_x_override = sigma2_x;
  if (checks.empty()) checks = ceoleak::available_checks();
  bool all_pass = true;
  for (const std::string& name : checks) {
    const ceoleak::CheckResult res = ceoleak::run_check(name, seed, cfg);
    all_pass = all_pass && res.pass;
    std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name << ": " << res.detail << '\n';
  }
  std::cout << "verify: " << (all_pass ? "PASS" : "FAIL") << " (seed " << seed << ")\n";
  return all_pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Rate-distortion-leakage region toolkit for the two-agent CEO problem with an "
      "eavesdropper. Set CEOLEAK_MAX_WORKERS to cap curve-sweep parallelism."};
  app.require_subcommand(1);

  // gaussian-curve
  GaussianFlags curve_flags;
  double curve_r1 = 0.5, curve_r2 = 0.5;
  std::string curve_metric = "logloss", curve_grid = "0:3:0.05", curve_out = "curve.csv";
  bool table1 = false;
  auto* curve = app.add_subcommand("gaussian-curve",
                                   "Trace minimum distortion versus L1 (L2 relaxed)");
  add_gaussian_flags(curve, curve_flags);
  curve->add_option("--r1", curve_r1, "Compression rate R1");
  curve->add_option("--r2", curve_r2, "Compression rate R2");
  curve->add_option("--metric", curve_metric, "Distortion metric: logloss|quadratic");
  curve->add_option("--l1-grid", curve_grid, "L1 sweep as start:end:step");
  curve->add_option("--out", curve_out, "Output CSV path");
  curve->add_flag("--table1", table1, "Sweep the four built-in parameter presets");

  // gaussian-member
  GaussianFlags member_flags;
  double member_r1 = 0.0, member_r2 = 0.0, member_d = 1.0;
  std::string member_l1 = "0", member_l2 = "0", member_metric = "logloss", member_out;
  auto* member = app.add_subcommand("gaussian-member",
                                    "Test membership of a (R1,R2,L1,L2,D) tuple");
  add_gaussian_flags(member, member_flags);
  member->add_option("--r1", member_r1, "R1 (bits)")->required();
  member->add_option("--r2", member_r2, "R2 (bits)")->required();
  member->add_option("--l1", member_l1, "L1 (bits, or 'inf')")->required();
  member->add_option("--l2", member_l2, "L2 (bits, or 'inf')")->required();
  member->add_option("--d", member_d, "Distortion level")->required();
  member->add_option("--metric", member_metric, "Distortion metric: logloss|quadratic");
  member->add_option("--out", member_out, "Output JSON path (default: stdout)");

  // discrete-eval
  std::string eval_model, eval_out, eval_format = "json";
  auto* eval_cmd = app.add_subcommand("discrete-eval",
                                      "Evaluate the discrete bounds for a model+aux file");
  eval_cmd->add_option("--model", eval_model, "Model JSON file")->required();
  eval_cmd->add_option("--out", eval_out, "Output path (default: stdout)");
  eval_cmd->add_option("--format", eval_format, "Output format: json|table");

  // extreme-points
  std::string ep_model, ep_out, ep_report;
  auto* ep_cmd = app.add_subcommand("extreme-points",
                                    "Emit the ten outer extreme points and the dominance "
                                    "verdict (no-SI log-loss model)");
  ep_cmd->add_option("--model", ep_model, "Model JSON file")->required();
  ep_cmd->add_option("--out", ep_out, "Output CSV path (default: stdout)");
  ep_cmd->add_option("--report", ep_report, "Dominance report JSON path");

  // counterexample
  std::string ce_model, ce_out;
  auto* ce_cmd = app.add_subcommand("counterexample",
                                    "Equivocation inner/outer gap at the R1 = 0 extreme point");
  ce_cmd->add_option("--model", ce_model, "Model JSON file")->required();
  ce_cmd->add_option("--out", ce_out, "Output JSON path (default: stdout)");

  // verify
  std::uint64_t seed = 42;
  std::vector<std::string> checks;
  int instances = 100;
  std::optional<double> sigma2_x_override;
  double sigma2_x_raw = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the seeded property suites");
  verify_cmd->add_option("--seed", seed, "Random seed");
  verify_cmd->add_option("--checks", checks,
                         "Subset of checks: xi, inner-outer, dominance, saturation")
      ->delimiter(',');
  verify_cmd->add_option("--instances", instances, "Instances per randomized check")
      ->check(CLI::PositiveNumber);
  auto* sx = verify_cmd->add_option("--sigma-x2", sigma2_x_raw,
                                    "Override sigma_X^2 in the saturation presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*curve) {
      return cmd_gaussian_curve(curve_flags, curve_r1, curve_r2, curve_metric, curve_grid,
                                curve_out, table1);
    }
    if (*member) {
      return cmd_gaussian_member(member_flags, member_metric, member_r1, member_r2, member_l1,
                                 member_l2, member_d, member_out);
    }
    if (*eval_cmd) return cmd_discrete_eval(eval_model, eval_out, eval_format);
    if (*ep_cmd) return cmd_extreme_points(ep_model, ep_out, ep_report);
    if (*ce_cmd) return cmd_counterexample(ce_model, ce_out);
    if (*verify_cmd) {
      if (sx->count() > 0) sigma2_x_override = sigma2_x_raw;
      return cmd_verify(seed, checks, instances, sigma2_x_override);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
