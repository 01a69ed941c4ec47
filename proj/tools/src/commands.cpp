// Copyright 2026 The gmeseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gmeseq_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gmeseq/analytic.hpp"
#include "gmeseq/dense.hpp"
#include "gmeseq/errors.hpp"
#include "gmeseq/witness.hpp"

namespace gmeseq::cli {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

double parse_number(std::string_view text) {
  const std::string s(text);
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + s + "'");
  }
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw DomainError("unknown output format '" + s + "'");
}

Mode parse_mode(const std::string& s) {
  if (s == "dense") return Mode::Dense;
  if (s == "analytic") return Mode::Analytic;
  if (s == "both") return Mode::Both;
  throw DomainError("unknown mode '" + s + "'");
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Dense:
      return "dense";
    case Mode::Analytic:
      return "analytic";
    case Mode::Both:
      return "both";
  }
  return "?";
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_number(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw DomainError("empty number list");
  return out;
}

PlanSource parse_plan(std::string_view text) {
  PlanSource plan;
  bool have_l1 = false;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("plan entries are key=value, got '" +
                        std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const double value = parse_number(item.substr(eq + 1));
    if (key == "l1") {
      plan.lambda_1 = value;
      have_l1 = true;
    } else if (key == "eps") {
      plan.epsilon = value;
    } else if (key == "max") {
      if (!(value >= 1.0) || value != std::floor(value)) {
        throw DomainError("plan max must be a positive integer");
      }
      plan.max_k = static_cast<std::size_t>(value);
    } else {
      throw DomainError("unknown plan key '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (!have_l1) throw DomainError("plan needs l1=<lambda_1>");
  return plan;
}

void ExperimentConfig::validate() const {
  state.validate();
  if (num_parties < kMinParties) {
    throw CapacityError("need at least 3 parties");
  }
  if (mode != Mode::Analytic) checked_dimension(num_parties);
  if (!plan && lambdas.empty()) {
    throw DomainError("give a schedule with --lambdas or --plan");
  }
  for (double l : lambdas) {
    if (!(l >= 0.0 && l <= 1.0)) {
      throw DomainError("sharpness must lie in [0, 1], got " + num(l));
    }
  }
  if (export_state && mode == Mode::Analytic) {
    throw DomainError("--export-rho needs a dense mode");
  }
}

std::vector<double> ExperimentConfig::resolve_schedule() const {
  if (!plan) return lambdas;
  const SharpnessSchedule s = schedule_with_scale(
      plan->lambda_1, plan->epsilon, threshold_scale(state), plan->max_k);
  return s.values;
}

RunResult cmd_run(const ExperimentConfig& config) {
  config.validate();
  const std::vector<double> schedule = config.resolve_schedule();
  RunResult result;
  const bool want_dense = config.mode != Mode::Analytic;
  const bool want_analytic = config.mode != Mode::Dense;
  const std::size_t n = config.num_parties;
  const StabilizerFamily family = config.state.stabilizer_family();

  std::optional<DenseOperator> rho;
  if (want_dense) rho = make_state(config.state, n);
  for (std::size_t k = 1; k <= schedule.size(); ++k) {
    RunRow row;
    row.k = k;
    row.lambda = schedule[k - 1];
    if (want_analytic) row.analytic = witness_value(config.state, k, schedule);
    if (want_dense) {
      if (k > 1) rho = luders_update(*rho, schedule[k - 2], n - 1);
      row.dense = expectation(*rho, build_witness(family, n, row.lambda));
    }
    const double value = row.analytic ? *row.analytic : *row.dense;
    // Dense-only rows treat rounding residue around zero as zero.
    row.detected = row.analytic ? value < 0.0 : value < -kDenseZeroTolerance;
    row.margin = std::abs(value);
    if (row.analytic && row.dense) {
      result.max_disagreement =
          std::max(result.max_disagreement, std::abs(*row.analytic - *row.dense));
    }
    result.rows.push_back(row);
  }
  if (config.export_state && rho) save_density(*config.export_state, *rho);
  return result;
}

std::string format_run(const ExperimentConfig& config, const RunResult& result) {
  std::ostringstream os;
  if (config.format == OutputFormat::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : result.rows) {
      rows.push_back({{"k", r.k},
                      {"lambda", r.lambda},
                      {"witness_analytic", optional_json(r.analytic)},
                      {"witness_dense", optional_json(r.dense)},
                      {"detected", r.detected},
                      {"margin", r.margin}});
    }
    nlohmann::json doc = {{"format", "gmeseq-run"},
                          {"version", 1},
                          {"state", config.state.to_string()},
                          {"N", config.num_parties},
                          {"mode", to_string(config.mode)},
                          {"seed", config.seed},
                          {"max_disagreement", result.max_disagreement},
                          {"rows", std::move(rows)}};
    os << doc.dump(2) << '\n';
    return os.str();
  }
  os << "# gmeseq run v1 state=" << config.state.to_string()
     << " N=" << config.num_parties << " mode=" << to_string(config.mode)
     << " seed=" << config.seed << '\n';
  os << "k,lambda,witness_analytic,witness_dense,detected,margin\n";
  for (const auto& r : result.rows) {
    os << r.k << ',' << num(r.lambda) << ','
       << (r.analytic ? num(*r.analytic) : "") << ','
       << (r.dense ? num(*r.dense) : "") << ',' << (r.detected ? 1 : 0) << ','
       << num(r.margin) << '\n';
  }
  return os.str();
}

std::vector<SweepRow> cmd_sweep(double epsilon, std::span<const double> grid,
                                std::size_t cap) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double l1 : grid) rows.push_back({l1, max_detections(l1, epsilon, cap)});
  return rows;
}

std::string format_sweep(double epsilon, std::size_t cap,
                         std::span<const SweepRow> rows, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      arr.push_back({{"lambda_1", r.lambda_1}, {"max_detections", r.max_detections}});
    }
    os << nlohmann::json{{"format", "gmeseq-sweep"}, {"version", 1},
                         {"epsilon", epsilon}, {"cap", cap},
                         {"rows", std::move(arr)}}
              .dump(2)
       << '\n';
    return os.str();
  }
  os << "# gmeseq sweep v1 eps=" << num(epsilon) << " cap=" << cap << '\n';
  os << "lambda_1,max_detections\n";
  for (const auto& r : rows) os << num(r.lambda_1) << ',' << r.max_detections << '\n';
  return os.str();
}

SharpnessPlan cmd_plan(std::size_t n, double epsilon) {
  return min_sharpness_for(n, epsilon);
}

std::string format_plan(const SharpnessPlan& plan, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Json) {
    os << nlohmann::json{{"format", "gmeseq-plan"},
                         {"version", 1},
                         {"n", plan.target},
                         {"epsilon", plan.epsilon},
                         {"lambda_1", plan.lambda_1},
                         {"bracket", {plan.bracket_feasible, plan.bracket_rejected}},
                         {"iterations", plan.iterations},
                         {"schedule", plan.schedule.values}}
              .dump(2)
       << '\n';
    return os.str();
  }
  os << "# gmeseq plan v1 n=" << plan.target << " eps=" << num(plan.epsilon)
     << " lambda_1=" << num(plan.lambda_1) << " bracket=["
     << num(plan.bracket_feasible) << ", " << num(plan.bracket_rejected)
     << ") iterations=" << plan.iterations << '\n';
  os << "k,lambda\n";
  for (std::size_t k = 0; k < plan.schedule.values.size(); ++k) {
    os << k + 1 << ',' << num(plan.schedule.values[k]) << '\n';
  }
  return os.str();
}

std::vector<SuiteReport> cmd_verify(std::string_view suite,
                                    const VerifyOptions& options) {
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(name, options));
  } else {
    out.push_back(run_suite(suite, options));
  }
  return out;
}

std::string format_verify(std::span<const SuiteReport> reports,
                          OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    os << arr.dump(2) << '\n';
    return os.str();
  }
  os << "# gmeseq verify v1\n";
  os << "suite,check,passed,max_residual,tolerance,detail\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      os << r.suite << ',' << c.name << ',' << (c.passed ? "pass" : "FAIL") << ','
         << num(c.max_residual) << ',' << num(c.tolerance) << ",\"" << c.detail
         << "\"\n";
    }
  }
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Sequential detection of genuine multipartite entanglement"};
  app.require_subcommand(1);
  std::string out_path;
  std::string format_name = "csv";
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--format", format_name, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // run
  auto* run = app.add_subcommand("run", "Witness values for every sequential observer");
  std::string state_name = "ghz";
  std::size_t parties = 3;
  std::string lambdas_text, plan_text, mode_name = "analytic", export_path;
  std::uint64_t seed = 1;
  run->add_option("--state", state_name, "ghz | gghz:alpha=A | mixed:p1=..,p2=..,p3=..,alpha=.. | cluster");
  run->add_option("--N", parties, "Number of parties (>= 3)");
  auto* lam_opt = run->add_option("--lambdas", lambdas_text, "Comma-separated sharpness values");
  run->add_option("--plan", plan_text, "l1=<lambda_1>,eps=<epsilon>[,max=<k>]")
      ->excludes(lam_opt);
  run->add_option("--mode", mode_name, "dense | analytic | both")
      ->check(CLI::IsMember({"dense", "analytic", "both"}));
  run->add_option("--seed", seed, "Random seed");
  run->add_option("--export-rho", export_path,
                  "Write the last observer's state (.json or binary)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Detections reached from each lambda_1");
  double sweep_eps = kDefaultEpsilon;
  std::string grid_text = "0.5,0.1,0.01,0.001";
  std::size_t cap = kDefaultDetectionCap;
  sweep->add_option("--eps", sweep_eps, "Schedule slack epsilon");
  sweep->add_option("--grid", grid_text, "Comma-separated lambda_1 values");
  sweep->add_option("--cap", cap, "Largest observer count considered");

  // plan
  auto* plan = app.add_subcommand("plan", "Largest lambda_1 that reaches n detections");
  std::size_t plan_n = 1;
  double plan_eps = kDefaultEpsilon;
  plan->add_option("--n", plan_n, "Number of detecting observers")->required();
  plan->add_option("--eps", plan_eps, "Schedule slack epsilon");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  VerifyOptions vopts;
  std::string rho_path;
  verify->add_option("suite", suite, "channel | recursion | psd | biseparable | oracle | all");
  verify->add_option("--seed", vopts.seed, "Random seed");
  verify->add_option("--trials", vopts.trials, "Random inputs per configuration");
  verify->add_option("--samples", vopts.samples, "Biseparable samples per bipartition");
  verify->add_option("--rho", rho_path, "Extra density matrix for the channel suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    const OutputFormat format = parse_format(format_name);
    if (run->parsed()) {
      ExperimentConfig config;
      config.state = parse_state_family(state_name);
      config.num_parties = parties;
      if (!lambdas_text.empty()) config.lambdas = parse_number_list(lambdas_text);
      if (!plan_text.empty()) config.plan = parse_plan(plan_text);
      config.mode = parse_mode(mode_name);
      config.seed = seed;
      config.format = format;
      if (!export_path.empty()) config.export_state = export_path;
      const RunResult result = cmd_run(config);
      *sink << format_run(config, result);
      if (!result.consistent()) {
        err << "error: analytic and dense values differ by "
            << num(result.max_disagreement) << '\n';
        return kExitCheckFailed;
      }
      return kExitOk;
    }
    if (sweep->parsed()) {
      const auto grid = parse_number_list(grid_text);
      *sink << format_sweep(sweep_eps, cap, cmd_sweep(sweep_eps, grid, cap), format);
      return kExitOk;
    }
    if (plan->parsed()) {
      *sink << format_plan(cmd_plan(plan_n, plan_eps), format);
      return kExitOk;
    }
    if (verify->parsed()) {
      if (suite != "all" &&
          std::find(suite_names().begin(), suite_names().end(), suite) ==
              suite_names().end()) {
        err << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      if (!rho_path.empty()) vopts.extra_state = load_density(rho_path);
      const auto reports = cmd_verify(suite, vopts);
      *sink << format_verify(reports, format);
      for (const auto& r : reports) {
        if (!r.passed()) return kExitCheckFailed;
      }
      return kExitOk;
    }
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gmeseq::cli
