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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmeseq/planner.hpp"
#include "gmeseq/states.hpp"
#include "gmeseq/verification.hpp"

namespace gmeseq::cli {

enum class Mode { Dense, Analytic, Both };
enum class OutputFormat { Csv, Json };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Tolerance above which `run --mode both` reports a disagreement.
inline constexpr double kAgreementTolerance = 1e-9;
/// Dense-only runs count a witness value as negative below -1e-12.
inline constexpr double kDenseZeroTolerance = 1e-12;

struct PlanSource {
  double lambda_1 = 0.0;
  double epsilon = kDefaultEpsilon;
  std::size_t max_k = kDefaultDetectionCap;
};

struct ExperimentConfig {
  StateFamily state;
  std::size_t num_parties = kMinParties;
  /// Explicit schedule; ignored when `plan` is set.
  std::vector<double> lambdas;
  std::optional<PlanSource> plan;
  Mode mode = Mode::Analytic;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Csv;
  /// Dense modes only: where to write the state received by the last
  /// observer.
  std::optional<std::filesystem::path> export_state;

  /// Throws gmeseq::Error subclasses on inconsistent settings.
  void validate() const;
  /// The schedule actually run: `lambdas` or the planner output.
  std::vector<double> resolve_schedule() const;
};

struct RunRow {
  std::size_t k = 1;
  double lambda = 0.0;
  std::optional<double> analytic;
  std::optional<double> dense;
  bool detected = false;
  double margin = 0.0;
};

struct RunResult {
  std::vector<RunRow> rows;
  /// max |analytic - dense| over rows where both exist.
  double max_disagreement = 0.0;
  bool consistent() const { return max_disagreement <= kAgreementTolerance; }
};

RunResult cmd_run(const ExperimentConfig& config);
std::string format_run(const ExperimentConfig& config, const RunResult& result);

struct SweepRow {
  double lambda_1 = 0.0;
  std::size_t max_detections = 0;
};

std::vector<SweepRow> cmd_sweep(double epsilon, std::span<const double> grid,
                                std::size_t cap = kDefaultDetectionCap);
std::string format_sweep(double epsilon, std::size_t cap,
                         std::span<const SweepRow> rows, OutputFormat format);

SharpnessPlan cmd_plan(std::size_t n, double epsilon);
std::string format_plan(const SharpnessPlan& plan, OutputFormat format);

/// `suite` is one of suite_names() or "all".
std::vector<SuiteReport> cmd_verify(std::string_view suite,
                                    const VerifyOptions& options);
std::string format_verify(std::span<const SuiteReport> reports,
                          OutputFormat format);

/// "l1=0.05,eps=0.05[,max=64]".
PlanSource parse_plan(std::string_view text);
/// Comma-separated numbers.
std::vector<double> parse_number_list(std::string_view text);
std::string to_string(Mode mode);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace gmeseq::cli
