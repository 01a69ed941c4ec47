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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmeseq/dense_operator.hpp"

namespace gmeseq {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Random inputs per configuration (density matrices, schedules).
  std::size_t trials = 100;
  /// Biseparable samples per bipartition.
  std::size_t samples = 1000;
  /// Extra state folded into the channel suite, e.g. loaded from a file.
  std::optional<DenseOperator> extra_state;
};

/// Trace, positivity, unitality and closed-form agreement of the
/// sequential-observer channel on random density matrices, N = 1..4.
SuiteReport verify_channel(const VerifyOptions& options);
/// Correlator decay on the measured qubit after k-1 observers against the
/// z and x decay products (N = 3..5, k <= 6). Reports which product index
/// matches.
SuiteReport verify_recursion(const VerifyOptions& options);
/// Spectra of the difference operators W^k - lambda W, N = 3..6.
SuiteReport verify_psd(const VerifyOptions& options);
/// Minimum witness value over sampled product states for every split,
/// N = 3, 4, both families.
SuiteReport verify_biseparable(const VerifyOptions& options);
/// Closed-form witness values against dense simulation, cluster generator
/// check, and N independence.
SuiteReport verify_oracle(const VerifyOptions& options);

/// "channel", "recursion", "psd", "biseparable", "oracle".
const std::vector<std::string>& suite_names();
/// DomainError for unknown names.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

}  // namespace gmeseq
