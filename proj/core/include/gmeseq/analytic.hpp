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
#include <span>
#include <vector>

#include "gmeseq/states.hpp"

namespace gmeseq {

/// How the correlators on the measured qubit have shrunk by the time the
/// k-th observer receives the state, relative to rho_1:
///   z_factor = prod_{j<k} (1 + sqrt(1 - lambda_j^2))/2
///   x_factor = 2^{-(k-1)}
/// z_deficit = 1 - z_factor is accumulated directly so that it stays
/// accurate when the sharpness values are tiny.
struct CorrelatorDecay {
  std::size_t observer_index = 1;
  double z_factor = 1.0;
  double z_deficit = 0.0;
  double x_factor = 1.0;
};

/// (1 - sqrt(1 - lambda^2))/2 evaluated as lambda^2 / (2 (1 + sqrt(1 - lambda^2))).
double z_step_deficit(double lambda);

/// Decay seen by observer k = prefix.size() + 1 after the measurements
/// lambda_1..lambda_{k-1}. DomainError if any lambda is outside [0, 1].
CorrelatorDecay correlator_decay(std::span<const double> prefix);

struct DetectionReport {
  std::size_t observer_index = 1;
  double lambda = 0.0;
  double witness_value = 0.0;
  bool detected = false;  // witness_value < 0
  double margin = 0.0;    // |witness_value|
};

/// <W^k> on rho_k for a stabilizer-type initial state whose S_1 (GHZ) or
/// S_N-containing (cluster) correlator starts at `x_contrast`:
///   1 - z_factor - x_contrast * lambda_k / 2^{k-1}.
/// Uses lambdas[0..k-1]; DimensionError when fewer than k are given.
double sequential_witness_value(std::size_t k, std::span<const double> lambdas,
                                double x_contrast);

double ghz_witness_value(std::size_t k, std::span<const double> lambdas);
/// Identical closed form to ghz_witness_value.
double cluster_witness_value(std::size_t k, std::span<const double> lambdas);
/// x_contrast = 2 p1 sqrt(alpha (1 - alpha)).
double mixed_ghz_witness_value(std::size_t k, std::span<const double> lambdas,
                               double p1, double alpha);
double witness_value(const StateFamily& family, std::size_t k,
                     std::span<const double> lambdas);

/// Threshold that lambda_k must exceed for observer k to detect:
///   scale * 2^{k-1} * (1 - z_factor).
/// `prefix` holds lambda_1..lambda_{k-1}; scale >= 1 (1 for GHZ/cluster,
/// 1/(2 p1 sqrt(alpha(1-alpha))) for the mixed family). A threshold >= 1
/// means no sharpness can detect.
double detection_condition_rhs(std::size_t k, std::span<const double> prefix,
                               double scale = 1.0);

/// 1 / x_contrast of the family.
double threshold_scale(const StateFamily& family);

/// One report per entry of `lambdas`.
std::vector<DetectionReport> full_sequence_report(
    const StateFamily& family, std::span<const double> lambdas);

}  // namespace gmeseq
