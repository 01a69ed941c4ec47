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
#include <vector>

namespace gmeseq {

inline constexpr double kDefaultEpsilon = 0.05;
inline constexpr std::size_t kDefaultDetectionCap = 64;

enum class Termination {
  None,            // max_k values generated
  Saturated,       // next value would be >= 1: that observer cannot detect
  PrecisionLimit,  // next value underflowed; double precision cannot tell
};

/// lambda_1 followed by
///   lambda_k = (1 + eps) * scale * 2^{k-1} * (1 - prod_{j<k} (1 + sqrt(1 - lambda_j^2))/2)
/// for as long as the result stays inside (0, 1).
struct SharpnessSchedule {
  double lambda_1 = 0.0;
  double epsilon = kDefaultEpsilon;
  double scale = 1.0;
  std::vector<double> values;
  bool terminated = false;
  Termination reason = Termination::None;
  /// Candidate that ended the schedule, when terminated.
  double rejected_value = 0.0;

  std::size_t size() const { return values.size(); }
};

/// DomainError unless 0 < lambda_1 < 1, epsilon > 0, max_k >= 1.
SharpnessSchedule generate_schedule(double lambda_1, double epsilon,
                                    std::size_t max_k);
/// Threshold scaled by 1/(2 p1 sqrt(alpha(1-alpha))) for the mixed GHZ family.
SharpnessSchedule scaled_schedule(double lambda_1, double epsilon, double p1,
                                  double alpha, std::size_t max_k);
/// Shared recursion; scale >= 1.
SharpnessSchedule schedule_with_scale(double lambda_1, double epsilon,
                                      double scale, std::size_t max_k);

/// Number of observers, at most `cap`, that detect with the schedule started
/// at lambda_1. PrecisionError when the schedule underflows before `cap`
/// without saturating.
std::size_t max_detections(double lambda_1, double epsilon,
                           std::size_t cap = kDefaultDetectionCap);

struct SharpnessPlan {
  std::size_t target = 1;
  double epsilon = kDefaultEpsilon;
  /// Feasible end of the final bracket: the schedule from it reaches target.
  double lambda_1 = 0.0;
  double bracket_feasible = 0.0;
  /// Rejected end (1 when every tried value was feasible).
  double bracket_rejected = 1.0;
  std::size_t iterations = 0;
  SharpnessSchedule schedule;
};

/// Bisection on (0, 1) for the largest lambda_1 whose schedule yields
/// `n` detecting observers; stops when the bracket width drops below
/// `tolerance` relative to its upper end. PrecisionError when the needed
/// lambda_1 is too small for double precision.
SharpnessPlan min_sharpness_for(std::size_t n, double epsilon,
                                double tolerance = 1e-9);

}  // namespace gmeseq
