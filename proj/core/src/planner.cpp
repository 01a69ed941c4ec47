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

#include "gmeseq/planner.hpp"

#include <cmath>
#include <string>

#include "gmeseq/analytic.hpp"
#include "gmeseq/errors.hpp"
#include "gmeseq/states.hpp"

namespace gmeseq {

namespace {

void check_start(double lambda_1, double epsilon) {
  if (!(lambda_1 > 0.0 && lambda_1 < 1.0)) {
    throw DomainError("lambda_1 must lie in (0, 1), got " +
                      std::to_string(lambda_1));
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive, got " +
                      std::to_string(epsilon));
  }
}

}  // namespace

SharpnessSchedule schedule_with_scale(double lambda_1, double epsilon,
                                      double scale, std::size_t max_k) {
  check_start(lambda_1, epsilon);
  if (max_k == 0) throw DomainError("max_k must be at least 1");
  if (!(scale >= 1.0) || !std::isfinite(scale)) {
    throw DomainError("threshold scale must be finite and >= 1");
  }
  SharpnessSchedule s;
  s.lambda_1 = lambda_1;
  s.epsilon = epsilon;
  s.scale = scale;
  s.values.push_back(lambda_1);
  double deficit = 0.0;
  while (s.values.size() < max_k) {
    const double h = z_step_deficit(s.values.back());
    deficit += h * (1.0 - deficit);
    const int k = static_cast<int>(s.values.size()) + 1;
    const double next = (1.0 + epsilon) * scale * std::ldexp(deficit, k - 1);
    if (!(next < 1.0)) {
      s.terminated = true;
      s.reason = Termination::Saturated;
      s.rejected_value = next;
      break;
    }
    if (!std::isnormal(next)) {
      s.terminated = true;
      s.reason = Termination::PrecisionLimit;
      s.rejected_value = next;
      break;
    }
    s.values.push_back(next);
  }
  return s;
}

SharpnessSchedule generate_schedule(double lambda_1, double epsilon,
                                    std::size_t max_k) {
  return schedule_with_scale(lambda_1, epsilon, 1.0, max_k);
}

SharpnessSchedule scaled_schedule(double lambda_1, double epsilon, double p1,
                                  double alpha, std::size_t max_k) {
  const StateFamily f = StateFamily::mixed_ghz(p1, 1.0 - p1, 0.0, alpha);
  return schedule_with_scale(lambda_1, epsilon, 1.0 / f.x_contrast(), max_k);
}

std::size_t max_detections(double lambda_1, double epsilon, std::size_t cap) {
  const SharpnessSchedule s = generate_schedule(lambda_1, epsilon, cap);
  if (s.reason == Termination::PrecisionLimit) {
    throw PrecisionError("schedule from lambda_1 = " +
                         std::to_string(lambda_1) + " underflows after " +
                         std::to_string(s.size()) + " observers");
  }
  return s.size();
}

SharpnessPlan min_sharpness_for(std::size_t n, double epsilon,
                                double tolerance) {
  if (n == 0) throw DomainError("need at least one observer");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");

  SharpnessPlan plan;
  plan.target = n;
  plan.epsilon = epsilon;

  auto feasible = [&](double lambda_1) {
    SharpnessSchedule s = generate_schedule(lambda_1, epsilon, n);
    if (s.reason == Termination::PrecisionLimit) {
      throw PrecisionError(
          std::to_string(n) + " observers need lambda_1 below " +
          std::to_string(lambda_1) + ", where the schedule underflows after " +
          std::to_string(s.size()) + " observers");
    }
    return s.size() >= n;
  };

  double hi = 1.0;
  double lo = 0.5;
  while (!feasible(lo)) {
    hi = lo;
    lo *= 0.5;
    ++plan.iterations;
    if (lo < 1e-300) {
      throw PrecisionError("no representable lambda_1 reaches " +
                           std::to_string(n) + " observers");
    }
  }
  while (hi - lo > tolerance * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++plan.iterations;
  }
  plan.lambda_1 = lo;
  plan.bracket_feasible = lo;
  plan.bracket_rejected = hi;
  plan.schedule = generate_schedule(lo, epsilon, n);
  return plan;
}

}  // namespace gmeseq
