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

#include "gmeseq/analytic.hpp"

#include <cmath>
#include <string>

#include "gmeseq/errors.hpp"

namespace gmeseq {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("sharpness must lie in [0, 1], got " +
                      std::to_string(lambda));
  }
}

}  // namespace

double z_step_deficit(double lambda) {
  check_lambda(lambda);
  const double sq = lambda * lambda;
  return sq / (2.0 * (1.0 + std::sqrt(1.0 - sq)));
}

CorrelatorDecay correlator_decay(std::span<const double> prefix) {
  CorrelatorDecay d;
  d.observer_index = prefix.size() + 1;
  // 1 - prod(1 - h_j) accumulated as D <- D + h (1 - D); both terms are
  // non-negative so small deficits never cancel.
  double deficit = 0.0;
  double product = 1.0;
  for (double l : prefix) {
    const double h = z_step_deficit(l);
    deficit += h * (1.0 - deficit);
    product *= 1.0 - h;
  }
  d.z_deficit = deficit;
  d.z_factor = product;
  d.x_factor = std::ldexp(1.0, -static_cast<int>(prefix.size()));
  return d;
}

double sequential_witness_value(std::size_t k, std::span<const double> lambdas,
                                double x_contrast) {
  if (k == 0) throw DomainError("observer index starts at 1");
  if (lambdas.size() < k) {
    throw DimensionError("observer " + std::to_string(k) + " needs " +
                         std::to_string(k) + " sharpness values, got " +
                         std::to_string(lambdas.size()));
  }
  const double lambda_k = lambdas[k - 1];
  check_lambda(lambda_k);
  const CorrelatorDecay d = correlator_decay(lambdas.first(k - 1));
  return d.z_deficit -
         x_contrast * std::ldexp(lambda_k, -static_cast<int>(k - 1));
}

double ghz_witness_value(std::size_t k, std::span<const double> lambdas) {
  return sequential_witness_value(k, lambdas, 1.0);
}

double cluster_witness_value(std::size_t k, std::span<const double> lambdas) {
  return sequential_witness_value(k, lambdas, 1.0);
}

double mixed_ghz_witness_value(std::size_t k, std::span<const double> lambdas,
                               double p1, double alpha) {
  const StateFamily f = StateFamily::mixed_ghz(p1, 1.0 - p1, 0.0, alpha);
  return sequential_witness_value(k, lambdas, f.x_contrast());
}

double witness_value(const StateFamily& family, std::size_t k,
                     std::span<const double> lambdas) {
  family.validate();
  return sequential_witness_value(k, lambdas, family.x_contrast());
}

double detection_condition_rhs(std::size_t k, std::span<const double> prefix,
                               double scale) {
  if (k == 0) throw DomainError("observer index starts at 1");
  if (prefix.size() != k - 1) {
    throw DimensionError("observer " + std::to_string(k) + " needs " +
                         std::to_string(k - 1) + " earlier sharpness values");
  }
  if (!(scale >= 1.0) || !std::isfinite(scale)) {
    throw DomainError("threshold scale must be finite and >= 1");
  }
  const CorrelatorDecay d = correlator_decay(prefix);
  return scale * std::ldexp(d.z_deficit, static_cast<int>(k - 1));
}

double threshold_scale(const StateFamily& family) {
  family.validate();
  return 1.0 / family.x_contrast();
}

std::vector<DetectionReport> full_sequence_report(
    const StateFamily& family, std::span<const double> lambdas) {
  family.validate();
  const double contrast = family.x_contrast();
  std::vector<DetectionReport> out;
  out.reserve(lambdas.size());
  for (std::size_t k = 1; k <= lambdas.size(); ++k) {
    DetectionReport r;
    r.observer_index = k;
    r.lambda = lambdas[k - 1];
    r.witness_value = sequential_witness_value(k, lambdas, contrast);
    r.detected = r.witness_value < 0.0;
    r.margin = std::abs(r.witness_value);
    out.push_back(r);
  }
  return out;
}

}  // namespace gmeseq
