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

#include "gmeseq/witness.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include "gmeseq/errors.hpp"

namespace gmeseq {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("sharpness must lie in [0, 1], got " +
                      std::to_string(lambda));
  }
}

void check_parties(std::size_t n) {
  if (n < kMinParties) {
    throw CapacityError("witnesses need at least 3 parties, got " +
                        std::to_string(n));
  }
}

OperatorExpr three_minus_twice(std::size_t n, const OperatorExpr& a,
                               const OperatorExpr& b) {
  return OperatorExpr::identity(n, 3.0) - 2.0 * (a + b);
}

struct PartitionRule {
  Parity hosts_last;
  Parity other;
};

// Indexed by N % 2.
constexpr std::array<PartitionRule, 2> kClusterPartitions = {{
    {Parity::Even, Parity::Odd},
    {Parity::Odd, Parity::Even},
}};

}  // namespace

void WitnessSpec::validate() const {
  check_parties(num_parties);
  check_lambda(lambda);
  if (observer_index == 0) throw DomainError("observer index starts at 1");
}

OperatorExpr build_modified_ghz_witness(std::size_t n, double lambda) {
  check_parties(n);
  check_lambda(lambda);
  const auto gens = stabilizer_generators(StabilizerFamily::GHZ, n);
  const std::vector<std::size_t> first{0};
  std::vector<std::size_t> rest;
  for (std::size_t m = 1; m < n; ++m) rest.push_back(m);
  std::vector<double> weights(n, 1.0);
  weights[0] = lambda;
  const auto x_part = expand_projector_product(n, gens, first, weights);
  const auto z_part = expand_projector_product(n, gens, rest, weights);
  return three_minus_twice(n, x_part, z_part);
}

OperatorExpr build_ghz_witness(std::size_t n) {
  return build_modified_ghz_witness(n, 1.0);
}

Parity unsharp_partition(std::size_t n) {
  return kClusterPartitions[n % 2].hosts_last;
}

std::vector<std::size_t> partition_members(std::size_t n, Parity parity) {
  std::vector<std::size_t> out;
  for (std::size_t m = 1; m <= n; ++m) {
    const bool even = m % 2 == 0;
    if (even == (parity == Parity::Even)) out.push_back(m - 1);
  }
  return out;
}

OperatorExpr build_modified_cluster_witness(std::size_t n, double lambda) {
  check_parties(n);
  check_lambda(lambda);
  const auto gens = stabilizer_generators(StabilizerFamily::Cluster, n);
  const PartitionRule rule = kClusterPartitions[n % 2];
  std::vector<double> weights(n, 1.0);
  weights[n - 1] = lambda;
  const auto host = partition_members(n, rule.hosts_last);
  const auto other = partition_members(n, rule.other);
  return three_minus_twice(n, expand_projector_product(n, gens, host, weights),
                           expand_projector_product(n, gens, other, weights));
}

OperatorExpr build_cluster_witness(std::size_t n) {
  return build_modified_cluster_witness(n, 1.0);
}

OperatorExpr build_witness(StabilizerFamily family, std::size_t n,
                           double lambda) {
  return family == StabilizerFamily::GHZ
             ? build_modified_ghz_witness(n, lambda)
             : build_modified_cluster_witness(n, lambda);
}

OperatorExpr build_witness(const WitnessSpec& spec) {
  spec.validate();
  return build_witness(spec.family, spec.num_parties, spec.lambda);
}

OperatorExpr difference_operator(StabilizerFamily family, std::size_t n,
                                 double lambda) {
  return build_witness(family, n, lambda) - lambda * build_witness(family, n);
}

const char* to_string(StabilizerFamily family) {
  return family == StabilizerFamily::GHZ ? "ghz" : "cluster";
}

StabilizerFamily parse_stabilizer_family(const std::string& name) {
  if (name == "ghz") return StabilizerFamily::GHZ;
  if (name == "cluster") return StabilizerFamily::Cluster;
  throw DomainError("unknown witness family '" + name + "'");
}

std::string pretty_print(const WitnessSpec& spec, const OperatorExpr& expr) {
  std::ostringstream os;
  os << "W^" << spec.observer_index << " (" << to_string(spec.family)
     << ", N=" << spec.num_parties << ", lambda=" << std::setprecision(12)
     << spec.lambda << "), " << expr.size() << " terms\n";
  for (const auto& t : expr.terms()) {
    os << "  " << std::showpos << std::setw(16) << std::left
       << t.coeff().real() << std::noshowpos << t.letters_string() << '\n';
  }
  return os.str();
}

nlohmann::json witness_to_json(const WitnessSpec& spec,
                               const OperatorExpr& expr) {
  return {{"family", to_string(spec.family)},
          {"num_parties", spec.num_parties},
          {"observer_index", spec.observer_index},
          {"lambda", spec.lambda},
          {"terms", to_json(expr)}};
}

}  // namespace gmeseq
