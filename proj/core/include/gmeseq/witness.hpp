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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmeseq/pauli.hpp"
#include "gmeseq/states.hpp"

namespace gmeseq {

/// Witness used by the k-th sequential observer; lambda is that observer's
/// x-measurement sharpness. lambda = 1 gives the standard witness.
struct WitnessSpec {
  StabilizerFamily family = StabilizerFamily::GHZ;
  std::size_t num_parties = kMinParties;
  std::size_t observer_index = 1;
  double lambda = 1.0;

  /// DomainError for lambda outside [0, 1] or k = 0; CapacityError for
  /// fewer than three parties.
  void validate() const;
};

/// 3I - 2[(I + S_1)/2 + prod_{m>=2} (I + S_m)/2] over the GHZ generators.
OperatorExpr build_ghz_witness(std::size_t num_parties);
/// As build_ghz_witness with S_1 replaced by lambda * S_1.
OperatorExpr build_modified_ghz_witness(std::size_t num_parties, double lambda);

/// 3I - 2[prod_{even m} (I + S_m)/2 + prod_{odd m} (I + S_m)/2] over the
/// cluster generators (1-based m).
OperatorExpr build_cluster_witness(std::size_t num_parties);
/// As build_cluster_witness with the factor for S_N replaced by
/// (I + lambda S_N)/2. S_N lives in the even product for even N and in the
/// odd product for odd N.
OperatorExpr build_modified_cluster_witness(std::size_t num_parties,
                                            double lambda);

OperatorExpr build_witness(StabilizerFamily family, std::size_t num_parties,
                           double lambda = 1.0);
OperatorExpr build_witness(const WitnessSpec& spec);

/// W^k - lambda W. Diagonal in the stabilizer basis with entries
/// {0, 2(1-lambda)} for GHZ and {0, 1, 2, 3} * (1-lambda) for the cluster.
OperatorExpr difference_operator(StabilizerFamily family,
                                 std::size_t num_parties, double lambda);

enum class Parity { Even, Odd };

/// Index parity of the cluster product that carries the unsharp S_N factor.
Parity unsharp_partition(std::size_t num_parties);
/// 0-based positions of the generators S_m whose 1-based index m has the
/// given parity.
std::vector<std::size_t> partition_members(std::size_t num_parties,
                                           Parity parity);

const char* to_string(StabilizerFamily family);
StabilizerFamily parse_stabilizer_family(const std::string& name);

/// Multi-line listing: a header line followed by one "coeff  LETTERS" line
/// per term.
std::string pretty_print(const WitnessSpec& spec, const OperatorExpr& expr);
nlohmann::json witness_to_json(const WitnessSpec& spec,
                               const OperatorExpr& expr);

}  // namespace gmeseq
