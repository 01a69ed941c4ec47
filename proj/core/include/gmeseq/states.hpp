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
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gmeseq/dense_operator.hpp"
#include "gmeseq/pauli.hpp"

namespace gmeseq {

/// Smallest party count considered for genuine multipartite entanglement.
inline constexpr std::size_t kMinParties = 3;

enum class FamilyKind { GHZ, GeneralizedGHZ, MixedGHZ, Cluster };

/// Families whose witnesses are built from stabilizer generators.
enum class StabilizerFamily { GHZ, Cluster };

/// Initial state rho_1 shared by the N parties.
///   GHZ              (|0..0> + |1..1>)/sqrt2
///   GeneralizedGHZ   sqrt(a)|0..0> + sqrt(1-a)|1..1>, 0 < a < 1
///   MixedGHZ         p1|psi><psi| + p2|0..0><0..0| + p3|1..1><1..1|
///   Cluster          linear cluster state from Ising phase gates on |+>^N
struct StateFamily {
  FamilyKind kind = FamilyKind::GHZ;
  double alpha = 0.5;
  double p1 = 1.0;
  double p2 = 0.0;
  double p3 = 0.0;

  static StateFamily ghz() { return {}; }
  static StateFamily generalized_ghz(double alpha);
  static StateFamily mixed_ghz(double p1, double p2, double p3, double alpha);
  static StateFamily cluster() { return {FamilyKind::Cluster}; }

  /// Throws DomainError when the parameters violate the family constraints.
  void validate() const;
  /// Witness family used to test this state for GME.
  StabilizerFamily stabilizer_family() const;
  /// Tr[S_1 rho_1] for the GHZ-type families, 2 p1 sqrt(a(1-a)); 1 for the
  /// cluster state.
  double x_contrast() const;
  /// CLI spelling, e.g. "mixed:p1=0.8,p2=0.1,p3=0.1,alpha=0.4".
  std::string to_string() const;
};

/// Parses "ghz", "gghz:alpha=0.3", "mixed:p1=..,p2=..,p3=..,alpha=..",
/// "cluster". DomainError on unknown names, keys, or invalid values.
StateFamily parse_state_family(std::string_view text);

ComplexVector ghz_vector(std::size_t num_qubits,
                         std::size_t limit = kDefaultDenseLimit);
ComplexVector generalized_ghz_vector(std::size_t num_qubits, double alpha,
                                     std::size_t limit = kDefaultDenseLimit);
ComplexVector cluster_vector(std::size_t num_qubits,
                             std::size_t limit = kDefaultDenseLimit);

/// exp(i pi n (x) n) with n = (1 - sigma_z)/2; equals controlled-Z.
Eigen::Matrix4cd ising_phase_gate();

/// Applies a 4x4 gate to qubits (q1, q2); q1 is the more significant index
/// of the gate's basis.
ComplexVector apply_two_qubit(const Eigen::Matrix4cd& gate, std::size_t q1,
                              std::size_t q2, std::size_t num_qubits,
                              const ComplexVector& psi);
/// P|psi> including the coefficient of P.
ComplexVector apply_pauli(const PauliString& p, const ComplexVector& psi);
/// || S|psi> - |psi> ||.
double stabilizer_residual(const PauliString& s, const ComplexVector& psi);

DenseOperator make_ghz(std::size_t num_qubits,
                       std::size_t limit = kDefaultDenseLimit);
DenseOperator make_generalized_ghz(std::size_t num_qubits, double alpha,
                                   std::size_t limit = kDefaultDenseLimit);
DenseOperator make_mixed_ghz(std::size_t num_qubits, double p1, double p2,
                             double p3, double alpha,
                             std::size_t limit = kDefaultDenseLimit);
DenseOperator make_cluster(std::size_t num_qubits,
                           std::size_t limit = kDefaultDenseLimit);
DenseOperator make_state(const StateFamily& family, std::size_t num_qubits,
                         std::size_t limit = kDefaultDenseLimit);

/// The N stabilizer generators S_1..S_N (index 0 holds S_1).
///   GHZ:     S_1 = X..X, S_m = Z_{m-1} Z_m
///   Cluster: S_1 = X_1 Z_2, S_m = Z_{m-1} X_m Z_{m+1}, S_N = Z_{N-1} X_N
/// For N up to the dense limit every generator is checked against the dense
/// state (AlgebraError if S|psi> != |psi> within 1e-12).
std::vector<PauliString> stabilizer_generators(StabilizerFamily family,
                                               std::size_t num_qubits);
/// DomainError for families other than GHZ and Cluster.
std::vector<PauliString> stabilizer_generators(const StateFamily& family,
                                               std::size_t num_qubits);

}  // namespace gmeseq
