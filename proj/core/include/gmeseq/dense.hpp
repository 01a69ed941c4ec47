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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "gmeseq/dense_operator.hpp"
#include "gmeseq/pauli.hpp"

namespace gmeseq {

/// Tolerances shared by the dense simulator.
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
/// Smallest eigenvalue accepted for a density matrix; allows for rounding
/// accumulated over ~20 channel applications.
inline constexpr double kPositivityTolerance = -1e-10;
/// Largest imaginary part tolerated in an expectation value.
inline constexpr double kImaginaryResidueTolerance = 1e-10;

enum class Setting { X, Z };
enum class Outcome { Plus, Minus };

/// Two-outcome effect (I +- lambda*sigma)/2 on one qubit.
struct MeasurementEffect {
  Setting setting;
  Outcome outcome;
  double sharpness;
  std::size_t target_qubit;

  /// Throws DomainError unless 0 <= sharpness <= 1.
  MeasurementEffect(Setting setting, Outcome outcome, double sharpness,
                    std::size_t target_qubit);

  Eigen::Matrix2cd matrix() const;
  /// Square root taken in the eigenbasis of sigma: sqrt((1+-lambda)/2) on
  /// the +1/-1 eigenspaces.
  Eigen::Matrix2cd sqrt_matrix() const;
};

/// The four effects used by one sequential observer: sigma_x measured with
/// sharpness `lambda`, sigma_z measured sharply.
std::array<MeasurementEffect, 4> observer_effects(double lambda,
                                                  std::size_t target_qubit);

/// Throws ValidationError unless rho is Hermitian, has unit trace, and (when
/// `check_positivity`) has no eigenvalue below kPositivityTolerance.
void validate_density_matrix(const DenseOperator& rho,
                             bool check_positivity = true);
bool is_density_matrix(const DenseOperator& rho);

/// K_t rho K_t^dagger for a 2x2 K acting on `target`.
DenseOperator conjugate_on_qubit(const DenseOperator& rho,
                                 const Eigen::Matrix2cd& k,
                                 std::size_t target);

/// State seen by the next observer on `target` after an unsharp (lambda)
/// x measurement and a sharp z measurement, each chosen with probability
/// 1/2 and averaged over outcomes:
///   rho' = 1/2 sum_{E} sqrt(E) rho sqrt(E).
/// Checks hermiticity and trace of rho (ValidationError) and lambda
/// (DomainError).
DenseOperator luders_update(const DenseOperator& rho, double lambda,
                            std::size_t target);

/// The same channel written as a mixture of conjugations:
///   ((2+c)/4) rho + (1/4) Z rho Z + ((1-c)/4) X rho X,  c = sqrt(1-lambda^2).
DenseOperator luders_update_closed_form(const DenseOperator& rho,
                                        double lambda, std::size_t target);

/// Applies luders_update once per entry of `lambdas`, in order.
DenseOperator apply_channel_k_times(const DenseOperator& rho1,
                                    std::span<const double> lambdas,
                                    std::size_t target);

/// Tr[rho * obs]. The observable must be Hermitian and the imaginary part of
/// the trace below kImaginaryResidueTolerance; ValidationError otherwise.
double expectation(const DenseOperator& rho, const DenseOperator& obs);
double expectation(const DenseOperator& rho, const OperatorExpr& obs);
/// Tr[rho * P] without any hermiticity requirement.
Complex trace_with(const DenseOperator& rho, const PauliString& p);

struct EigenResult {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns
  double max_residual;         // max_j ||A v_j - l_j v_j||
};

/// Full Hermitian eigendecomposition; ValidationError for non-Hermitian input.
EigenResult eigen_decompose(const DenseOperator& op);
/// Ascending eigenvalues; ValidationError when the residual exceeds 1e-9.
std::vector<double> eigen_spectrum(const DenseOperator& op);
double min_eigenvalue(const DenseOperator& op);

/// Normalized complex-Gaussian vector on `num_qubits` qubits (Haar measure).
ComplexVector haar_random_state(std::size_t num_qubits, std::mt19937_64& rng);
/// Full-rank random density matrix G G^dagger / Tr from a Ginibre matrix.
DenseOperator random_density_matrix(std::size_t num_qubits,
                                    std::mt19937_64& rng);

/// Tensor product of a state on the qubits `side_a` (ascending order) with a
/// state on the complementary qubits, laid out in the global qubit order.
ComplexVector combine_bipartite(std::size_t num_qubits,
                                std::span<const std::size_t> side_a,
                                const ComplexVector& psi_a,
                                const ComplexVector& psi_b);

/// Pure product state across the split `side_a` | rest, each side an
/// independent Haar-random state. Deterministic in `seed`. DomainError when
/// `side_a` is empty, the whole system, or has invalid entries.
DenseOperator sample_biseparable(std::size_t num_qubits,
                                 std::span<const std::size_t> side_a,
                                 std::uint64_t seed);
ComplexVector sample_biseparable_vector(std::size_t num_qubits,
                                        std::span<const std::size_t> side_a,
                                        std::mt19937_64& rng);

/// Every nontrivial split, represented by the side containing qubit 0.
std::vector<std::vector<std::size_t>> all_bipartitions(std::size_t num_qubits);

/// {"format": "gmeseq-density", "version": 1, "num_qubits": N,
///  "entries": [[re, im], ...]} with entries row-major.
nlohmann::json density_to_json(const DenseOperator& rho);
DenseOperator density_from_json(const nlohmann::json& j);

/// Binary layout, little-endian: magic "GMESQRHO", uint32 version (1),
/// uint32 N, then 4^N (re, im) double pairs row-major.
void write_density_binary(std::ostream& os, const DenseOperator& rho);
DenseOperator read_density_binary(std::istream& is);

/// Picks JSON for a ".json" extension and the binary layout otherwise.
void save_density(const std::filesystem::path& path, const DenseOperator& rho);
DenseOperator load_density(const std::filesystem::path& path);

}  // namespace gmeseq
