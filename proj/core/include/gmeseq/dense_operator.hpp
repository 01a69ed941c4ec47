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

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace gmeseq {

using Complex = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;

/// Largest qubit count for which dense objects are built unless the caller
/// passes a different limit. A 10-qubit density matrix holds 2^20 entries.
inline constexpr std::size_t kDefaultDenseLimit = 10;

/// Returns 2^num_qubits, or throws CapacityError when num_qubits exceeds
/// `limit` (or is zero).
std::size_t checked_dimension(std::size_t num_qubits,
                              std::size_t limit = kDefaultDenseLimit);

/// Bit of a computational-basis index that holds `qubit`. Qubit 0 is the
/// leftmost tensor factor, i.e. the most significant bit.
constexpr std::uint64_t qubit_bit(std::size_t num_qubits, std::size_t qubit) {
  return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

/// A 2^N x 2^N complex matrix tagged with its qubit count. Used both for
/// observables and for density matrices.
class DenseOperator {
 public:
  /// Throws DimensionError unless `matrix` is square of side 2^num_qubits.
  /// With `hermitian` set, also throws ValidationError if the matrix is not
  /// Hermitian within 1e-12.
  DenseOperator(std::size_t num_qubits, ComplexMatrix matrix,
                bool hermitian = false);

  static DenseOperator zero(std::size_t num_qubits);
  static DenseOperator identity(std::size_t num_qubits);
  /// |psi><psi| for a unit vector psi of length 2^num_qubits.
  static DenseOperator pure_state(std::size_t num_qubits,
                                  const ComplexVector& psi);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  bool hermitian() const { return hermitian_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return matrix_(static_cast<Eigen::Index>(row),
                   static_cast<Eigen::Index>(col));
  }

  Complex trace() const { return matrix_.trace(); }
  /// max |A_ij - conj(A_ji)|.
  double hermiticity_residual() const;
  /// Largest entrywise modulus of the difference with `other`.
  double max_abs_diff(const DenseOperator& other) const;

 private:
  std::size_t num_qubits_;
  ComplexMatrix matrix_;
  bool hermitian_;
};

}  // namespace gmeseq
