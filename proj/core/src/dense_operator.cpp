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

#include "gmeseq/dense_operator.hpp"

#include <string>

#include "gmeseq/errors.hpp"

namespace gmeseq {

std::size_t checked_dimension(std::size_t num_qubits, std::size_t limit) {
  if (num_qubits == 0) throw DimensionError("need at least one qubit");
  if (num_qubits > limit) {
    throw CapacityError(std::to_string(num_qubits) +
                        " qubits exceed the dense limit of " +
                        std::to_string(limit));
  }
  return std::size_t{1} << num_qubits;
}

DenseOperator::DenseOperator(std::size_t num_qubits, ComplexMatrix matrix,
                             bool hermitian)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)), hermitian_(hermitian) {
  if (num_qubits_ == 0 || num_qubits_ >= 32) {
    throw DimensionError("unsupported qubit count " +
                         std::to_string(num_qubits_));
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits_);
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw DimensionError("matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + ", expected " +
                         std::to_string(dim) + "x" + std::to_string(dim));
  }
  if (hermitian_ && hermiticity_residual() > 1e-12) {
    throw ValidationError("operator flagged Hermitian is not (residual " +
                          std::to_string(hermiticity_residual()) + ")");
  }
}

DenseOperator DenseOperator::zero(std::size_t num_qubits) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(num_qubits, 31));
  return DenseOperator(num_qubits, ComplexMatrix::Zero(dim, dim), true);
}

DenseOperator DenseOperator::identity(std::size_t num_qubits) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(num_qubits, 31));
  return DenseOperator(num_qubits, ComplexMatrix::Identity(dim, dim), true);
}

DenseOperator DenseOperator::pure_state(std::size_t num_qubits,
                                        const ComplexVector& psi) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(num_qubits, 31));
  if (psi.size() != dim) {
    throw DimensionError("state vector has " + std::to_string(psi.size()) +
                         " amplitudes, expected " + std::to_string(dim));
  }
  if (std::abs(psi.squaredNorm() - 1.0) > 1e-12) {
    throw ValidationError("state vector is not normalized");
  }
  ComplexMatrix rho = psi * psi.adjoint();
  return DenseOperator(num_qubits, std::move(rho), true);
}

double DenseOperator::hermiticity_residual() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DenseOperator::max_abs_diff(const DenseOperator& other) const {
  if (other.num_qubits_ != num_qubits_) {
    throw DimensionError("cannot compare operators of different sizes");
  }
  return (matrix_ - other.matrix_).cwiseAbs().maxCoeff();
}

}  // namespace gmeseq
