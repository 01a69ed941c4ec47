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

// Reference constructions used only by tests. These build every matrix by
// explicit Kronecker products and general-purpose linear algebra so that
// they share no code path with the library routines they check.

#include <complex>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gmeseq::testing {

using Mat = Eigen::MatrixXcd;
using Cx = std::complex<double>;

inline Mat pauli_2x2(char letter) {
  Mat m(2, 2);
  switch (letter) {
    case 'X':
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case 'Y':
      m << 0.0, Cx(0, -1), Cx(0, 1), 0.0;
      break;
    case 'Z':
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      m << 1.0, 0.0, 0.0, 1.0;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

/// Letters left to right are the tensor factors left to right.
inline Mat pauli_kron(const std::string& letters, Cx coeff = 1.0) {
  Mat m = Mat::Identity(1, 1);
  for (char c : letters) m = kron(m, pauli_2x2(c));
  return coeff * m;
}

/// sigma on qubit `target` of n, identity elsewhere.
inline Mat on_qubit(const Mat& single, std::size_t n, std::size_t target) {
  Mat m = Mat::Identity(1, 1);
  for (std::size_t q = 0; q < n; ++q) {
    m = kron(m, q == target ? single : Mat::Identity(2, 2));
  }
  return m;
}

/// Principal square root of a PSD matrix via a general eigendecomposition.
inline Mat psd_sqrt(const Mat& e) {
  Eigen::SelfAdjointEigenSolver<Mat> es(e);
  Eigen::VectorXd v = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * v.cast<Cx>().asDiagonal() *
         es.eigenvectors().adjoint();
}

/// The observer channel written directly from the effect operators:
/// 1/2 sum over settings and outcomes of sqrt(E) rho sqrt(E), with sqrt(E)
/// taken numerically.
inline Mat reference_channel(const Mat& rho, double lambda, std::size_t n,
                             std::size_t target) {
  const Mat id = Mat::Identity(2, 2);
  const Mat x = pauli_2x2('X');
  const Mat z = pauli_2x2('Z');
  const Mat effects[4] = {0.5 * (id + lambda * x), 0.5 * (id - lambda * x),
                          0.5 * (id + z), 0.5 * (id - z)};
  Mat out = Mat::Zero(rho.rows(), rho.cols());
  for (const auto& e : effects) {
    const Mat k = on_qubit(psd_sqrt(e), n, target);
    out += k * rho * k.adjoint();
  }
  return 0.5 * out;
}

inline double trace_real(const Mat& rho, const Mat& obs) {
  return (rho * obs).trace().real();
}

inline Mat random_density(std::size_t n, std::mt19937_64& rng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::normal_distribution<double> g(0.0, 1.0);
  Mat a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = Cx(g(rng), g(rng));
  Mat rho = a * a.adjoint();
  return rho / rho.trace().real();
}

inline Mat random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::normal_distribution<double> g(0.0, 1.0);
  Mat a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) a(r, c) = Cx(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

inline std::string random_letters(std::size_t n, std::mt19937_64& rng) {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(kLetters[pick(rng)]);
  return s;
}

/// All 4^n letter strings.
inline std::vector<std::string> all_letters(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : {'I', 'X', 'Y', 'Z'}) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

/// Projector product prod_m (I + S_m)/2 from dense Pauli matrices.
inline Mat projector_product(const std::vector<std::string>& gens,
                             std::size_t n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat p = Mat::Identity(dim, dim);
  for (const auto& g : gens) p = p * (0.5 * (Mat::Identity(dim, dim) + pauli_kron(g)));
  return p;
}

/// Sequential witness value from decay factors computed the naive way:
/// 1 - prod (1 + sqrt(1 - l^2))/2 - contrast * l_k / 2^{k-1}.
inline double naive_witness_value(const std::vector<double>& lambdas,
                                  std::size_t k, double contrast = 1.0) {
  double prod = 1.0;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    prod *= (1.0 + std::sqrt(1.0 - lambdas[j] * lambdas[j])) / 2.0;
  }
  return 1.0 - prod - contrast * lambdas[k - 1] / std::pow(2.0, double(k - 1));
}

}  // namespace gmeseq::testing
