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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gmeseq/dense_operator.hpp"

namespace gmeseq {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
/// Accepts I, X, Y, Z (x, y, z also accepted); '_' is read as I.
Pauli pauli_from_char(char c);

/// An exact element i^k of {1, i, -1, -i}.
class Phase {
 public:
  constexpr Phase() = default;
  static constexpr Phase from_power(int k) {
    Phase p;
    p.power_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4);
    return p;
  }
  constexpr int power() const { return power_; }
  constexpr Phase operator*(Phase other) const {
    return from_power(power_ + other.power_);
  }
  constexpr bool operator==(const Phase&) const = default;

  Complex value() const { return apply(Complex{1.0, 0.0}); }
  /// Multiplies z by i^k by swapping and negating components, so no rounding
  /// is introduced.
  Complex apply(Complex z) const;

 private:
  std::uint8_t power_ = 0;
};

/// Phase picked up by the single-qubit product a*b, together with the
/// resulting letter. X*Z = -iY, Z*X = iY, and so on.
std::pair<Phase, Pauli> multiply_letters(Pauli a, Pauli b);

/// A tensor product of single-qubit Paulis with a complex coefficient.
/// Letter 0 acts on qubit 1 (leftmost tensor factor).
class PauliString {
 public:
  PauliString(std::vector<Pauli> letters, Complex coeff = 1.0);

  /// Parses letters such as "XZIZ"; an optional leading sign (+, -, i, -i, +i)
  /// multiplies `coeff`.
  static PauliString parse(std::string_view text, Complex coeff = 1.0);
  static PauliString identity(std::size_t num_qubits, Complex coeff = 1.0);
  /// `p` on `qubit`, identity elsewhere.
  static PauliString single(std::size_t num_qubits, std::size_t qubit,
                            Pauli p, Complex coeff = 1.0);

  std::size_t num_qubits() const { return letters_.size(); }
  std::span<const Pauli> letters() const { return letters_; }
  Pauli operator[](std::size_t qubit) const { return letters_[qubit]; }
  Complex coeff() const { return coeff_; }
  PauliString with_coeff(Complex coeff) const;

  /// Letters only, e.g. "XZIZ".
  std::string letters_string() const;
  bool is_identity() const;
  /// Number of non-identity letters.
  std::size_t weight() const;
  bool commutes_with(const PauliString& other) const;

  /// Basis-index masks (qubit 0 = most significant bit). X and Y set the x
  /// mask, Z and Y set the z mask.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Pauli> letters_;
  Complex coeff_;
};

/// Pauli-group product a*b with the phase tracked exactly per site.
/// Throws DimensionError when the sizes differ.
PauliString pauli_multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return pauli_multiply(a, b);
}

/// A weighted sum of Pauli strings on a fixed number of qubits, kept in
/// canonical form: one term per letter string, sorted lexicographically
/// (I < X < Y < Z per site), exact-zero coefficients dropped.
class OperatorExpr {
 public:
  explicit OperatorExpr(std::size_t num_qubits);
  OperatorExpr(std::size_t num_qubits, std::vector<PauliString> terms);
  explicit OperatorExpr(const PauliString& term);

  static OperatorExpr identity(std::size_t num_qubits, Complex coeff = 1.0);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<PauliString>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the term with the given letters, zero if absent.
  Complex coefficient_of(std::string_view letters) const;
  /// True when every coefficient is real within `tol`.
  bool is_hermitian(double tol = 1e-12) const;

  OperatorExpr& operator+=(const OperatorExpr& other);
  OperatorExpr& operator-=(const OperatorExpr& other);
  OperatorExpr& operator*=(Complex scalar);

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) {
    return a += b;
  }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) {
    return a -= b;
  }
  friend OperatorExpr operator*(Complex s, OperatorExpr a) { return a *= s; }
  friend OperatorExpr operator*(OperatorExpr a, Complex s) { return a *= s; }
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

  /// Human-readable sum, e.g. "1.5*III - 1*XXX - 0.5*ZZI".
  std::string to_string() const;

  bool operator==(const OperatorExpr&) const = default;

 private:
  void canonicalize();

  std::size_t num_qubits_;
  std::vector<PauliString> terms_;
};

/// Multiplies out prod_m (I + w_m S_m)/2. The generators must pairwise
/// commute (AlgebraError otherwise) and act on `num_qubits` qubits
/// (DimensionError otherwise). With unit weights this is the projector onto
/// the joint +1 eigenspace. An empty list yields the identity.
OperatorExpr expand_projector_product(std::size_t num_qubits,
                                      std::span<const PauliString> generators,
                                      std::span<const double> weights = {});

/// Same, restricted to the generators whose positions appear in `selected`.
OperatorExpr expand_projector_product(std::size_t num_qubits,
                                      std::span<const PauliString> generators,
                                      std::span<const std::size_t> selected,
                                      std::span<const double> weights);

/// Dense 2^N x 2^N matrix of the expression; throws CapacityError above
/// `limit` qubits. The hermitian flag is set when the coefficients are real.
DenseOperator to_dense(const OperatorExpr& expr,
                       std::size_t limit = kDefaultDenseLimit);
DenseOperator to_dense(const PauliString& term,
                       std::size_t limit = kDefaultDenseLimit);

/// [{"pauli": "XZIZ", "coeff": [re, im]}, ...] in canonical order.
nlohmann::json to_json(const OperatorExpr& expr);
/// Inverse of to_json. An empty array needs `num_qubits`.
OperatorExpr operator_expr_from_json(const nlohmann::json& j,
                                     std::size_t num_qubits = 0);

}  // namespace gmeseq
