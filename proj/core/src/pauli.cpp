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

#include "gmeseq/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "gmeseq/errors.hpp"

namespace gmeseq {

char to_char(Pauli p) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
    case '_':
      return Pauli::I;
    case 'X':
    case 'x':
      return Pauli::X;
    case 'Y':
    case 'y':
      return Pauli::Y;
    case 'Z':
    case 'z':
      return Pauli::Z;
    default:
      throw DomainError(std::string("not a Pauli letter: '") + c + "'");
  }
}

Complex Phase::apply(Complex z) const {
  switch (power_) {
    case 1:
      return {-z.imag(), z.real()};
    case 2:
      return {-z.real(), -z.imag()};
    case 3:
      return {z.imag(), -z.real()};
    default:
      return z;
  }
}

std::pair<Phase, Pauli> multiply_letters(Pauli a, Pauli b) {
  if (a == Pauli::I) return {Phase{}, b};
  if (b == Pauli::I) return {Phase{}, a};
  if (a == b) return {Phase{}, Pauli::I};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  // X=1, Y=2, Z=3: the remaining letter is 6 - a - b; cyclic order
  // (X,Y), (Y,Z), (Z,X) gives +i.
  const auto c = static_cast<Pauli>(6 - ia - ib);
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {Phase::from_power(cyclic ? 1 : 3), c};
}

PauliString::PauliString(std::vector<Pauli> letters, Complex coeff)
    : letters_(std::move(letters)), coeff_(coeff) {
  if (letters_.empty()) {
    throw DimensionError("a Pauli string needs at least one qubit");
  }
}

PauliString PauliString::parse(std::string_view text, Complex coeff) {
  Phase sign;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') sign = Phase::from_power(2);
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    sign = sign * Phase::from_power(1);
    text.remove_prefix(1);
  }
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(pauli_from_char(c));
  return PauliString(std::move(letters), sign.apply(coeff));
}

PauliString PauliString::identity(std::size_t num_qubits, Complex coeff) {
  return PauliString(std::vector<Pauli>(num_qubits, Pauli::I), coeff);
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit,
                                Pauli p, Complex coeff) {
  if (qubit >= num_qubits) {
    throw DimensionError("qubit index " + std::to_string(qubit) +
                         " out of range for " + std::to_string(num_qubits) +
                         " qubits");
  }
  std::vector<Pauli> letters(num_qubits, Pauli::I);
  letters[qubit] = p;
  return PauliString(std::move(letters), coeff);
}

PauliString PauliString::with_coeff(Complex coeff) const {
  PauliString out = *this;
  out.coeff_ = coeff;
  return out;
}

std::string PauliString::letters_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s.push_back(to_char(p));
  return s;
}

bool PauliString::is_identity() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Pauli p) { return p == Pauli::I; });
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(), [](Pauli p) { return p != Pauli::I; }));
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.num_qubits() != num_qubits()) {
    throw DimensionError("commutator of Pauli strings on " +
                         std::to_string(num_qubits()) + " and " +
                         std::to_string(other.num_qubits()) + " qubits");
  }
  std::size_t anti = 0;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    const Pauli a = letters_[q];
    const Pauli b = other.letters_[q];
    if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
  }
  return anti % 2 == 0;
}

std::uint64_t PauliString::x_mask() const {
  if (num_qubits() > 64) throw CapacityError("bit masks limited to 64 qubits");
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    if (letters_[q] == Pauli::X || letters_[q] == Pauli::Y) {
      m |= qubit_bit(num_qubits(), q);
    }
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  if (num_qubits() > 64) throw CapacityError("bit masks limited to 64 qubits");
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    if (letters_[q] == Pauli::Z || letters_[q] == Pauli::Y) {
      m |= qubit_bit(num_qubits(), q);
    }
  }
  return m;
}

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("cannot multiply Pauli strings on " +
                         std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
  }
  Phase phase;
  std::vector<Pauli> letters(a.num_qubits());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    auto [ph, p] = multiply_letters(a[q], b[q]);
    phase = phase * ph;
    letters[q] = p;
  }
  return PauliString(std::move(letters), phase.apply(a.coeff() * b.coeff()));
}

// ---------------------------------------------------------------------------

OperatorExpr::OperatorExpr(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw DimensionError("an operator needs >= 1 qubit");
}

OperatorExpr::OperatorExpr(std::size_t num_qubits,
                           std::vector<PauliString> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
  if (num_qubits == 0) throw DimensionError("an operator needs >= 1 qubit");
  for (const auto& t : terms_) {
    if (t.num_qubits() != num_qubits_) {
      throw DimensionError("term " + t.letters_string() + " does not act on " +
                           std::to_string(num_qubits_) + " qubits");
    }
  }
  canonicalize();
}

OperatorExpr::OperatorExpr(const PauliString& term)
    : OperatorExpr(term.num_qubits(), std::vector<PauliString>{term}) {}

OperatorExpr OperatorExpr::identity(std::size_t num_qubits, Complex coeff) {
  return OperatorExpr(num_qubits, {PauliString::identity(num_qubits, coeff)});
}

void OperatorExpr::canonicalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const PauliString& a, const PauliString& b) {
                     return std::lexicographical_compare(
                         a.letters().begin(), a.letters().end(),
                         b.letters().begin(), b.letters().end());
                   });
  std::vector<PauliString> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() &&
        std::equal(merged.back().letters().begin(),
                   merged.back().letters().end(), t.letters().begin())) {
      merged.back() = merged.back().with_coeff(merged.back().coeff() + t.coeff());
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged,
                [](const PauliString& t) { return t.coeff() == Complex{}; });
  terms_ = std::move(merged);
}

Complex OperatorExpr::coefficient_of(std::string_view letters) const {
  for (const auto& t : terms_) {
    if (t.letters_string() == letters) return t.coeff();
  }
  return {};
}

bool OperatorExpr::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const PauliString& t) {
    return std::abs(t.coeff().imag()) <= tol;
  });
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw DimensionError("cannot add operators on " +
                         std::to_string(num_qubits_) + " and " +
                         std::to_string(other.num_qubits_) + " qubits");
  }
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& other) {
  return *this += Complex{-1.0, 0.0} * other;
}

OperatorExpr& OperatorExpr::operator*=(Complex scalar) {
  for (auto& t : terms_) t = t.with_coeff(t.coeff() * scalar);
  canonicalize();
  return *this;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  if (a.num_qubits_ != b.num_qubits_) {
    throw DimensionError("cannot multiply operators on " +
                         std::to_string(a.num_qubits_) + " and " +
                         std::to_string(b.num_qubits_) + " qubits");
  }
  std::vector<PauliString> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) terms.push_back(pauli_multiply(ta, tb));
  }
  return OperatorExpr(a.num_qubits_, std::move(terms));
}

namespace {

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

std::string OperatorExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Complex c = terms_[i].coeff();
    std::string mag;
    bool negative = false;
    if (c.imag() == 0.0) {
      negative = c.real() < 0.0;
      mag = format_number(std::abs(c.real()));
    } else if (c.real() == 0.0) {
      negative = c.imag() < 0.0;
      mag = format_number(std::abs(c.imag())) + "i";
    } else {
      mag = "(" + format_number(c.real()) + (c.imag() < 0 ? "-" : "+") +
            format_number(std::abs(c.imag())) + "i)";
    }
    if (i == 0) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += mag + "*" + terms_[i].letters_string();
  }
  return out;
}

OperatorExpr expand_projector_product(std::size_t num_qubits,
                                      std::span<const PauliString> generators,
                                      std::span<const std::size_t> selected,
                                      std::span<const double> weights) {
  if (!weights.empty() && weights.size() != generators.size()) {
    throw DimensionError("projector weights must match the generator count");
  }
  for (std::size_t idx : selected) {
    if (idx >= generators.size()) {
      throw DimensionError("generator index " + std::to_string(idx) +
                           " out of range");
    }
    if (generators[idx].num_qubits() != num_qubits) {
      throw DimensionError("generator " + generators[idx].letters_string() +
                           " does not act on " + std::to_string(num_qubits) +
                           " qubits");
    }
  }
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (std::size_t j = i + 1; j < selected.size(); ++j) {
      const auto& a = generators[selected[i]];
      const auto& b = generators[selected[j]];
      if (!a.commutes_with(b)) {
        throw AlgebraError("generators " + a.letters_string() + " and " +
                           b.letters_string() + " do not commute");
      }
    }
  }
  OperatorExpr result = OperatorExpr::identity(num_qubits);
  for (std::size_t idx : selected) {
    const double w = weights.empty() ? 1.0 : weights[idx];
    const auto& g = generators[idx];
    OperatorExpr factor(num_qubits,
                        {PauliString::identity(num_qubits, 0.5),
                         g.with_coeff(0.5 * w * g.coeff())});
    result = result * factor;
  }
  return result;
}

OperatorExpr expand_projector_product(std::size_t num_qubits,
                                      std::span<const PauliString> generators,
                                      std::span<const double> weights) {
  std::vector<std::size_t> all(generators.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return expand_projector_product(num_qubits, generators, all, weights);
}

namespace {

void accumulate_dense(const PauliString& term, ComplexMatrix& m) {
  const std::uint64_t x = term.x_mask();
  const std::uint64_t z = term.z_mask();
  const Complex base =
      Phase::from_power(std::popcount(x & z)).apply(term.coeff());
  const auto dim = static_cast<std::uint64_t>(m.rows());
  for (std::uint64_t row = 0; row < dim; ++row) {
    const std::uint64_t col = row ^ x;
    const bool flip = std::popcount(col & z) % 2 == 1;
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
        flip ? -base : base;
  }
}

}  // namespace

DenseOperator to_dense(const OperatorExpr& expr, std::size_t limit) {
  const std::size_t dim = checked_dimension(expr.num_qubits(), limit);
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (const auto& t : expr.terms()) accumulate_dense(t, m);
  return DenseOperator(expr.num_qubits(), std::move(m), expr.is_hermitian(0.0));
}

DenseOperator to_dense(const PauliString& term, std::size_t limit) {
  return to_dense(OperatorExpr(term), limit);
}

nlohmann::json to_json(const OperatorExpr& expr) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : expr.terms()) {
    arr.push_back({{"pauli", t.letters_string()},
                   {"coeff", {t.coeff().real(), t.coeff().imag()}}});
  }
  return arr;
}

OperatorExpr operator_expr_from_json(const nlohmann::json& j,
                                     std::size_t num_qubits) {
  if (!j.is_array()) throw ValidationError("operator JSON must be an array");
  std::vector<PauliString> terms;
  for (const auto& item : j) {
    const auto letters = item.at("pauli").get<std::string>();
    const auto& c = item.at("coeff");
    if (!c.is_array() || c.size() != 2) {
      throw ValidationError("coeff must be [re, im]");
    }
    auto term = PauliString::parse(
        letters, Complex{c[0].get<double>(), c[1].get<double>()});
    if (num_qubits == 0) num_qubits = term.num_qubits();
    terms.push_back(std::move(term));
  }
  if (num_qubits == 0) {
    throw DimensionError("empty operator JSON needs an explicit qubit count");
  }
  return OperatorExpr(num_qubits, std::move(terms));
}

}  // namespace gmeseq
