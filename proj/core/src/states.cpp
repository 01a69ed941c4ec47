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

#include "gmeseq/states.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "gmeseq/errors.hpp"

namespace gmeseq {

namespace {

std::size_t party_dimension(std::size_t num_qubits, std::size_t limit) {
  if (num_qubits < kMinParties || num_qubits > limit) {
    throw CapacityError("party count " + std::to_string(num_qubits) +
                        " outside [" + std::to_string(kMinParties) + ", " +
                        std::to_string(limit) + "]");
  }
  return checked_dimension(num_qubits, limit);
}

std::string format_param(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

StateFamily StateFamily::generalized_ghz(double alpha) {
  StateFamily f{FamilyKind::GeneralizedGHZ, alpha};
  f.validate();
  return f;
}

StateFamily StateFamily::mixed_ghz(double p1, double p2, double p3,
                                   double alpha) {
  StateFamily f{FamilyKind::MixedGHZ, alpha, p1, p2, p3};
  f.validate();
  return f;
}

void StateFamily::validate() const {
  if (kind == FamilyKind::GeneralizedGHZ || kind == FamilyKind::MixedGHZ) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw DomainError("alpha must lie in (0, 1), got " + format_param(alpha));
    }
  }
  if (kind == FamilyKind::MixedGHZ) {
    if (!(p1 > 0.0) || !(p2 >= 0.0) || !(p3 >= 0.0) ||
        std::abs(p1 + p2 + p3 - 1.0) > 1e-12) {
      throw DomainError("mixture weights need p1 > 0, p2, p3 >= 0, sum 1");
    }
  }
}

StabilizerFamily StateFamily::stabilizer_family() const {
  return kind == FamilyKind::Cluster ? StabilizerFamily::Cluster
                                     : StabilizerFamily::GHZ;
}

double StateFamily::x_contrast() const {
  switch (kind) {
    case FamilyKind::GeneralizedGHZ:
      return 2.0 * std::sqrt(alpha * (1.0 - alpha));
    case FamilyKind::MixedGHZ:
      return 2.0 * p1 * std::sqrt(alpha * (1.0 - alpha));
    default:
      return 1.0;
  }
}

std::string StateFamily::to_string() const {
  switch (kind) {
    case FamilyKind::GHZ:
      return "ghz";
    case FamilyKind::GeneralizedGHZ:
      return "gghz:alpha=" + format_param(alpha);
    case FamilyKind::MixedGHZ:
      return "mixed:p1=" + format_param(p1) + ",p2=" + format_param(p2) +
             ",p3=" + format_param(p3) + ",alpha=" + format_param(alpha);
    case FamilyKind::Cluster:
      return "cluster";
  }
  return "?";
}

StateFamily parse_state_family(std::string_view text) {
  const auto colon = text.find(':');
  const std::string name(text.substr(0, colon));
  std::map<std::string, double> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw DomainError("expected key=value in state spec, got '" +
                          std::string(item) + "'");
      }
      const std::string key(item.substr(0, eq));
      const std::string value(item.substr(eq + 1));
      try {
        std::size_t used = 0;
        params[key] = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw DomainError("bad number '" + value + "' for " + key);
      }
      rest = comma == std::string_view::npos ? std::string_view{}
                                             : rest.substr(comma + 1);
    }
  }
  auto take = [&](const char* key, double fallback, bool required) {
    auto it = params.find(key);
    if (it == params.end()) {
      if (required) {
        throw DomainError("state '" + name + "' needs " + key);
      }
      return fallback;
    }
    double v = it->second;
    params.erase(it);
    return v;
  };
  StateFamily family;
  if (name == "ghz") {
    family = StateFamily::ghz();
  } else if (name == "cluster") {
    family = StateFamily::cluster();
  } else if (name == "gghz") {
    family = StateFamily::generalized_ghz(take("alpha", 0.5, true));
  } else if (name == "mixed") {
    const double p1 = take("p1", 1.0, true);
    const double p2 = take("p2", 0.0, false);
    const double p3 = take("p3", 0.0, false);
    family = StateFamily::mixed_ghz(p1, p2, p3, take("alpha", 0.5, true));
  } else {
    throw DomainError("unknown state family '" + name + "'");
  }
  if (!params.empty()) {
    throw DomainError("unknown parameter '" + params.begin()->first +
                      "' for state '" + name + "'");
  }
  return family;
}

ComplexVector generalized_ghz_vector(std::size_t num_qubits, double alpha,
                                     std::size_t limit) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1), got " + format_param(alpha));
  }
  const auto dim = static_cast<Eigen::Index>(party_dimension(num_qubits, limit));
  ComplexVector psi = ComplexVector::Zero(dim);
  psi(0) = std::sqrt(alpha);
  psi(dim - 1) = std::sqrt(1.0 - alpha);
  return psi;
}

ComplexVector ghz_vector(std::size_t num_qubits, std::size_t limit) {
  const auto dim = static_cast<Eigen::Index>(party_dimension(num_qubits, limit));
  ComplexVector psi = ComplexVector::Zero(dim);
  psi(0) = psi(dim - 1) = 1.0 / std::sqrt(2.0);
  return psi;
}

Eigen::Matrix4cd ising_phase_gate() {
  // n (x) n with n = (1 - sigma_z)/2 is diag(0, 0, 0, 1), so the exponential
  // acts entrywise on the diagonal.
  Eigen::Matrix2d n;
  n << 0.0, 0.0, 0.0, 1.0;
  Eigen::Matrix4d nn;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      nn.block<2, 2>(2 * a, 2 * b) = n(a, b) * n;
    }
  }
  Eigen::Matrix4cd gate = Eigen::Matrix4cd::Zero();
  for (int d = 0; d < 4; ++d) {
    gate(d, d) = std::exp(Complex{0.0, M_PI * nn(d, d)});
  }
  return gate;
}

ComplexVector apply_two_qubit(const Eigen::Matrix4cd& gate, std::size_t q1,
                              std::size_t q2, std::size_t num_qubits,
                              const ComplexVector& psi) {
  if (q1 == q2 || q1 >= num_qubits || q2 >= num_qubits) {
    throw DimensionError("invalid qubit pair for a two-qubit gate");
  }
  const std::uint64_t b1 = qubit_bit(num_qubits, q1);
  const std::uint64_t b2 = qubit_bit(num_qubits, q2);
  ComplexVector out = psi;
  const auto dim = static_cast<std::uint64_t>(psi.size());
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & (b1 | b2)) continue;
    const std::uint64_t idx[4] = {base, base | b2, base | b1, base | b1 | b2};
    for (int r = 0; r < 4; ++r) {
      Complex acc{};
      for (int c = 0; c < 4; ++c) {
        acc += gate(r, c) * psi(static_cast<Eigen::Index>(idx[c]));
      }
      out(static_cast<Eigen::Index>(idx[r])) = acc;
    }
  }
  return out;
}

ComplexVector cluster_vector(std::size_t num_qubits, std::size_t limit) {
  const auto dim = static_cast<Eigen::Index>(party_dimension(num_qubits, limit));
  ComplexVector psi =
      ComplexVector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  const Eigen::Matrix4cd gate = ising_phase_gate();
  for (std::size_t m = 0; m + 1 < num_qubits; ++m) {
    psi = apply_two_qubit(gate, m, m + 1, num_qubits, psi);
  }
  return psi;
}

ComplexVector apply_pauli(const PauliString& p, const ComplexVector& psi) {
  if (psi.size() != (Eigen::Index{1} << p.num_qubits())) {
    throw DimensionError("state size does not match the Pauli string");
  }
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const Complex base = Phase::from_power(std::popcount(x & z)).apply(p.coeff());
  ComplexVector out(psi.size());
  for (Eigen::Index row = 0; row < psi.size(); ++row) {
    const std::uint64_t col = static_cast<std::uint64_t>(row) ^ x;
    const Complex v = psi(static_cast<Eigen::Index>(col));
    out(row) = base * ((std::popcount(col & z) % 2 == 1) ? -v : v);
  }
  return out;
}

double stabilizer_residual(const PauliString& s, const ComplexVector& psi) {
  return (apply_pauli(s, psi) - psi).norm();
}

DenseOperator make_ghz(std::size_t num_qubits, std::size_t limit) {
  return DenseOperator::pure_state(num_qubits, ghz_vector(num_qubits, limit));
}

DenseOperator make_generalized_ghz(std::size_t num_qubits, double alpha,
                                   std::size_t limit) {
  return DenseOperator::pure_state(
      num_qubits, generalized_ghz_vector(num_qubits, alpha, limit));
}

DenseOperator make_mixed_ghz(std::size_t num_qubits, double p1, double p2,
                             double p3, double alpha, std::size_t limit) {
  StateFamily::mixed_ghz(p1, p2, p3, alpha);
  const ComplexVector psi = generalized_ghz_vector(num_qubits, alpha, limit);
  ComplexMatrix rho = p1 * (psi * psi.adjoint());
  const Eigen::Index last = rho.rows() - 1;
  rho(0, 0) += p2;
  rho(last, last) += p3;
  return DenseOperator(num_qubits, std::move(rho), true);
}

DenseOperator make_cluster(std::size_t num_qubits, std::size_t limit) {
  return DenseOperator::pure_state(num_qubits,
                                   cluster_vector(num_qubits, limit));
}

DenseOperator make_state(const StateFamily& family, std::size_t num_qubits,
                         std::size_t limit) {
  family.validate();
  switch (family.kind) {
    case FamilyKind::GHZ:
      return make_ghz(num_qubits, limit);
    case FamilyKind::GeneralizedGHZ:
      return make_generalized_ghz(num_qubits, family.alpha, limit);
    case FamilyKind::MixedGHZ:
      return make_mixed_ghz(num_qubits, family.p1, family.p2, family.p3,
                            family.alpha, limit);
    case FamilyKind::Cluster:
      return make_cluster(num_qubits, limit);
  }
  throw DomainError("unknown state family");
}

std::vector<PauliString> stabilizer_generators(StabilizerFamily family,
                                               std::size_t num_qubits) {
  if (num_qubits < kMinParties) {
    throw CapacityError("stabilizer families need at least 3 parties");
  }
  const std::size_t n = num_qubits;
  std::vector<PauliString> gens;
  gens.reserve(n);
  if (family == StabilizerFamily::GHZ) {
    gens.emplace_back(std::vector<Pauli>(n, Pauli::X));
    for (std::size_t m = 1; m < n; ++m) {
      std::vector<Pauli> l(n, Pauli::I);
      l[m - 1] = l[m] = Pauli::Z;
      gens.emplace_back(std::move(l));
    }
  } else if (family == StabilizerFamily::Cluster) {
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<Pauli> l(n, Pauli::I);
      l[m] = Pauli::X;
      if (m > 0) l[m - 1] = Pauli::Z;
      if (m + 1 < n) l[m + 1] = Pauli::Z;
      gens.emplace_back(std::move(l));
    }
  } else {
    throw DomainError("no stabilizer generators for this family");
  }
  if (n <= kDefaultDenseLimit) {
    const ComplexVector psi = family == StabilizerFamily::GHZ
                                  ? ghz_vector(n)
                                  : cluster_vector(n);
    for (const auto& s : gens) {
      const double r = stabilizer_residual(s, psi);
      if (r > 1e-12) {
        throw AlgebraError("generator " + s.letters_string() +
                           " does not stabilize the state (residual " +
                           std::to_string(r) + ")");
      }
    }
  }
  return gens;
}

std::vector<PauliString> stabilizer_generators(const StateFamily& family,
                                               std::size_t num_qubits) {
  if (family.kind != FamilyKind::GHZ && family.kind != FamilyKind::Cluster) {
    throw DomainError("state family " + family.to_string() +
                      " has no stabilizer group of its own");
  }
  return stabilizer_generators(family.stabilizer_family(), num_qubits);
}

}  // namespace gmeseq
