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

#include "gmeseq/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "gmeseq/errors.hpp"

namespace gmeseq {

namespace {

void check_sharpness(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("sharpness must lie in [0, 1], got " +
                      std::to_string(lambda));
  }
}

void check_target(const DenseOperator& rho, std::size_t target) {
  if (target >= rho.num_qubits()) {
    throw DimensionError("target qubit " + std::to_string(target) +
                         " out of range for " +
                         std::to_string(rho.num_qubits()) + " qubits");
  }
}

// Removes the anti-Hermitian rounding residue of a matrix that is Hermitian
// in exact arithmetic.
DenseOperator hermitian_part(std::size_t num_qubits, ComplexMatrix m) {
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  return DenseOperator(num_qubits, std::move(h), true);
}

Eigen::Matrix2cd sigma(Setting s) {
  Eigen::Matrix2cd m;
  if (s == Setting::X) {
    m << 0.0, 1.0, 1.0, 0.0;
  } else {
    m << 1.0, 0.0, 0.0, -1.0;
  }
  return m;
}

}  // namespace

MeasurementEffect::MeasurementEffect(Setting setting_, Outcome outcome_,
                                     double sharpness_,
                                     std::size_t target_qubit_)
    : setting(setting_),
      outcome(outcome_),
      sharpness(sharpness_),
      target_qubit(target_qubit_) {
  check_sharpness(sharpness);
}

Eigen::Matrix2cd MeasurementEffect::matrix() const {
  const double sign = outcome == Outcome::Plus ? 1.0 : -1.0;
  return 0.5 * (Eigen::Matrix2cd::Identity() + sign * sharpness * sigma(setting));
}

Eigen::Matrix2cd MeasurementEffect::sqrt_matrix() const {
  const double sign = outcome == Outcome::Plus ? 1.0 : -1.0;
  // Eigenvalue of the effect on the sigma = +1 and sigma = -1 eigenspaces.
  const double on_plus = std::sqrt(0.5 * (1.0 + sign * sharpness));
  const double on_minus = std::sqrt(0.5 * (1.0 - sign * sharpness));
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd s = sigma(setting);
  return on_plus * 0.5 * (id + s) + on_minus * 0.5 * (id - s);
}

std::array<MeasurementEffect, 4> observer_effects(double lambda,
                                                  std::size_t target_qubit) {
  return {MeasurementEffect(Setting::X, Outcome::Plus, lambda, target_qubit),
          MeasurementEffect(Setting::X, Outcome::Minus, lambda, target_qubit),
          MeasurementEffect(Setting::Z, Outcome::Plus, 1.0, target_qubit),
          MeasurementEffect(Setting::Z, Outcome::Minus, 1.0, target_qubit)};
}

void validate_density_matrix(const DenseOperator& rho, bool check_positivity) {
  const double herm = rho.hermiticity_residual();
  if (herm > kHermitianTolerance) {
    throw ValidationError("density matrix is not Hermitian (residual " +
                          std::to_string(herm) + ")");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTolerance) {
    throw ValidationError("density matrix trace is " +
                          std::to_string(tr.real()) + "+" +
                          std::to_string(tr.imag()) + "i, not 1");
  }
  if (check_positivity) {
    const double lo = min_eigenvalue(rho);
    if (lo < kPositivityTolerance) {
      throw ValidationError("density matrix has eigenvalue " +
                            std::to_string(lo));
    }
  }
}

bool is_density_matrix(const DenseOperator& rho) {
  try {
    validate_density_matrix(rho, true);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

DenseOperator conjugate_on_qubit(const DenseOperator& rho,
                                 const Eigen::Matrix2cd& k,
                                 std::size_t target) {
  check_target(rho, target);
  ComplexMatrix m = rho.matrix();
  const auto dim = static_cast<std::uint64_t>(rho.dim());
  const std::uint64_t bit = qubit_bit(rho.num_qubits(), target);
  const Complex k00 = k(0, 0), k01 = k(0, 1), k10 = k(1, 0), k11 = k(1, 1);
  // Left multiplication: mixes row pairs (bit clear, bit set).
  for (std::uint64_t r0 = 0; r0 < dim; ++r0) {
    if (r0 & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(r0);
    const auto i1 = static_cast<Eigen::Index>(r0 | bit);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex a = m(i0, c);
      const Complex b = m(i1, c);
      m(i0, c) = k00 * a + k01 * b;
      m(i1, c) = k10 * a + k11 * b;
    }
  }
  // Right multiplication by K^dagger: mixes column pairs.
  const Complex h00 = std::conj(k00), h01 = std::conj(k01),
                h10 = std::conj(k10), h11 = std::conj(k11);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (std::uint64_t c0 = 0; c0 < dim; ++c0) {
      if (c0 & bit) continue;
      const auto j0 = static_cast<Eigen::Index>(c0);
      const auto j1 = static_cast<Eigen::Index>(c0 | bit);
      const Complex a = m(r, j0);
      const Complex b = m(r, j1);
      m(r, j0) = a * h00 + b * h01;
      m(r, j1) = a * h10 + b * h11;
    }
  }
  return DenseOperator(rho.num_qubits(), std::move(m), false);
}

DenseOperator luders_update(const DenseOperator& rho, double lambda,
                            std::size_t target) {
  check_sharpness(lambda);
  check_target(rho, target);
  validate_density_matrix(rho, false);
  ComplexMatrix acc = ComplexMatrix::Zero(rho.matrix().rows(),
                                          rho.matrix().cols());
  for (const auto& effect : observer_effects(lambda, target)) {
    acc += conjugate_on_qubit(rho, effect.sqrt_matrix(), target).matrix();
  }
  return hermitian_part(rho.num_qubits(), 0.5 * acc);
}

DenseOperator luders_update_closed_form(const DenseOperator& rho,
                                        double lambda, std::size_t target) {
  check_sharpness(lambda);
  check_target(rho, target);
  const double c = std::sqrt(1.0 - lambda * lambda);
  const double w_id = (2.0 + c) / 4.0;
  const double w_z = 0.25;
  const double w_x = (1.0 - c) / 4.0;
  const ComplexMatrix& in = rho.matrix();
  ComplexMatrix out(in.rows(), in.cols());
  const std::uint64_t bit = qubit_bit(rho.num_qubits(), target);
  for (Eigen::Index r = 0; r < in.rows(); ++r) {
    const auto ur = static_cast<std::uint64_t>(r);
    for (Eigen::Index col = 0; col < in.cols(); ++col) {
      const auto uc = static_cast<std::uint64_t>(col);
      // Z rho Z flips the sign of entries whose target bits differ.
      const double z_sign = ((ur ^ uc) & bit) ? -1.0 : 1.0;
      const Complex flipped = in(static_cast<Eigen::Index>(ur ^ bit),
                                 static_cast<Eigen::Index>(uc ^ bit));
      out(r, col) = (w_id + w_z * z_sign) * in(r, col) + w_x * flipped;
    }
  }
  return hermitian_part(rho.num_qubits(), std::move(out));
}

DenseOperator apply_channel_k_times(const DenseOperator& rho1,
                                    std::span<const double> lambdas,
                                    std::size_t target) {
  for (double l : lambdas) check_sharpness(l);
  DenseOperator rho = rho1;
  for (double l : lambdas) rho = luders_update(rho, l, target);
  return rho;
}

double expectation(const DenseOperator& rho, const DenseOperator& obs) {
  if (rho.num_qubits() != obs.num_qubits()) {
    throw DimensionError("state and observable act on different qubit counts");
  }
  if (!obs.hermitian() && obs.hermiticity_residual() > kHermitianTolerance) {
    throw ValidationError("observable is not Hermitian");
  }
  const Complex v = rho.matrix().cwiseProduct(obs.matrix().transpose()).sum();
  if (std::abs(v.imag()) > kImaginaryResidueTolerance) {
    throw ValidationError("expectation has imaginary part " +
                          std::to_string(v.imag()));
  }
  return v.real();
}

Complex trace_with(const DenseOperator& rho, const PauliString& p) {
  if (p.num_qubits() != rho.num_qubits()) {
    throw DimensionError("Pauli string and state act on different qubit counts");
  }
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  const Complex base = Phase::from_power(std::popcount(x & z)).apply(p.coeff());
  const auto dim = static_cast<std::uint64_t>(rho.dim());
  const ComplexMatrix& m = rho.matrix();
  Complex acc{};
  for (std::uint64_t col = 0; col < dim; ++col) {
    const std::uint64_t row = col ^ x;
    const Complex v = m(static_cast<Eigen::Index>(row),
                        static_cast<Eigen::Index>(col));
    acc += (std::popcount(row & z) % 2 == 1) ? -v : v;
  }
  return base * acc;
}

double expectation(const DenseOperator& rho, const OperatorExpr& obs) {
  if (rho.num_qubits() != obs.num_qubits()) {
    throw DimensionError("state and observable act on different qubit counts");
  }
  if (!obs.is_hermitian(kHermitianTolerance)) {
    throw ValidationError("observable has non-real Pauli coefficients");
  }
  Complex v{};
  for (const auto& t : obs.terms()) v += trace_with(rho, t);
  if (std::abs(v.imag()) > kImaginaryResidueTolerance) {
    throw ValidationError("expectation has imaginary part " +
                          std::to_string(v.imag()));
  }
  return v.real();
}

EigenResult eigen_decompose(const DenseOperator& op) {
  if (!op.hermitian() && op.hermiticity_residual() > kHermitianTolerance) {
    throw ValidationError("eigen_spectrum needs a Hermitian operator");
  }
  const Eigen::MatrixXcd a = op.matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("Hermitian eigensolver did not converge");
  }
  EigenResult out;
  const auto& vals = solver.eigenvalues();
  out.values.assign(vals.data(), vals.data() + vals.size());
  out.vectors = solver.eigenvectors();
  const Eigen::MatrixXcd r =
      a * solver.eigenvectors() -
      solver.eigenvectors() * vals.cast<Complex>().asDiagonal();
  out.max_residual = r.colwise().norm().maxCoeff();
  return out;
}

std::vector<double> eigen_spectrum(const DenseOperator& op) {
  EigenResult r = eigen_decompose(op);
  if (r.max_residual >= 1e-9) {
    throw ValidationError("eigen residual " + std::to_string(r.max_residual) +
                          " exceeds 1e-9");
  }
  return std::move(r.values);
}

double min_eigenvalue(const DenseOperator& op) {
  return eigen_spectrum(op).front();
}

ComplexVector haar_random_state(std::size_t num_qubits, std::mt19937_64& rng) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(num_qubits, 31));
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    psi(i) = Complex{re, im};
  }
  psi.normalize();
  return psi;
}

DenseOperator random_density_matrix(std::size_t num_qubits,
                                    std::mt19937_64& rng) {
  const auto dim = static_cast<Eigen::Index>(checked_dimension(num_qubits, 31));
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex{re, im};
    }
  }
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return hermitian_part(num_qubits, rho);
}

namespace {

std::vector<std::size_t> checked_side(std::size_t num_qubits,
                                      std::span<const std::size_t> side_a) {
  std::vector<std::size_t> a(side_a.begin(), side_a.end());
  std::sort(a.begin(), a.end());
  if (a.empty() || a.size() >= num_qubits) {
    throw DomainError("bipartition side must be a nonempty proper subset");
  }
  if (std::adjacent_find(a.begin(), a.end()) != a.end() ||
      a.back() >= num_qubits) {
    throw DomainError("bipartition side has repeated or out-of-range qubits");
  }
  return a;
}

}  // namespace

ComplexVector combine_bipartite(std::size_t num_qubits,
                                std::span<const std::size_t> side_a,
                                const ComplexVector& psi_a,
                                const ComplexVector& psi_b) {
  const auto a = checked_side(num_qubits, side_a);
  std::vector<std::size_t> b;
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if (!std::binary_search(a.begin(), a.end(), q)) b.push_back(q);
  }
  if (psi_a.size() != (Eigen::Index{1} << a.size()) ||
      psi_b.size() != (Eigen::Index{1} << b.size())) {
    throw DimensionError("factor state sizes do not match the bipartition");
  }
  const auto dim = static_cast<std::uint64_t>(checked_dimension(num_qubits, 31));
  auto extract = [num_qubits](std::uint64_t index,
                              const std::vector<std::size_t>& qubits) {
    std::uint64_t out = 0;
    for (std::size_t q : qubits) {
      out = (out << 1) | ((index & qubit_bit(num_qubits, q)) ? 1u : 0u);
    }
    return static_cast<Eigen::Index>(out);
  };
  ComplexVector psi(static_cast<Eigen::Index>(dim));
  for (std::uint64_t i = 0; i < dim; ++i) {
    psi(static_cast<Eigen::Index>(i)) = psi_a(extract(i, a)) * psi_b(extract(i, b));
  }
  return psi;
}

ComplexVector sample_biseparable_vector(std::size_t num_qubits,
                                        std::span<const std::size_t> side_a,
                                        std::mt19937_64& rng) {
  const auto a = checked_side(num_qubits, side_a);
  const ComplexVector psi_a = haar_random_state(a.size(), rng);
  const ComplexVector psi_b = haar_random_state(num_qubits - a.size(), rng);
  return combine_bipartite(num_qubits, a, psi_a, psi_b);
}

DenseOperator sample_biseparable(std::size_t num_qubits,
                                 std::span<const std::size_t> side_a,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ComplexVector psi = sample_biseparable_vector(num_qubits, side_a, rng);
  psi.normalize();
  return DenseOperator::pure_state(num_qubits, psi);
}

std::vector<std::vector<std::size_t>> all_bipartitions(std::size_t num_qubits) {
  if (num_qubits < 2 || num_qubits > 31) {
    throw DomainError("bipartitions need 2..31 qubits");
  }
  std::vector<std::vector<std::size_t>> out;
  // Qubit 0 always sits on side A; the remaining qubits choose a side, and
  // the all-in-A choice is excluded.
  const std::uint64_t others = std::uint64_t{1} << (num_qubits - 1);
  for (std::uint64_t mask = 0; mask + 1 < others; ++mask) {
    std::vector<std::size_t> side{0};
    for (std::size_t q = 1; q < num_qubits; ++q) {
      if (mask & (std::uint64_t{1} << (q - 1))) side.push_back(q);
    }
    out.push_back(std::move(side));
  }
  return out;
}

nlohmann::json density_to_json(const DenseOperator& rho) {
  nlohmann::json entries = nlohmann::json::array();
  const ComplexMatrix& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  return {{"format", "gmeseq-density"},
          {"version", 1},
          {"num_qubits", rho.num_qubits()},
          {"entries", std::move(entries)}};
}

DenseOperator density_from_json(const nlohmann::json& j) {
  if (j.value("format", std::string{}) != "gmeseq-density") {
    throw ValidationError("not a gmeseq-density document");
  }
  if (j.value("version", 0) != 1) {
    throw ValidationError("unsupported density format version");
  }
  const auto n = j.at("num_qubits").get<std::size_t>();
  const auto dim = static_cast<Eigen::Index>(checked_dimension(n));
  const auto& entries = j.at("entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw ValidationError("density entries must hold 4^N [re, im] pairs");
  }
  ComplexMatrix m(dim, dim);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c, ++k) {
      const auto& e = entries[k];
      m(r, c) = Complex{e.at(0).get<double>(), e.at(1).get<double>()};
    }
  }
  DenseOperator op(n, m, false);
  const bool herm = op.hermiticity_residual() <= kHermitianTolerance;
  return DenseOperator(n, std::move(m), herm);
}

namespace {

constexpr char kMagic[8] = {'G', 'M', 'E', 'S', 'Q', 'R', 'H', 'O'};

void put_u32(std::ostream& os, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(b, 4);
}

void put_f64(std::ostream& os, double d) {
  const auto v = std::bit_cast<std::uint64_t>(d);
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(b, 8);
}

std::uint64_t get_bytes(std::istream& is, int n) {
  unsigned char b[8] = {};
  if (!is.read(reinterpret_cast<char*>(b), n)) {
    throw ValidationError("truncated density file");
  }
  std::uint64_t v = 0;
  for (int i = n - 1; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

void write_density_binary(std::ostream& os, const DenseOperator& rho) {
  os.write(kMagic, sizeof kMagic);
  put_u32(os, 1);
  put_u32(os, static_cast<std::uint32_t>(rho.num_qubits()));
  const ComplexMatrix& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      put_f64(os, m(r, c).real());
      put_f64(os, m(r, c).imag());
    }
  }
}

DenseOperator read_density_binary(std::istream& is) {
  char magic[8];
  if (!is.read(magic, sizeof magic) ||
      std::memcmp(magic, kMagic, sizeof kMagic) != 0) {
    throw ValidationError("bad density file magic");
  }
  if (get_bytes(is, 4) != 1) {
    throw ValidationError("unsupported density format version");
  }
  const auto n = static_cast<std::size_t>(get_bytes(is, 4));
  const auto dim = static_cast<Eigen::Index>(checked_dimension(n));
  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double re = std::bit_cast<double>(get_bytes(is, 8));
      const double im = std::bit_cast<double>(get_bytes(is, 8));
      m(r, c) = Complex{re, im};
    }
  }
  DenseOperator op(n, m, false);
  const bool herm = op.hermiticity_residual() <= kHermitianTolerance;
  return DenseOperator(n, std::move(m), herm);
}

void save_density(const std::filesystem::path& path, const DenseOperator& rho) {
  if (path.extension() == ".json") {
    std::ofstream os(path);
    if (!os) throw Error("cannot open " + path.string() + " for writing");
    os << density_to_json(rho).dump() << '\n';
  } else {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open " + path.string() + " for writing");
    write_density_binary(os, rho);
  }
}

DenseOperator load_density(const std::filesystem::path& path) {
  if (path.extension() == ".json") {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path.string());
    return density_from_json(nlohmann::json::parse(is));
  }
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path.string());
  return read_density_binary(is);
}

}  // namespace gmeseq
