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

#include "gmeseq/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "gmeseq/analytic.hpp"
#include "gmeseq/dense.hpp"
#include "gmeseq/errors.hpp"
#include "gmeseq/states.hpp"
#include "gmeseq/witness.hpp"

namespace gmeseq {

namespace {

CheckResult make_check(std::string name, double residual, double tolerance,
                       bool passed, std::string detail = {}) {
  return {std::move(name), passed, residual, tolerance, std::move(detail)};
}

CheckResult upper_bound_check(std::string name, double residual,
                              double tolerance, std::string detail = {}) {
  return make_check(std::move(name), residual, tolerance,
                    residual < tolerance, std::move(detail));
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Pauli::Y:
      m << 0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0;
      break;
    case Pauli::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      m.setIdentity();
  }
  return m;
}

// A (x) sigma with sigma on the last qubit.
DenseOperator with_last_qubit(const ComplexMatrix& a, std::size_t num_qubits,
                              Pauli p) {
  const Eigen::Matrix2cd s = pauli_matrix(p);
  ComplexMatrix out(a.rows() * 2, a.cols() * 2);
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block<2, 2>(2 * r, 2 * c) = a(r, c) * s;
    }
  }
  return DenseOperator(num_qubits, std::move(out), true);
}

ComplexMatrix random_hermitian(std::size_t num_qubits, std::mt19937_64& rng) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex{re, im};
    }
  }
  return 0.5 * (g + g.adjoint());
}

std::vector<double> random_schedule(std::size_t length, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> l(length);
  for (auto& v : l) v = unit(rng);
  return l;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"max_residual", c.max_residual},
                   {"tolerance", c.tolerance},
                   {"detail", c.detail}});
  }
  return {{"suite", suite}, {"seed", seed}, {"passed", passed()},
          {"checks", std::move(arr)}};
}

SuiteReport verify_channel(const VerifyOptions& options) {
  SuiteReport report{"channel", options.seed, {}};
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double trace_err = 0.0, closed_err = 0.0, unital_err = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  std::vector<DenseOperator> inputs;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t t = 0; t < options.trials; ++t) {
      inputs.push_back(random_density_matrix(n, rng));
    }
  }
  if (options.extra_state) {
    validate_density_matrix(*options.extra_state, true);
    inputs.push_back(*options.extra_state);
  }
  for (const auto& rho : inputs) {
    const double lambda = unit(rng);
    const std::size_t target = rho.num_qubits() - 1;
    const DenseOperator out = luders_update(rho, lambda, target);
    const DenseOperator closed = luders_update_closed_form(rho, lambda, target);
    trace_err = std::max(trace_err, std::abs(out.trace() - rho.trace()));
    closed_err = std::max(closed_err, out.max_abs_diff(closed));
    min_eig = std::min(min_eig, min_eigenvalue(out));
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    const double scale = 1.0 / static_cast<double>(std::size_t{1} << n);
    const ComplexMatrix mixed = scale * DenseOperator::identity(n).matrix();
    const DenseOperator rho(n, mixed, true);
    const DenseOperator out = luders_update(rho, unit(rng), n - 1);
    unital_err = std::max(unital_err, out.max_abs_diff(rho));
  }
  const std::string count = std::to_string(inputs.size()) + " inputs";
  report.checks.push_back(
      upper_bound_check("trace preserved", trace_err, 1e-12, count));
  report.checks.push_back(make_check("positivity preserved", -min_eig, 1e-10,
                                     min_eig >= kPositivityTolerance,
                                     "min eigenvalue " + fmt(min_eig)));
  report.checks.push_back(upper_bound_check(
      "Kraus sum equals three-term mixture", closed_err, 1e-12, count));
  report.checks.push_back(
      upper_bound_check("maximally mixed state is fixed", unital_err, 1e-12));
  return report;
}

SuiteReport verify_recursion(const VerifyOptions& options) {
  SuiteReport report{"recursion", options.seed, {}};
  std::mt19937_64 rng(options.seed);
  constexpr std::size_t kMaxObserver = 6;
  double z_err = 0.0, x_err = 0.0, printed_z_err = 0.0;
  double y_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t t = 0; t < options.trials; ++t) {
      const DenseOperator rho1 = random_density_matrix(n, rng);
      const ComplexMatrix a = random_hermitian(n - 1, rng);
      const auto obs_z = with_last_qubit(a, n, Pauli::Z);
      const auto obs_x = with_last_qubit(a, n, Pauli::X);
      const auto obs_y = with_last_qubit(a, n, Pauli::Y);
      const double z1 = expectation(rho1, obs_z);
      const double x1 = expectation(rho1, obs_x);
      const double y1 = expectation(rho1, obs_y);
      const auto lambdas = random_schedule(kMaxObserver, rng);
      DenseOperator rho = rho1;
      for (std::size_t k = 1; k <= kMaxObserver; ++k) {
        if (k > 1) rho = luders_update(rho, lambdas[k - 2], n - 1);
        const auto decay = correlator_decay(std::span(lambdas).first(k - 1));
        // Same product with the upper limit at k instead of k - 1.
        const double printed =
            decay.z_factor * (1.0 - z_step_deficit(lambdas[k - 1]));
        const double zk = expectation(rho, obs_z);
        z_err = std::max(z_err, std::abs(zk - decay.z_factor * z1));
        printed_z_err = std::max(printed_z_err, std::abs(zk - printed * z1));
        x_err = std::max(x_err,
                         std::abs(expectation(rho, obs_x) - decay.x_factor * x1));
        y_excess = std::max(y_excess, std::abs(expectation(rho, obs_y)) -
                                          decay.x_factor * std::abs(y1));
      }
    }
  }
  const bool resolved = z_err < 1e-10 && printed_z_err > 1e-6;
  report.checks.push_back(make_check(
      "z correlator decays by prod_{j=1}^{k-1}", z_err, 1e-10, z_err < 1e-10,
      "resolved product index: " + std::string(resolved ? "k-1" : "unresolved") +
          "; upper limit k deviates by up to " + fmt(printed_z_err)));
  report.checks.push_back(upper_bound_check(
      "x correlator decays by 2^-(k-1)", x_err, 1e-10));
  report.checks.push_back(make_check(
      "y correlator decays at least as fast as x", y_excess, 1e-12,
      y_excess <= 1e-12, "max(|<A Y>_k| - 2^-(k-1) |<A Y>_1|) = " + fmt(y_excess)));
  return report;
}

SuiteReport verify_psd(const VerifyOptions& options) {
  SuiteReport report{"psd", options.seed, {}};
  for (auto family : {StabilizerFamily::GHZ, StabilizerFamily::Cluster}) {
    double worst = 0.0;
    double min_eig = std::numeric_limits<double>::infinity();
    for (std::size_t n = 3; n <= 6; ++n) {
      for (int step = 0; step <= 10; ++step) {
        const double lambda = step / 10.0;
        const auto spectrum =
            eigen_spectrum(to_dense(difference_operator(family, n, lambda)));
        const double unit = 1.0 - lambda;
        std::vector<double> allowed{0.0, 2.0 * unit};
        if (family == StabilizerFamily::Cluster) allowed = {0.0, unit, 2 * unit, 3 * unit};
        for (double e : spectrum) {
          double d = std::numeric_limits<double>::infinity();
          for (double a : allowed) d = std::min(d, std::abs(e - a));
          worst = std::max(worst, d);
        }
        min_eig = std::min(min_eig, spectrum.front());
      }
    }
    const std::string name = std::string(to_string(family));
    report.checks.push_back(upper_bound_check(
        name + " difference spectrum in allowed set", worst, 1e-9,
        family == StabilizerFamily::GHZ ? "{0, 2(1-l)}"
                                        : "{0, 1-l, 2(1-l), 3(1-l)}"));
    report.checks.push_back(make_check(name + " difference operator PSD",
                                       -min_eig, 1e-10, min_eig >= -1e-10,
                                       "min eigenvalue " + fmt(min_eig)));
  }
  return report;
}

SuiteReport verify_biseparable(const VerifyOptions& options) {
  SuiteReport report{"biseparable", options.seed, {}};
  std::mt19937_64 rng(options.seed);
  const double grid[] = {0.0, 0.3, 0.7, 1.0};
  for (auto family : {StabilizerFamily::GHZ, StabilizerFamily::Cluster}) {
    double min_value = std::numeric_limits<double>::infinity();
    std::size_t count = 0;
    for (std::size_t n = 3; n <= 4; ++n) {
      std::vector<Eigen::MatrixXcd> witnesses;
      for (double l : grid) {
        witnesses.push_back(to_dense(build_witness(family, n, l)).matrix());
      }
      for (const auto& side : all_bipartitions(n)) {
        for (std::size_t s = 0; s < options.samples; ++s) {
          const ComplexVector psi = sample_biseparable_vector(n, side, rng);
          for (const auto& w : witnesses) {
            min_value = std::min(min_value, psi.dot(w * psi).real());
          }
          ++count;
        }
      }
    }
    report.checks.push_back(make_check(
        std::string(to_string(family)) + " witnesses non-negative on product states",
        -min_value, 1e-10, min_value >= -1e-10,
        std::to_string(count) + " samples, min " + fmt(min_value)));
  }
  return report;
}

SuiteReport verify_oracle(const VerifyOptions& options) {
  SuiteReport report{"oracle", options.seed, {}};
  std::mt19937_64 rng(options.seed);
  constexpr std::size_t kMaxObserver = 6;

  auto dense_values = [](const DenseOperator& rho1, StabilizerFamily family,
                         std::span<const double> lambdas) {
    const std::size_t n = rho1.num_qubits();
    std::vector<double> out;
    DenseOperator rho = rho1;
    for (std::size_t k = 1; k <= lambdas.size(); ++k) {
      if (k > 1) rho = luders_update(rho, lambdas[k - 2], n - 1);
      out.push_back(expectation(rho, build_witness(family, n, lambdas[k - 1])));
    }
    return out;
  };

  for (auto family : {StabilizerFamily::GHZ, StabilizerFamily::Cluster}) {
    const StateFamily state = family == StabilizerFamily::GHZ
                                  ? StateFamily::ghz()
                                  : StateFamily::cluster();
    double err = 0.0;
    for (std::size_t n = 3; n <= 6; ++n) {
      const DenseOperator rho1 = make_state(state, n);
      for (std::size_t t = 0; t < options.trials; ++t) {
        const auto lambdas = random_schedule(kMaxObserver, rng);
        const auto dense = dense_values(rho1, family, lambdas);
        for (std::size_t k = 1; k <= kMaxObserver; ++k) {
          err = std::max(err, std::abs(dense[k - 1] -
                                       witness_value(state, k, lambdas)));
        }
      }
    }
    report.checks.push_back(upper_bound_check(
        std::string(to_string(family)) + " closed form matches dense", err,
        1e-9, "N = 3..6, k <= 6"));
  }

  double mixed_err = 0.0;
  std::size_t sign_mismatch = 0;
  for (double p1 : {0.5, 0.8, 1.0}) {
    for (double alpha : {0.1, 0.25, 0.5}) {
      const double rest = 0.5 * (1.0 - p1);
      const StateFamily state = StateFamily::mixed_ghz(p1, rest, rest, alpha);
      for (std::size_t n = 3; n <= 4; ++n) {
        const DenseOperator rho1 = make_state(state, n);
        for (std::size_t t = 0; t < std::max<std::size_t>(1, options.trials / 10); ++t) {
          const auto lambdas = random_schedule(4, rng);
          const auto dense = dense_values(rho1, StabilizerFamily::GHZ, lambdas);
          for (std::size_t k = 1; k <= lambdas.size(); ++k) {
            const double a = witness_value(state, k, lambdas);
            mixed_err = std::max(mixed_err, std::abs(dense[k - 1] - a));
            if ((a < 0.0) != (dense[k - 1] < 0.0)) ++sign_mismatch;
          }
        }
      }
    }
  }
  report.checks.push_back(upper_bound_check(
      "mixed GHZ closed form matches dense", mixed_err, 1e-9,
      std::to_string(sign_mismatch) + " sign disagreements"));
  report.checks.back().passed = report.checks.back().passed && sign_mismatch == 0;

  double spread = 0.0;
  const auto lambdas = random_schedule(kMaxObserver, rng);
  for (auto family : {StabilizerFamily::GHZ, StabilizerFamily::Cluster}) {
    const StateFamily state = family == StabilizerFamily::GHZ
                                  ? StateFamily::ghz()
                                  : StateFamily::cluster();
    const auto ref = dense_values(make_state(state, 3), family, lambdas);
    for (std::size_t n = 4; n <= 6; ++n) {
      const auto vals = dense_values(make_state(state, n), family, lambdas);
      for (std::size_t k = 0; k < vals.size(); ++k) {
        spread = std::max(spread, std::abs(vals[k] - ref[k]));
      }
    }
  }
  report.checks.push_back(upper_bound_check(
      "witness values independent of N", spread, 1e-9, "N = 3..6"));

  double standard = 0.0;
  double printed = std::numeric_limits<double>::infinity();
  for (std::size_t n = 3; n <= 8; ++n) {
    const ComplexVector psi = cluster_vector(n);
    for (const auto& s : stabilizer_generators(StabilizerFamily::Cluster, n)) {
      standard = std::max(standard, stabilizer_residual(s, psi));
    }
    for (std::size_t m = 1; m + 1 < n; ++m) {
      std::vector<Pauli> l(n, Pauli::I);
      l[m - 1] = Pauli::Z;
      l[m] = Pauli::X;
      l[m + 1] = Pauli::X;
      printed = std::min(printed, stabilizer_residual(PauliString(l), psi));
    }
  }
  report.checks.push_back(make_check(
      "cluster generators Z X Z stabilize the Ising-gate state", standard,
      1e-12, standard < 1e-12,
      "Z X X middle form misses by at least " + fmt(printed)));
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"channel", "recursion", "psd",
                                                 "biseparable", "oracle"};
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "channel") return verify_channel(options);
  if (name == "recursion") return verify_recursion(options);
  if (name == "psd") return verify_psd(options);
  if (name == "biseparable") return verify_biseparable(options);
  if (name == "oracle") return verify_oracle(options);
  throw DomainError("unknown verification suite '" + std::string(name) + "'");
}

}  // namespace gmeseq
