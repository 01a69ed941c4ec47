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

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "gmeseq/dense.hpp"
#include "gmeseq/errors.hpp"
#include "gmeseq/states.hpp"
#include "gmeseq/witness.hpp"
#include "oracle.hpp"

namespace gmeseq {
namespace {

using testing::Mat;

TEST(GhzWitnessTest, ThreePartyCoefficients) {
  const auto w = build_ghz_witness(3);
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(w.coefficient_of("III"), Complex(1.5, 0.0));
  EXPECT_EQ(w.coefficient_of("XXX"), Complex(-1.0, 0.0));
  for (const char* l : {"ZZI", "IZZ", "ZIZ"}) {
    EXPECT_EQ(w.coefficient_of(l), Complex(-0.5, 0.0)) << l;
  }
  EXPECT_TRUE(w.is_hermitian());
}

TEST(GhzWitnessTest, TermCountAndDenseForm) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto w = build_ghz_witness(n);
    EXPECT_EQ(w.size(), (std::size_t{1} << (n - 1)) + 1) << "n=" << n;
    if (n > 6) continue;
    // 3I - 2 [ (I + X..X)/2 + prod (I + Z_m Z_{m+1})/2 ].
    std::vector<std::string> z_gens;
    for (std::size_t m = 0; m + 1 < n; ++m) {
      std::string s(n, 'I');
      s[m] = s[m + 1] = 'Z';
      z_gens.push_back(s);
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    const Mat id = Mat::Identity(dim, dim);
    const Mat expected =
        3.0 * id - (id + testing::pauli_kron(std::string(n, 'X'))) -
        2.0 * testing::projector_product(z_gens, n);
    EXPECT_LT((Mat(to_dense(w).matrix()) - expected).cwiseAbs().maxCoeff(),
              1e-13);
  }
}

TEST(GhzWitnessTest, ValuesOnReferenceStates) {
  ComplexVector zero = ComplexVector::Zero(8);
  zero(0) = 1.0;
  EXPECT_NEAR(expectation(DenseOperator::pure_state(3, zero),
                          build_ghz_witness(3)),
              0.0, 1e-15);
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto ghz = make_ghz(n);
    for (double l : {0.0, 0.3, 0.75, 1.0}) {
      EXPECT_NEAR(expectation(ghz, build_modified_ghz_witness(n, l)), -l,
                  1e-12);
    }
  }
}

TEST(GhzWitnessTest, SharpWitnessHasMinimumEigenvalueMinusOne) {
  for (std::size_t n = 3; n <= 5; ++n) {
    EXPECT_NEAR(min_eigenvalue(to_dense(build_ghz_witness(n))), -1.0, 1e-12);
  }
}

TEST(ClusterWitnessTest, ValuesOnReferenceStates) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto c = make_cluster(n);
    EXPECT_NEAR(expectation(c, build_cluster_witness(n)), -1.0, 1e-12);
    for (double l : {0.0, 0.4, 1.0}) {
      EXPECT_NEAR(expectation(c, build_modified_cluster_witness(n, l)), -l,
                  1e-12);
    }
  }
  ComplexVector plus = ComplexVector::Constant(16, 0.25);
  EXPECT_GE(expectation(DenseOperator::pure_state(4, plus),
                        build_cluster_witness(4)),
            -1e-12);
}

TEST(ClusterWitnessTest, GhzStateIsNotDetectedByClusterWitness) {
  for (std::size_t n = 3; n <= 6; ++n) {
    EXPECT_GT(expectation(make_ghz(n), build_cluster_witness(n)), -1.0 + 1e-6);
  }
}

TEST(ClusterWitnessTest, PartitionTable) {
  EXPECT_EQ(unsharp_partition(3), Parity::Odd);
  EXPECT_EQ(unsharp_partition(4), Parity::Even);
  EXPECT_EQ(unsharp_partition(5), Parity::Odd);
  EXPECT_EQ(unsharp_partition(6), Parity::Even);
  EXPECT_EQ(partition_members(5, Parity::Odd),
            (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(partition_members(5, Parity::Even),
            (std::vector<std::size_t>{1, 3}));
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto host = partition_members(n, unsharp_partition(n));
    EXPECT_EQ(host.back(), n - 1);
  }
}

TEST(DifferenceOperatorTest, GhzSpectrum) {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (double l : {0.0, 0.5, 1.0}) {
      const auto d = difference_operator(StabilizerFamily::GHZ, n, l);
      for (double e : eigen_spectrum(to_dense(d))) {
        const bool ok =
            std::abs(e) < 1e-9 || std::abs(e - 2.0 * (1.0 - l)) < 1e-9;
        EXPECT_TRUE(ok) << "n=" << n << " l=" << l << " e=" << e;
      }
    }
  }
}

TEST(DifferenceOperatorTest, ClusterSpectrumAndMultiplicities) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const double l = 0.25;
    const auto d = difference_operator(StabilizerFamily::Cluster, n, l);
    std::set<long> levels;
    for (double e : eigen_spectrum(to_dense(d))) {
      const double q = e / (1.0 - l);
      const double r = std::round(q);
      EXPECT_NEAR(q, r, 1e-9);
      EXPECT_GE(r, 0.0);
      EXPECT_LE(r, 3.0);
      levels.insert(static_cast<long>(r));
    }
    EXPECT_EQ(levels.size(), 4u) << "n=" << n;
  }
}

TEST(DifferenceOperatorTest, VanishesForSharpObserver) {
  for (auto family : {StabilizerFamily::GHZ, StabilizerFamily::Cluster}) {
    EXPECT_TRUE(difference_operator(family, 5, 1.0).empty());
  }
}

TEST(WitnessSpecTest, ValidationAndDispatch) {
  WitnessSpec spec{StabilizerFamily::Cluster, 4, 2, 0.3};
  EXPECT_EQ(build_witness(spec), build_modified_cluster_witness(4, 0.3));
  spec.lambda = 1.2;
  EXPECT_THROW(build_witness(spec), DomainError);
  spec.lambda = 0.3;
  spec.observer_index = 0;
  EXPECT_THROW(spec.validate(), DomainError);
  spec.observer_index = 1;
  spec.num_parties = 2;
  EXPECT_THROW(spec.validate(), CapacityError);
  EXPECT_THROW(build_ghz_witness(2), CapacityError);
}

TEST(WitnessSpecTest, NamesPrettyAndJson) {
  EXPECT_EQ(parse_stabilizer_family("ghz"), StabilizerFamily::GHZ);
  EXPECT_EQ(parse_stabilizer_family(to_string(StabilizerFamily::Cluster)),
            StabilizerFamily::Cluster);
  EXPECT_THROW(parse_stabilizer_family("w"), DomainError);

  const WitnessSpec spec{StabilizerFamily::GHZ, 3, 1, 1.0};
  const auto w = build_witness(spec);
  const auto text = pretty_print(spec, w);
  EXPECT_NE(text.find("5 terms"), std::string::npos);
  EXPECT_NE(text.find("XXX"), std::string::npos);
  const auto j = witness_to_json(spec, w);
  EXPECT_EQ(j["family"], "ghz");
  EXPECT_EQ(j["num_parties"], 3);
  EXPECT_EQ(operator_expr_from_json(j["terms"]), w);
}

// The sharp witness must be non-negative on every product state.
TEST(WitnessPropertyTest, NonNegativeOnRandomBiseparableStates) {
  std::mt19937_64 rng(17);
  for (auto family : {StabilizerFamily::GHZ, StabilizerFamily::Cluster}) {
    const auto w = to_dense(build_witness(family, 4, 0.6));
    for (const auto& side : all_bipartitions(4)) {
      for (int s = 0; s < 50; ++s) {
        const auto psi = sample_biseparable_vector(4, side, rng);
        const double v =
            (psi.adjoint() * w.matrix() * psi)(0, 0).real();
        EXPECT_GE(v, -1e-10);
      }
    }
  }
}

}  // namespace
}  // namespace gmeseq
