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

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "gmeseq/dense.hpp"
#include "gmeseq/errors.hpp"
#include "gmeseq_cli/commands.hpp"

namespace gmeseq::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "gmeseq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::filesystem::path tmp_path(const std::string& name) {
  return std::filesystem::path(GMESEQ_TEST_TMPDIR) / name;
}

TEST(ParserTest, PlanAndNumberLists) {
  const auto p = parse_plan("l1=0.05,eps=0.1,max=12");
  EXPECT_DOUBLE_EQ(p.lambda_1, 0.05);
  EXPECT_DOUBLE_EQ(p.epsilon, 0.1);
  EXPECT_EQ(p.max_k, 12u);
  EXPECT_DOUBLE_EQ(parse_plan("l1=0.2").epsilon, kDefaultEpsilon);
  EXPECT_THROW(parse_plan("eps=0.1"), Error);
  EXPECT_THROW(parse_plan("l1=0.1,foo=2"), Error);
  EXPECT_EQ(parse_number_list("0.5, 0.25,1"),
            (std::vector<double>{0.5, 0.25, 1.0}));
  EXPECT_THROW(parse_number_list("0.5,,x"), Error);
  EXPECT_EQ(to_string(Mode::Both), "both");
}

TEST(RunCommandTest, PlannedGhzScheduleAgreesAcrossModes) {
  const auto r = invoke({"run", "--state", "ghz", "--N", "4", "--plan",
                         "l1=0.05,eps=0.05", "--mode", "both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_GE(ls.size(), 3u);
  EXPECT_EQ(ls[0].rfind("# gmeseq run v1", 0), 0u);
  EXPECT_EQ(ls[1], "k,lambda,witness_analytic,witness_dense,detected,margin");
  for (std::size_t i = 2; i < ls.size(); ++i) {
    EXPECT_NE(ls[i].find(",1,"), std::string::npos) << ls[i];
  }
}

TEST(RunCommandTest, SharpPairEndsAtZero) {
  ExperimentConfig config;
  config.lambdas = {1.0, 1.0};
  config.mode = Mode::Both;
  const auto result = cmd_run(config);
  ASSERT_EQ(result.rows.size(), 2u);
  EXPECT_TRUE(result.rows[0].detected);
  EXPECT_EQ(*result.rows[1].analytic, 0.0);
  EXPECT_FALSE(result.rows[1].detected);
  EXPECT_TRUE(result.consistent());

  config.mode = Mode::Dense;
  EXPECT_FALSE(cmd_run(config).rows[1].detected);
}

TEST(RunCommandTest, ClusterSingleObserver) {
  ExperimentConfig config;
  config.state = StateFamily::cluster();
  config.num_parties = 5;
  config.lambdas = {0.3};
  config.mode = Mode::Both;
  const auto result = cmd_run(config);
  ASSERT_EQ(result.rows.size(), 1u);
  EXPECT_NEAR(*result.rows[0].analytic, -0.3, 1e-15);
  EXPECT_NEAR(*result.rows[0].dense, -0.3, 1e-12);
  EXPECT_NEAR(result.rows[0].margin, 0.3, 1e-12);
}

TEST(RunCommandTest, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"run", "--state", "mixed:p1=0.8,p2=0.1,p3=0.1,alpha=0.4",
                                      "--N", "3", "--lambdas", "0.9,0.4,0.7",
                                      "--mode", "both", "--seed", "3"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed=3"), std::string::npos);
}

TEST(RunCommandTest, JsonOutput) {
  const auto r = invoke({"--format", "json", "run", "--lambdas", "0.5,0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["format"], "gmeseq-run");
  EXPECT_EQ(j["rows"].size(), 2u);
}

TEST(RunCommandTest, ConfigErrorsAreUsageErrors) {
  EXPECT_EQ(invoke({"run", "--N", "2", "--lambdas", "0.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--lambdas", "1.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--state", "w", "--lambdas", "0.5"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"run", "--lambdas", "0.5", "--plan", "l1=0.1"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"run", "--mode", "dense", "--N", "12", "--lambdas", "0.5"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  ExperimentConfig config;
  EXPECT_THROW(config.validate(), Error);
}

TEST(SweepCommandTest, DetectionsGrowAsStartShrinks) {
  const std::vector<double> grid{0.5, 0.1, 0.01, 0.001};
  const auto rows = cmd_sweep(0.05, grid);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].max_detections, rows[i - 1].max_detections);
  }
  const auto r = invoke({"sweep", "--eps", "0.05", "--grid", "0.5,0.1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).size(), 4u);
}

TEST(PlanCommandTest, CsvAndJson) {
  const auto r = invoke({"plan", "--n", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(r.out.empty());
  const auto j = nlohmann::json::parse(invoke({"--format", "json", "plan", "--n", "3"}).out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_NEAR(j["lambda_1"].get<double>(), min_sharpness_for(3, 0.05).lambda_1,
              1e-15);
  EXPECT_EQ(invoke({"plan", "--n", "5000"}).code, kExitCheckFailed);
  EXPECT_EQ(invoke({"plan"}).code, kExitUsage);
}

TEST(VerifyCommandTest, SeededSuitesPass) {
  for (const char* suite : {"psd", "recursion", "biseparable"}) {
    const auto r = invoke({"verify", suite, "--seed", "7", "--trials", "5",
                           "--samples", "50"});
    EXPECT_EQ(r.code, kExitOk) << suite << ": " << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
  EXPECT_EQ(invoke({"verify", "nosuch"}).code, kExitUsage);
}

TEST(VerifyCommandTest, ExportedStateFeedsChannelSuite) {
  for (const char* name : {"rho.json", "rho.bin"}) {
    const auto path = tmp_path(name);
    const auto r = invoke({"run", "--N", "3", "--lambdas", "0.4,0.6",
                           "--mode", "dense", "--export-rho", path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto rho = load_density(path);
    EXPECT_EQ(rho.num_qubits(), 3u);
    EXPECT_TRUE(is_density_matrix(rho));
    const auto v = invoke({"verify", "channel", "--trials", "3", "--rho",
                           path.string()});
    EXPECT_EQ(v.code, kExitOk) << v.out << v.err;
  }
  EXPECT_EQ(invoke({"verify", "channel", "--rho", "/nonexistent/rho"}).code,
            kExitUsage);
}

TEST(OutputFileTest, WritesToOutPath) {
  const auto path = tmp_path("sweep.csv");
  const auto r = invoke({"--out", path.string(), "sweep"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_GT(std::filesystem::file_size(path), 0u);
}

}  // namespace
}  // namespace gmeseq::cli
