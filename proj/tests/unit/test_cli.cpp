// Copyright 2026 The neurocap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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
#include "json.hpp"

#include "cli.hpp"
#include "neurocap/io.hpp"

namespace neurocap {
namespace {

const std::filesystem::path kData = NEUROCAP_DATA_DIR;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "neurocap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "neurocap_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(Cli, BscCapacity) {
  const auto r = run({"it", "bsc", "--p", "0.1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NEAR(r.json()["capacity_bits"].get<double>(), 0.531, 5e-4);
  EXPECT_EQ(r.json()["provenance"]["command"], "it bsc");
}

TEST(Cli, EntropyOfShippedSource) {
  const auto r = run({"it", "entropy", "--pmf", (kData / "source256.json").string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NEAR(r.json()["entropy_bits"].get<double>(), 5.72, 5e-3);
}

TEST(Cli, SelfDivergenceIsZero) {
  const auto f = (kData / "source256.json").string();
  const auto r = run({"it", "kl", "--p", f, "--q", f});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.json()["kl_bits"].get<double>(), 0.0);
}

TEST(Cli, ValidationFailures) {
  EXPECT_EQ(run({"it", "bsc", "--p", "1.5"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"it", "entropy", "--pmf", "/nonexistent.json"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"capacity", "temporal", "--kappa", "3", "--a0", "0.003", "--b0", "0.003"}).code,
            cli::kExitValidation);
  EXPECT_EQ(run({"capacity", "rate", "--kappa", "1", "--bogus", "1"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"capacity", "sideways", "--kappa", "1"}).code, cli::kExitValidation);
  EXPECT_EQ(run({}).code, cli::kExitValidation);
}

TEST(Cli, ConvergenceFailureStillWritesArtifact) {
  const auto out = scratch("uncertified.json");
  const auto r = run({"capacity", "rate", "--kappa", "2", "--max-rounds", "1", "--out", out.string()});
  EXPECT_EQ(r.code, cli::kExitNoConvergence);
  const auto doc = nlohmann::json::parse(read_text_file(out));
  EXPECT_FALSE(doc["certified"].get<bool>());
  const auto t = run({"tuning", "--solution", out.string()});
  EXPECT_EQ(t.code, cli::kExitValidation);
}

TEST(Cli, CapacityIsDeterministic) {
  const auto a = run({"capacity", "rate", "--kappa", "1"});
  const auto b = run({"capacity", "rate", "--kappa", "1", "--threads", "1"});
  ASSERT_EQ(a.code, cli::kExitOk) << a.err;
  const auto ja = a.json();
  EXPECT_TRUE(ja["certified"].get<bool>());
  EXPECT_NEAR(ja["capacity_per_use_bits"].get<double>(), 1.524, 1e-3);
  auto strip = [](nlohmann::json j) {
    j.erase("provenance");
    return j.dump();
  };
  EXPECT_EQ(strip(ja), strip(b.json()));
  EXPECT_EQ(run({"capacity", "rate", "--kappa", "1"}).out, a.out);
}

TEST(Cli, ExplicitFlagsOverrideConfig) {
  const auto cfg = scratch("cfg.json");
  write_text_file(cfg, R"({"kappa": 1, "a0": 0.01, "b0": 30, "delta": 0.3})");
  const auto r = run({"capacity", "rate", "--config", cfg.string(), "--delta", "0.1", "--b0", "0.03",
                      "--a0", "0.003"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["delta"].get<double>(), 0.1);
  EXPECT_EQ(j["kappa"].get<double>(), 1.0);
  EXPECT_NEAR(j["capacity_per_use_bits"].get<double>(), 1.524, 1e-3);
}

TEST(Cli, PipelineFromSolutionFile) {
  const auto sol = scratch("two_point.json");
  // A hand-written certified two-point solution.
  write_text_file(sol, R"({
    "certified": true, "coding": "temporal", "kappa": 3, "a0": 0.003, "b0": 0.03,
    "method": "particle", "points": [0.001, 0.01], "weights": [0.5, 0.5],
    "capacity_per_use_bits": 0.8756, "capacity_bps": 50,
    "bracket_bits": {"lower": 0.87, "upper": 0.88},
    "certificate": {"max_violation": 0, "at_support_gap": 0, "passed": true, "slack_tol": 1e-4,
                    "capacity_ref": 0.8756, "probe_n": 2001}})");
  const auto t = run({"tuning", "--solution", sol.string(), "--stimulus", "uniform:0,1"});
  ASSERT_EQ(t.code, cli::kExitOk) << t.err;
  const auto bp = t.json()["breakpoints"];
  ASSERT_EQ(bp.size(), 3u);
  EXPECT_NEAR(bp[1].get<double>(), 0.5, 1e-12);

  const auto d = run({"decode", "--solution", sol.string()});
  ASSERT_EQ(d.code, cli::kExitOk) << d.err;
  EXPECT_EQ(d.json()["boundaries"].size(), 1u);

  const auto m = run({"mc-check", "--solution", sol.string(), "--samples", "20000", "--seed", "4"});
  ASSERT_EQ(m.code, cli::kExitOk) << m.err;
  EXPECT_TRUE(m.json()["within_3se"].get<bool>());
  EXPECT_EQ(m.json()["provenance"]["seed"].get<int>(), 4);
}

TEST(Cli, WritesKktCurve) {
  const auto csv = scratch("kkt.csv");
  const auto r = run({"capacity", "temporal", "--kappa", "1", "--kkt-csv", csv.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const std::string text = read_text_file(csv);
  EXPECT_NE(text.find("theta,info_density_bits\n"), std::string::npos);
}

}  // namespace
}  // namespace neurocap
