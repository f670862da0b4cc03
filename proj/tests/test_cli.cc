// Copyright 2026 The qtrotter Authors
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
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "qtrotter/cli/commands.h"
#include "qtrotter/cli/config.h"
#include "qtrotter/cli/io.h"

namespace qtrotter::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("qtrotter_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_config(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "qtrotter");
    std::vector<char*> argv;
    for (std::string& a : args) argv.push_back(a.data());
    return main_entry(static_cast<int>(argv.size()), argv.data());
  }

  fs::path dir_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::stringstream s(line);
    std::string cell;
    while (std::getline(s, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

TEST(Config, DefaultsAndOverrides) {
  const ExperimentConfig c = parse_config(R"({
    "mode": "trotter", "angles_deg": {"theta1": 20, "theta2": 30, "theta3": 25.7},
    "order": 2, "permutation": "R-dph-damp", "intrinsic_us": {"t1": null, "t2": 100},
    "initial_state": "+i", "shots": 500})");
  EXPECT_EQ(c.mode, Mode::kTrotter);
  EXPECT_NEAR(c.angles.theta3, 25.7 * M_PI / 180, 1e-15);
  EXPECT_EQ(c.angles.tau0, 3.56);
  EXPECT_EQ(c.order, 2);
  EXPECT_EQ(c.permutation, parse_permutation("R-dph-damp"));
  EXPECT_TRUE(std::isinf(c.t1_0));
  EXPECT_EQ(c.t2_0, 100.0);
  EXPECT_EQ(c.initial_state, InitialState::kPlusI);
  EXPECT_EQ(c.shots, 500u);
  EXPECT_EQ(c.n_steps, 13u);
  EXPECT_NEAR(c.rates().gamma_phi, 0.01 + angle_to_rates(c.angles).gamma_phi, 1e-15);
}

TEST(Config, RejectsInvalidInput) {
  EXPECT_THROW(parse_config(R"({"bogus": 1})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"angles_deg": {"theta4": 1}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"angles_deg": {"theta1": 90}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"mode": "warp"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"order": 3})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"permutation": "dph-dph-R"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"intrinsic_us": {"t1": 10, "t2": 30}})"), ConfigError);
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config(R"({"mitigate": {"c": [2, 3]}})"), ConfigError);
}

TEST(Io, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(1.0 / 0.0), "inf");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(std::stod(format_double(M_PI)), M_PI);
}

TEST_F(CliTest, ExitCodes) {
  const fs::path bad = write_config("bad.json", R"({"mode": "evolve", "nope": 1})");
  EXPECT_EQ(run({"--config", bad.string(), "--out", dir_.string()}), 1);
  const fs::path ev = write_config("ev.json", R"({"mode": "evolve"})");
  EXPECT_EQ(run({"--config", ev.string(), "--out", dir_.string(), "fit"}), 1);
  EXPECT_EQ(run({"--out", dir_.string()}), 1);
  EXPECT_EQ(run({"--no-such-flag"}), 1);
  EXPECT_EQ(run({"--config", ev.string(), "--out", (dir_ / "ok").string()}), 0);
  const fs::path noisy = write_config("noisy.json", R"({"mode": "trotter", "backend": "dilation+noise",
    "angles_deg": {"theta1": 20, "theta2": 30, "theta3": 25.7}, "noise": {"p_grape": 0.01}})");
  EXPECT_EQ(run({"--config", noisy.string(), "--out", (dir_ / "noisy").string()}), 0);
}

TEST_F(CliTest, EvolveZeroRatesIsConstant) {
  const fs::path cfg = write_config("c.json", R"({"mode": "evolve", "initial_state": "1"})");
  ASSERT_EQ(run({"--config", cfg.string(), "--out", dir_.string()}), 0);
  const auto rows = read_csv(dir_ / "trace.csv");
  ASSERT_EQ(rows.size(), 15u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"step", "time_us", "sx", "sy", "sz"}));
  for (std::size_t j = 1; j < rows.size(); ++j) {
    EXPECT_EQ(rows[j][0], std::to_string(j - 1));
    EXPECT_NEAR(std::stod(rows[j][2]), 0.0, 1e-12);
    EXPECT_NEAR(std::stod(rows[j][3]), 0.0, 1e-12);
    EXPECT_NEAR(std::stod(rows[j][4]), -1.0, 1e-12);
  }
  EXPECT_TRUE(fs::exists(dir_ / "summary.json"));
}

TEST_F(CliTest, TraceBlochNorm) {
  const fs::path cfg = write_config("c.json", R"({"mode": "trotter", "initial_state": "+",
    "angles_deg": {"theta1": 20, "theta2": 40, "theta3": 51.4}, "backend": "dilation"})");
  ASSERT_EQ(run({"--config", cfg.string(), "--out", dir_.string()}), 0);
  for (const char* name : {"trace.csv", "target.csv"}) {
    const auto rows = read_csv(dir_ / name);
    for (std::size_t j = 1; j < rows.size(); ++j) {
      const double x = std::stod(rows[j][2]), y = std::stod(rows[j][3]), z = std::stod(rows[j][4]);
      EXPECT_LE(std::sqrt(x * x + y * y + z * z), 1.0 + 1e-8);
    }
  }
  const auto j = nlohmann::json::parse(slurp(dir_ / "summary.json"));
  EXPECT_GT(j["accuracy"].get<double>(), 0.0);
}

TEST_F(CliTest, DilateVerifyPasses) {
  ASSERT_EQ(run({"--out", dir_.string(), "dilate-verify"}), 0);
  const auto rows = read_csv(dir_ / "dilation.csv");
  EXPECT_EQ(rows.size(), 1u + 17u * 17u);
}

TEST_F(CliTest, ConvergeSecondOrderSlope) {
  const fs::path cfg = write_config("c.json", R"({"mode": "converge", "order": 2,
    "permutation": "R-dph-damp", "angles_deg": {"theta1": 20, "theta2": 30, "theta3": 25.7},
    "initial_state": "+"})");
  ASSERT_EQ(run({"--config", cfg.string(), "--out", dir_.string()}), 0);
  const auto j = nlohmann::json::parse(slurp(dir_ / "summary.json"));
  EXPECT_NEAR(j["slope"].get<double>(), -2.0, 0.3);
}

TEST_F(CliTest, FitAndMitigate) {
  const fs::path fit = write_config("fit.json", R"({"mode": "fit",
    "angles_deg": {"theta1": 20, "theta2": 20, "theta3": 51.4}, "order": 2,
    "permutation": "R-dph-damp", "shots": 1000, "seed": 3})");
  ASSERT_EQ(run({"--config", fit.string(), "--out", (dir_ / "fit").string()}), 0);
  const auto jf = nlohmann::json::parse(slurp(dir_ / "fit" / "summary.json"));
  EXPECT_TRUE(jf.contains("fit"));

  std::ofstream(dir_ / "ref.csv") << "c,value\n1,35.56\n2.13,29.63\n4.93,22.00\n9.96,14.15\n";
  const fs::path mit = write_config("mit.json", R"({"mode": "mitigate", "mitigate": {"csv": ")" +
                                                   (dir_ / "ref.csv").string() + R"("}})");
  ASSERT_EQ(run({"--config", mit.string(), "--out", (dir_ / "mit").string()}), 0);
  const auto rows = read_csv(dir_ / "mit" / "extrapolation.csv");
  ASSERT_GE(rows.size(), 3u);
  EXPECT_NEAR(std::stod(rows[2][1]), 40.81, 0.01);
}

TEST_F(CliTest, OutputsAreDeterministic) {
  const fs::path cfg = write_config("c.json", R"({"mode": "fit", "shots": 400, "seed": 9,
    "angles_deg": {"theta1": 20, "theta2": 20, "theta3": 51.4}})");
  ASSERT_EQ(run({"--config", cfg.string(), "--out", (dir_ / "a").string(), "--workers", "1"}), 0);
  ASSERT_EQ(run({"--config", cfg.string(), "--out", (dir_ / "b").string(), "--workers", "3"}), 0);
  for (const char* f : {"tomography.csv", "summary.json"}) {
    EXPECT_EQ(slurp(dir_ / "a" / f), slurp(dir_ / "b" / f)) << f;
  }
  ASSERT_EQ(run({"--config", cfg.string(), "--out", (dir_ / "c").string(), "--seed", "10"}), 0);
  EXPECT_NE(slurp(dir_ / "a" / "tomography.csv"), slurp(dir_ / "c" / "tomography.csv"));
}

TEST_F(CliTest, ReproduceBundles) {
  for (const char* fig : {"fig2", "fig3", "fig4"}) {
    ASSERT_EQ(run({"--out", dir_.string(), "reproduce", fig}), 0) << fig;
    EXPECT_TRUE(fs::exists(dir_ / fig / "summary.json")) << fig;
  }
  EXPECT_TRUE(fs::exists(dir_ / "fig4" / "accuracy.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "fig4" / "evolution.csv"));
  EXPECT_EQ(run({"--out", dir_.string(), "reproduce", "fig9"}), 1);
}

}  // namespace
}  // namespace qtrotter::cli
