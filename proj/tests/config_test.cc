// Copyright 2026 The Tautline Authors
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

#include "tautline/config.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "tautline/errors.h"
#include "tautline/report.h"
#include "tautline/sim.h"

namespace tautline {
namespace {

const std::string kShippedConfig =
    std::string(TAUTLINE_SOURCE_DIR) + "/configs/reference_scenario.cfg";

TEST(ParseConfigTest, ShippedDefaults) {
  const ConfigBundle b = LoadConfig(kShippedConfig);
  EXPECT_EQ(b.plant.m, 2.0);
  EXPECT_EQ(b.plant.j_uav, 0.015);
  EXPECT_EQ(b.plant.rho, 0.1);
  EXPECT_EQ(b.gains.k_pr, 30.0);
  EXPECT_EQ(b.gains.k_pa, 30.0);
  EXPECT_EQ(b.gains.k_pt, 200.0);
  EXPECT_EQ(b.gains.zeta, 0.9);
  EXPECT_EQ(b.sim.mode, ScenarioMode::kInnerWithGovernor);
  EXPECT_FALSE(b.gamma_out.has_value());
  EXPECT_NEAR(b.sim.reference.alpha_bar, 9.0 * kPi / 10.0, 1e-15);
  EXPECT_NEAR(b.sim.initial.theta, kPi / 10.0, 1e-15);
}

TEST(ParseConfigTest, EmptyDocumentGivesDefaults) {
  const ConfigBundle b = ParseConfig("");
  EXPECT_EQ(b, ConfigBundle{});
  EXPECT_EQ(b.plant, PlantParams{});
  EXPECT_EQ(b.gains, GainConfig{});
  EXPECT_EQ(b.sim.reference, (Setpoint{0.5, 9.0 * kPi / 10.0, -kPi / 20.0}));
}

TEST(ParseConfigTest, RejectsOverdampedZeta) {
  try {
    ParseConfig("zeta = 1.2\n");
    FAIL() << "accepted zeta = 1.2";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.key(), "zeta");
  }
}

TEST(ParseConfigTest, RejectsInconsistentRadialDamping) {
  try {
    ParseConfig("k_pr = 30\nk_dr = 5\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.key(), "k_dr");
  }
}

TEST(ParseConfigTest, DerivesDampingGains) {
  const ConfigBundle b = ParseConfig("k_pt = 400\nzeta = 0.5\nk_pr = 16\n");
  EXPECT_DOUBLE_EQ(b.gains.k_dt, 20.0);
  EXPECT_DOUBLE_EQ(b.gains.k_dr, 8.0);
}

TEST(ParseConfigTest, ReportsOffendingLine) {
  try {
    ParseConfig("# comment\nm = 2\nthis line is broken\n");
    FAIL();
  } catch (const ConfigParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(ParseConfig("mass = 2\n"), ConfigParseError);
  EXPECT_THROW(ParseConfig("m = 2\nm = 3\n"), ConfigParseError);
  EXPECT_THROW(ParseConfig("m = two\n"), ConfigParseError);
}

TEST(ParseConfigTest, RejectsUnattainableReference) {
  try {
    ParseConfig("alpha_bar = pi/4\ntheta_bar = -0.1\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.key(), "theta_bar");
  }
}

TEST(ParseAngleTest, Forms) {
  EXPECT_DOUBLE_EQ(*ParseAngle("pi"), kPi);
  EXPECT_DOUBLE_EQ(*ParseAngle("-pi"), -kPi);
  EXPECT_DOUBLE_EQ(*ParseAngle("pi/8"), kPi / 8.0);
  EXPECT_DOUBLE_EQ(*ParseAngle("-pi/20"), -kPi / 20.0);
  EXPECT_DOUBLE_EQ(*ParseAngle("pi*9/10"), kPi * 9.0 / 10.0);
  EXPECT_DOUBLE_EQ(*ParseAngle("pi*0.5"), kPi * 0.5);
  EXPECT_DOUBLE_EQ(*ParseAngle("0.25"), 0.25);
  EXPECT_FALSE(ParseAngle("pi/0").has_value());
  EXPECT_FALSE(ParseAngle("tau").has_value());
}

TEST(EmitConfigTest, RoundTrip) {
  ConfigBundle b = ParseConfig(
      "k_pt = 300\nzeta = 0.7\neps = 1.5\ngamma_out = 4.25\n"
      "u3_bound = 3\nhover_tension = 6\nmode = inner-no-rg\n"
      "alpha0 = pi/3\ntheta0 = 0.2\nr_bar = 0.8\nalpha_bar = pi/2\n"
      "theta_bar = 0\n");
  EXPECT_EQ(ParseConfig(EmitConfig(b)), b);
  const ConfigBundle defaults;
  EXPECT_EQ(ParseConfig(EmitConfig(defaults)), defaults);
  const ConfigBundle shipped = LoadConfig(kShippedConfig);
  EXPECT_EQ(ParseConfig(EmitConfig(shipped)), shipped);
}

TrajectoryLog ShortRun(ScenarioMode mode, double t_final) {
  SimConfig cfg = ConfigBundle::DefaultSimConfig();
  cfg.mode = mode;
  cfg.t_final = t_final;
  return RunScenario(cfg, GainConfig{}, PlantParams{});
}

int CountLines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

TEST(EmitLogTest, OneRowLog) {
  TrajectoryLog log;
  log.rows.push_back(LogRow{});
  const std::string text = FormatLog(log);
  EXPECT_EQ(CountLines(text), 2);
  EXPECT_EQ(text.substr(0, text.find('\n')), kLogHeader);
}

TEST(EmitLogTest, ViolationComment) {
  const TrajectoryLog log = ShortRun(ScenarioMode::kInnerNoGovernor, 3.0);
  ASSERT_TRUE(log.events.tension_violation.has_value());
  char expected[64];
  std::snprintf(expected, sizeof(expected), "# tension_violation t=%.4f\n",
                *log.events.tension_violation);
  EXPECT_NE(FormatLog(log).find(expected), std::string::npos);
}

TEST(EmitLogTest, RoundTripAtNineDigits) {
  const TrajectoryLog log = ShortRun(ScenarioMode::kInnerNoGovernor, 1.0);
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "tautline_roundtrip.csv";
  EmitLog(log, path.string());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  std::filesystem::remove(path);
  const TrajectoryLog back = ParseLogCsv(text.str());
  ASSERT_EQ(back.rows.size(), log.rows.size());
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(a));
  };
  for (std::size_t i = 0; i < log.rows.size(); ++i) {
    const auto a = log.rows[i].state.ToArray();
    const auto b = back.rows[i].state.ToArray();
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == 4) continue;  // theta is wrapped on output.
      ASSERT_TRUE(close(a[j], b[j])) << i << "," << j;
    }
    ASSERT_TRUE(close(WrapAngle(log.rows[i].state.theta),
                      back.rows[i].state.theta));
    ASSERT_TRUE(close(log.rows[i].tension, back.rows[i].tension));
    ASSERT_TRUE(close(log.rows[i].inputs.u1, back.rows[i].inputs.u1));
    ASSERT_EQ(log.rows[i].waypoint, back.rows[i].waypoint);
  }
  EXPECT_EQ(back.events.tension_violation, log.events.tension_violation);
  // Re-emitting the parsed log reproduces the text exactly.
  EXPECT_EQ(FormatLog(back), text.str());
}

TEST(ParseLogCsvTest, RejectsMalformed) {
  EXPECT_THROW(ParseLogCsv(""), ConfigParseError);
  EXPECT_THROW(ParseLogCsv("a,b\n"), ConfigParseError);
  EXPECT_THROW(ParseLogCsv(std::string(kLogHeader) + "\n1,2\n"),
               ConfigParseError);
}

TEST(AttainableSetTest, ZeroMarginLowerEnvelope) {
  for (const AttainableRow& row : AttainableSetSample(0.0, 181, PlantParams{})) {
    if (row.alpha_bar < kHalfPi) EXPECT_NEAR(row.theta_min, 0.0, 1e-14);
  }
}

TEST(AttainableSetTest, VerticalRowCollapses) {
  int vertical = 0;
  for (const AttainableRow& row : AttainableSetSample(2.0, 100, PlantParams{})) {
    if (IsVertical(row.alpha_bar)) {
      ++vertical;
      EXPECT_EQ(row.theta_min, 0.0);
      EXPECT_EQ(row.theta_max, 0.0);
    }
  }
  EXPECT_EQ(vertical, 1);
}

TEST(AttainableSetTest, LargerMarginNestsInside) {
  const PlantParams p;
  const auto outer = AttainableSetSample(1.0, 181, p);
  for (double eps : {2.0, 5.0, 10.0}) {
    const auto inner = AttainableSetSample(eps, 181, p);
    ASSERT_EQ(inner.size(), outer.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (IsVertical(inner[i].alpha_bar)) continue;
      if (inner[i].theta_min >= inner[i].theta_max) continue;  // Empty row.
      EXPECT_GE(inner[i].theta_min, outer[i].theta_min);
      EXPECT_LE(inner[i].theta_max, outer[i].theta_max);
    }
  }
  EXPECT_THROW(AttainableSetSample(1.0, 1, p), PreconditionError);
}

}  // namespace
}  // namespace tautline
