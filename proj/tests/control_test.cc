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

#include "tautline/control.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "tautline/analysis.h"
#include "tautline/config.h"
#include "tautline/equilibria.h"
#include "tautline/errors.h"
#include "tautline/scenario.h"
#include "tautline/sim.h"

namespace tautline {
namespace {

const PlantParams kPlant;
const GainConfig kGains;
const Setpoint kReference{0.5, 9.0 * kPi / 10.0, -kPi / 20.0};

FullState AtRest(const Setpoint& sp) {
  return FullState{sp.r_bar, 0.0, sp.alpha_bar, 0.0, sp.theta_bar, 0.0};
}

TEST(SaturateTest, Examples) {
  EXPECT_EQ(Saturate(3.0, 2.0), 2.0);
  EXPECT_EQ(Saturate(-3.0, 2.0), -2.0);
  EXPECT_EQ(Saturate(1.0, 2.0), 1.0);
}

TEST(ModeTest, RoundTripsNames) {
  for (ScenarioMode m : {ScenarioMode::kIdealAttitude,
                         ScenarioMode::kInnerNoGovernor,
                         ScenarioMode::kInnerWithGovernor}) {
    EXPECT_EQ(ParseScenarioMode(ToString(m)), m);
  }
  EXPECT_THROW(ParseScenarioMode("fast"), ValidationError);
}

TEST(GroundControlTest, ZeroTensionAtRest) {
  EXPECT_EQ(GroundControl(AtRest(kReference), 0.5, 0.0, kGains, kPlant), 0.0);
}

TEST(GroundControlTest, EquilibriumTorque) {
  const double t_bar = EquilibriumTension(kReference, kPlant);
  EXPECT_NEAR(GroundControl(AtRest(kReference), 0.5, t_bar, kGains, kPlant),
              -kPlant.rho * t_bar, 1e-15);
}

TEST(GroundControlTest, SaturatedAccelerationIsExact) {
  FullState x = AtRest(kReference);
  x.r = 3.0;
  EXPECT_EQ(RadialAcceleration(x, 0.5, kGains), -kGains.lambda1);
  x.r = 0.1;
  x.r_dot = 0.05;
  EXPECT_EQ(RadialAcceleration(x, 0.5, kGains), kGains.lambda1);
  // The winch torque realises the saturated value through the plant.
  const double tension = 7.0;
  x.r = 3.0;
  x.r_dot = 0.0;
  ControlInputs u;
  u.u3 = GroundControl(x, 0.5, tension, kGains, kPlant);
  EXPECT_NEAR(TautRhs(x, u, tension, kPlant).r_ddot, -kGains.lambda1, 1e-14);
}

TEST(OuterLoopTest, EquilibriumFixedPoint) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Setpoint sp = SampleAttainable(rng, kGains.eps, kPlant);
    const OuterLoopOutput out = OuterLoop(AtRest(sp), sp, 0.0, kGains, kPlant);
    EXPECT_NEAR(out.u1, EquilibriumInputs(sp, kPlant).u1, 1e-9);
    EXPECT_NEAR(WrapAngle(out.theta_c - sp.theta_bar), 0.0, 1e-12);
  }
}

TEST(OuterLoopTest, VerticalHover) {
  const Setpoint sp{1.0, kHalfPi, 0.0};
  const OuterLoopOutput out = OuterLoop(AtRest(sp), sp, 0.0, kGains, kPlant);
  const double t_bar = kGains.HoverTension();
  EXPECT_NEAR(out.diagnostics.u_alpha, 0.0, 1e-12);
  EXPECT_NEAR(out.theta_c, 0.0, 1e-12);
  EXPECT_NEAR(out.u1, t_bar + kPlant.m * kPlant.g, 1e-12);
}

TEST(OuterLoopTest, TensionChannelPositiveAndThrustReconstructs) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const Setpoint sp = SampleAttainable(rng, kGains.eps, kPlant);
    const FullState x{0.5 + 0.5 * (u(rng) + 1.0), u(rng),    1.5 + 1.5 * u(rng),
                      2.0 * u(rng),               u(rng),    u(rng)};
    const double r_ddot = kGains.lambda1 * u(rng);
    const OuterLoopOutput out = OuterLoop(x, sp, r_ddot, kGains, kPlant);
    const ControlDiagnostics& d = out.diagnostics;
    EXPECT_GT(d.u_t, 0.0);
    EXPECT_NEAR(out.u1 * std::cos(x.alpha + out.theta_c), d.u_alpha,
                1e-10 * std::max(1.0, out.u1));
    EXPECT_NEAR(out.u1 * std::sin(x.alpha + out.theta_c), d.u_t,
                1e-10 * std::max(1.0, out.u1));
  }
}

TEST(OuterLoopTest, RejectsSaturationAboveTensionMargin) {
  const Setpoint sp{1.0, kPi / 4.0, 1e-3};
  ASSERT_TRUE(IsAttainable(sp, 0.0, kPlant));
  EXPECT_THROW(OuterLoop(AtRest(sp), sp, 0.0, kGains, kPlant),
               PreconditionError);
}

TEST(InnerLoopTest, ZeroError) {
  FullState x;
  x.theta = 0.4;
  EXPECT_EQ(InnerLoop(x, 0.4, kGains, kPlant), 0.0);
}

TEST(InnerLoopTest, ProportionalTorque) {
  FullState x;
  x.theta = 0.1;
  EXPECT_NEAR(InnerLoop(x, 0.0, kGains, kPlant), -0.3, 1e-15);
}

TEST(InnerLoopTest, StepResponseSettles) {
  std::array<double, 2> y{0.0, 0.0};
  const double theta_c = 0.3;
  double peak = 0.0;
  auto f = [&](double, const std::array<double, 2>& s) {
    FullState x;
    x.theta = s[0];
    x.theta_dot = s[1];
    return std::array<double, 2>{s[1],
                                 InnerLoop(x, theta_c, kGains, kPlant) /
                                     kPlant.j_uav};
  };
  for (int k = 0; k < 5000; ++k) {
    y = Rk4Step(f, k * 1e-3, y, 1e-3);
    peak = std::max(peak, y[0]);
  }
  EXPECT_GT(peak, theta_c);  // Underdamped overshoot.
  EXPECT_NEAR(y[0], theta_c, 1e-9);
}

TEST(ClosedLoopRhsTest, EquilibriumIsAFixedPoint) {
  for (ScenarioMode m : {ScenarioMode::kIdealAttitude,
                         ScenarioMode::kInnerNoGovernor}) {
    const ClosedLoopEval e =
        ClosedLoopRhs(AtRest(kReference), kReference, kGains, kPlant, m);
    for (double v : e.derivative.ToArray()) EXPECT_NEAR(v, 0.0, 1e-12);
    EXPECT_NEAR(e.tension, EquilibriumTension(kReference, kPlant), 1e-12);
  }
}

SimConfig ReferenceSim(ScenarioMode mode, double t_final) {
  SimConfig cfg = ConfigBundle::DefaultSimConfig();
  cfg.mode = mode;
  cfg.t_final = t_final;
  return cfg;
}

TEST(ClosedLoopPropertyTest, IdealAttitudeTensionLaw) {
  const TrajectoryLog log = RunScenario(
      ReferenceSim(ScenarioMode::kIdealAttitude, 10.0), kGains, kPlant);
  const double t_bar = EquilibriumTension(kReference, kPlant);
  double worst = 0.0;
  for (const LogRow& row : log.rows) {
    const FullState& x = row.state;
    const double law = t_bar + kPlant.m * x.r * x.alpha_dot * x.alpha_dot;
    worst = std::max(worst, std::abs(row.tension - law));
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(ClosedLoopPropertyTest, RadialAccelerationStaysSaturated) {
  for (ScenarioMode m : {ScenarioMode::kIdealAttitude,
                         ScenarioMode::kInnerNoGovernor}) {
    const TrajectoryLog log = RunScenario(ReferenceSim(m, 10.0), kGains, kPlant);
    for (const LogRow& row : log.rows) {
      ASSERT_LE(std::abs(row.r_ddot), kGains.lambda1 + 1e-12) << row.t;
    }
  }
}

TEST(ClosedLoopPropertyTest, PredictedTensionMatchesPlant) {
  const TrajectoryLog log = RunScenario(
      ReferenceSim(ScenarioMode::kInnerNoGovernor, 5.0), kGains, kPlant);
  for (std::size_t i = 0; i < log.rows.size(); i += 10) {
    const ClosedLoopEval e = ClosedLoopRhs(log.rows[i].state, kReference,
                                           kGains, kPlant,
                                           ScenarioMode::kInnerNoGovernor);
    ASSERT_NEAR(e.diagnostics.t_predicted, e.tension,
                1e-9 * std::max(1.0, std::abs(e.tension)));
  }
}

// Integrates the elevation through the error model
//   alpha'' = -(kP e + kD alpha') cos(theta~) - Delta alpha' + Gamma
// and compares with the direct plant equation.
std::vector<double> ElevationViaErrorModel(double sign_of_delta,
                                           double t_final) {
  const double t_bar = EquilibriumTension(kReference, kPlant);
  auto field = [&](const FullState& s) {
    const ClosedLoopEval e = ClosedLoopRhs(s, kReference, kGains, kPlant,
                                           ScenarioMode::kInnerNoGovernor);
    const double theta_tilde = s.theta - e.diagnostics.theta_c;
    const ErrorTerms t =
        ComputeErrorTerms(s, kReference, t_bar, theta_tilde, e.diagnostics.u_t,
                          e.diagnostics.u_alpha, kPlant);
    StateDerivative d = e.derivative;
    d.alpha_ddot = -(kGains.k_pa * (s.alpha - kReference.alpha_bar) +
                     kGains.k_da * s.alpha_dot) *
                       std::cos(theta_tilde) -
                   sign_of_delta * t.delta * s.alpha_dot + t.gamma;
    return d;
  };
  FullState x = ConfigBundle::DefaultSimConfig().initial;
  std::vector<double> alpha{x.alpha};
  const int steps = static_cast<int>(std::lround(t_final / 1e-3));
  for (int k = 0; k < steps; ++k) {
    x = Rk4Step(field, x, 1e-3);
    alpha.push_back(x.alpha);
  }
  return alpha;
}

TEST(ClosedLoopPropertyTest, ErrorDynamicsMatchPlant) {
  const TrajectoryLog log = RunScenario(
      ReferenceSim(ScenarioMode::kInnerNoGovernor, 2.0), kGains, kPlant);
  const std::vector<double> model = ElevationViaErrorModel(1.0, 2.0);
  ASSERT_EQ(model.size(), log.rows.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    worst = std::max(worst, std::abs(model[i] - log.rows[i].state.alpha));
  }
  EXPECT_LT(worst, 1e-6);

  // The damping perturbation enters with a negative sign; flipping it
  // produces a visibly different trajectory.
  const std::vector<double> flipped = ElevationViaErrorModel(-1.0, 2.0);
  double gap = 0.0;
  for (std::size_t i = 0; i < flipped.size(); ++i) {
    gap = std::max(gap, std::abs(flipped[i] - log.rows[i].state.alpha));
  }
  EXPECT_GT(gap, 1e-4);
}

}  // namespace
}  // namespace tautline
