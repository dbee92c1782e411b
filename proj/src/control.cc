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

#include "tautline/analysis.h"
#include "tautline/errors.h"

namespace tautline {

std::string_view ToString(ScenarioMode mode) {
  switch (mode) {
    case ScenarioMode::kIdealAttitude:
      return "ideal-attitude";
    case ScenarioMode::kInnerNoGovernor:
      return "inner-no-rg";
    case ScenarioMode::kInnerWithGovernor:
      return "inner-with-rg";
  }
  return "unknown";
}

ScenarioMode ParseScenarioMode(std::string_view text) {
  if (text == "ideal-attitude") return ScenarioMode::kIdealAttitude;
  if (text == "inner-no-rg") return ScenarioMode::kInnerNoGovernor;
  if (text == "inner-with-rg") return ScenarioMode::kInnerWithGovernor;
  throw ValidationError("mode", "expected ideal-attitude, inner-no-rg or "
                                "inner-with-rg, got '" +
                                    std::string(text) + "'");
}

double Saturate(double x, double level) {
  return std::copysign(std::min(std::abs(x), level), x);
}

double RadialAcceleration(const FullState& x, double r_bar,
                          const GainConfig& g) {
  const double inner = Saturate(g.k_pr * (x.r - r_bar), g.lambda2);
  return -Saturate(g.k_dr * x.r_dot + inner, g.lambda1);
}

double GroundControl(const FullState& x, double r_bar, double tension,
                     const GainConfig& g, const PlantParams& p) {
  return p.i_winch / p.rho * RadialAcceleration(x, r_bar, g) -
         p.rho * tension;
}

OuterLoopOutput OuterLoop(const FullState& x, const Setpoint& sp,
                          double r_ddot, const GainConfig& g,
                          const PlantParams& p) {
  const double t_bar = EquilibriumTension(sp, p, g.HoverTension());
  if (!(g.lambda1 < t_bar / p.m)) {
    throw PreconditionError(
        "outer loop requires lambda1 < T_bar / m at the applied setpoint");
  }
  OuterLoopOutput out;
  ControlDiagnostics& d = out.diagnostics;
  d.u_t = t_bar + p.m * p.g * std::sin(x.alpha) + p.m * r_ddot;
  d.u_alpha =
      p.m * (2.0 * x.r_dot * x.alpha_dot + p.g * std::cos(x.alpha)) -
      p.m * x.r *
          (g.k_pa * (x.alpha - sp.alpha_bar) + g.k_da * x.alpha_dot);
  out.u1 = std::hypot(d.u_t, d.u_alpha);
  out.theta_c = kHalfPi - x.alpha - std::atan2(d.u_alpha, d.u_t);
  d.theta_c = out.theta_c;
  const double theta_tilde = x.theta - out.theta_c;
  d.t_predicted =
      ComputeErrorTerms(x, sp, t_bar, theta_tilde, d.u_t, d.u_alpha, p)
          .t_predicted;
  return out;
}

double InnerLoop(const FullState& x, double theta_c, const GainConfig& g,
                 const PlantParams& p) {
  return -p.j_uav * (g.k_pt * (x.theta - theta_c) + g.k_dt * x.theta_dot);
}

ClosedLoopEval ClosedLoopRhs(const FullState& x, const Setpoint& sp,
                             const GainConfig& g, const PlantParams& p,
                             ScenarioMode mode) {
  ClosedLoopEval out;
  out.r_ddot = RadialAcceleration(x, sp.r_bar, g);
  FullState applied = x;
  OuterLoopOutput outer = OuterLoop(applied, sp, out.r_ddot, g, p);
  const bool ideal = mode == ScenarioMode::kIdealAttitude;
  if (ideal) {
    applied.theta = outer.theta_c;
    // With theta = theta_c the attitude error vanishes.
    outer = OuterLoop(applied, sp, out.r_ddot, g, p);
  }
  out.diagnostics = outer.diagnostics;
  out.inputs.u1 = outer.u1;
  out.inputs.u2 = ideal ? 0.0 : InnerLoop(applied, outer.theta_c, g, p);
  out.tension = Tension(applied, out.inputs.u1, out.r_ddot, p);
  out.inputs.u3 = GroundControl(applied, sp.r_bar, out.tension, g, p);
  out.derivative = TautRhs(applied, out.inputs, out.tension, p);
  // The winch law cancels the tension exactly; use the analytic value so the
  // saturation bound is not perturbed by rounding in rho^2 T / I.
  out.derivative.r_ddot = out.r_ddot;
  if (ideal) {
    out.derivative.theta_dot = 0.0;
    out.derivative.theta_ddot = 0.0;
  }
  return out;
}

}  // namespace tautline
