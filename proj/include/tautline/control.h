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

#ifndef TAUTLINE_CONTROL_H_
#define TAUTLINE_CONTROL_H_

#include <string>
#include <string_view>

#include "tautline/equilibria.h"
#include "tautline/gains.h"
#include "tautline/plant.h"

namespace tautline {

enum class ScenarioMode {
  kIdealAttitude,     // theta is imposed as theta_c instantaneously.
  kInnerNoGovernor,   // PD attitude loop, reference applied directly.
  kInnerWithGovernor  // PD attitude loop, reference issued by a governor.
};

std::string_view ToString(ScenarioMode mode);
// Accepts "ideal-attitude", "inner-no-rg" and "inner-with-rg".
ScenarioMode ParseScenarioMode(std::string_view text);

struct ControlDiagnostics {
  double u_t = 0.0;          // Thrust component along the cable [N].
  double u_alpha = 0.0;      // Thrust component across the cable [N].
  double theta_c = 0.0;      // Commanded attitude [rad].
  double t_predicted = 0.0;  // Tension predicted from the attitude error [N].
};

// sign(x) min(|x|, level).
double Saturate(double x, double level);

// Closed-loop radial acceleration produced by the nested-saturation winch
// law: -sat_l1(k_dr r_dot + sat_l2(k_pr (r - r_bar))).
double RadialAcceleration(const FullState& x, double r_bar,
                          const GainConfig& g);

// Winch torque. The -rho T feed-forward cancels the tension in the radial
// dynamics, so |r_ddot| <= lambda1 regardless of T.
double GroundControl(const FullState& x, double r_bar, double tension,
                     const GainConfig& g, const PlantParams& p);

struct OuterLoopOutput {
  double u1 = 0.0;
  double theta_c = 0.0;
  ControlDiagnostics diagnostics;
};

// Thrust-vectoring elevation loop. Splits the thrust into a cable component
// u_t = T_bar + m g sin(alpha) + m r_ddot and a tangential component
// u_alpha = m (2 r_dot alpha_dot + g cos(alpha))
//           - m r (k_pa (alpha - alpha_bar) + k_da alpha_dot),
// and returns u1 = |(u_t, u_alpha)| and
// theta_c = pi/2 - alpha - atan2(u_alpha, u_t).
//
// Throws PreconditionError if lambda1 >= T_bar / m, in which case u_t may
// vanish and theta_c is undefined.
OuterLoopOutput OuterLoop(const FullState& x, const Setpoint& sp,
                          double r_ddot, const GainConfig& g,
                          const PlantParams& p);

// PD attitude loop, u2 = -J (k_pt (theta - theta_c) + k_dt theta_dot).
// The damping acts on the measured rate, not on the error rate.
double InnerLoop(const FullState& x, double theta_c, const GainConfig& g,
                 const PlantParams& p);

struct ClosedLoopEval {
  StateDerivative derivative;
  ControlInputs inputs;
  double tension = 0.0;
  double r_ddot = 0.0;
  ControlDiagnostics diagnostics;
};

// Full closed-loop vector field. In kIdealAttitude mode theta is replaced
// by theta_c before evaluating the plant, u2 is zero and the attitude
// entries of the derivative are zero.
ClosedLoopEval ClosedLoopRhs(const FullState& x, const Setpoint& sp,
                             const GainConfig& g, const PlantParams& p,
                             ScenarioMode mode);

}  // namespace tautline

#endif  // TAUTLINE_CONTROL_H_
