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

#ifndef TAUTLINE_EQUILIBRIA_H_
#define TAUTLINE_EQUILIBRIA_H_

#include <optional>
#include <utility>
#include <vector>

#include "tautline/plant.h"

namespace tautline {

// Hover configuration (r_bar, alpha_bar, theta_bar). At the vertical
// (alpha_bar = pi/2) only theta_bar = 0 is an equilibrium.
struct Setpoint {
  double r_bar = 1.0;
  double alpha_bar = kHalfPi;
  double theta_bar = 0.0;

  bool operator==(const Setpoint&) const = default;
};

struct EquilibriumData {
  double t_bar = 0.0;   // Equilibrium tension [N].
  double u1_bar = 0.0;  // Equilibrium thrust [N].
};

// Piecewise-linear chain of setpoints, traversed first to last. Holds at
// most two segments; consecutive segments share their joint.
struct PathSpec {
  std::vector<std::pair<Setpoint, Setpoint>> segments;
};

// The vertical is detected by exact comparison. Every construction in this
// library that targets the vertical assigns kHalfPi verbatim.
inline bool IsVertical(double alpha_bar) { return alpha_bar == kHalfPi; }

// (1 - w) a + w b, componentwise.
Setpoint Lerp(const Setpoint& a, const Setpoint& b, double w);

// Boundary attitude of the attainable set at elevation alpha_bar:
// atan(eps / (m g cos a) + tan a) - a, with the arctangent taken on the
// branch containing alpha_bar + theta_bar (shifted by pi beyond the
// vertical). Throws SingularError at the vertical and PreconditionError
// for eps < 0 or alpha_bar outside [0, pi].
double ThetaLimit(double alpha_bar, double eps, const PlantParams& p);

// Membership in the attainable set S_eps. All interval bounds are open;
// `margin` shrinks them further (0 reproduces the strict definition).
bool IsAttainable(const Setpoint& sp, double eps, const PlantParams& p,
                  double margin = 0.0);

// m g (tan(a + t) cos a - sin a). At the vertical the tension is free and
// `hover_tension` is returned; SingularError if it is not supplied.
double EquilibriumTension(const Setpoint& sp, const PlantParams& p,
                          std::optional<double> hover_tension = std::nullopt);

EquilibriumData Equilibrium(const Setpoint& sp, const PlantParams& p,
                            std::optional<double> hover_tension = std::nullopt);

// Inputs holding `sp` at rest: u1 = m g cos a / cos(a + t), u2 = 0,
// u3 = -rho T_bar. Throws SingularError when cos(a + t) = 0 away from the
// vertical.
ControlInputs EquilibriumInputs(
    const Setpoint& sp, const PlantParams& p,
    std::optional<double> hover_tension = std::nullopt);

// Linear path from `from` to `to`, routed through
// ((r_from + r_to) / 2, pi/2, 0) when the elevations lie on opposite sides
// of the vertical. Every segment is sampled at `samples_per_segment`
// interior points; PreconditionError if an endpoint is not attainable and
// InfeasibleError if a sampled point is not.
PathSpec InterpolatePath(const Setpoint& from, const Setpoint& to, double eps,
                         const PlantParams& p,
                         int samples_per_segment = 1000);

// True if every sampled interior point of every segment is attainable.
bool CertifyPath(const PathSpec& path, double eps, const PlantParams& p,
                 int samples_per_segment = 1000);

}  // namespace tautline

#endif  // TAUTLINE_EQUILIBRIA_H_
