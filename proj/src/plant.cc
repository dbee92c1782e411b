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

#include "tautline/plant.h"

#include <cmath>

#include "tautline/errors.h"

namespace tautline {

void PlantParams::Validate() const {
  if (!(m > 0.0)) throw ValidationError("m", "mass must be > 0");
  if (!(j_uav > 0.0)) throw ValidationError("j_uav", "inertia must be > 0");
  if (!(i_winch > 0.0)) {
    throw ValidationError("i_winch", "winch inertia must be > 0");
  }
  if (!(rho > 0.0)) throw ValidationError("rho", "winch radius must be > 0");
  if (!(g > 0.0)) throw ValidationError("g", "gravity must be > 0");
  if (!(t_min >= 0.0)) throw ValidationError("t_min", "must be >= 0");
}

double Tension(const FullState& x, double u1, double r_ddot,
               const PlantParams& p) {
  return p.m * x.r * x.alpha_dot * x.alpha_dot - p.m * p.g * std::sin(x.alpha) +
         u1 * std::sin(x.alpha + x.theta) - p.m * r_ddot;
}

StateDerivative TautRhs(const FullState& x, const ControlInputs& u,
                        double tension, const PlantParams& p) {
  if (!(x.r > 0.0)) {
    throw PreconditionError("taut-cable dynamics require r > 0");
  }
  StateDerivative d;
  d.r_dot = x.r_dot;
  d.r_ddot = p.rho / p.i_winch * u.u3 + p.rho * p.rho / p.i_winch * tension;
  d.alpha_dot = x.alpha_dot;
  d.alpha_ddot = -(2.0 * x.r_dot * x.alpha_dot + p.g * std::cos(x.alpha)) / x.r +
                 u.u1 * std::cos(x.alpha + x.theta) / (p.m * x.r);
  d.theta_dot = x.theta_dot;
  d.theta_ddot = u.u2 / p.j_uav;
  return d;
}

CoupledSolution SolveOpenLoop(const FullState& x, const ControlInputs& u,
                              const PlantParams& p) {
  // T = a - m r_ddot, r_ddot = (rho u3 + rho^2 T) / I.
  const double a = Tension(x, u.u1, 0.0, p);
  const double r_ddot =
      (p.rho * u.u3 + p.rho * p.rho * a) / (p.i_winch + p.m * p.rho * p.rho);
  CoupledSolution out;
  out.tension = a - p.m * r_ddot;
  out.derivative = TautRhs(x, u, out.tension, p);
  return out;
}

double WrapAngle(double angle) {
  double wrapped = std::remainder(angle, 2.0 * kPi);
  if (wrapped <= -kPi) wrapped += 2.0 * kPi;
  return wrapped;
}

}  // namespace tautline
