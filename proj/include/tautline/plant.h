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

#ifndef TAUTLINE_PLANT_H_
#define TAUTLINE_PLANT_H_

#include <array>

namespace tautline {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

// Physical constants of the UAV / winch system. Defaults are the planar
// test vehicle used throughout the examples and tests.
struct PlantParams {
  double m = 2.0;          // UAV mass [kg].
  double j_uav = 0.015;    // UAV pitch inertia [kg m^2].
  double i_winch = 0.01;   // Winch inertia [kg m^2].
  double rho = 0.1;        // Winch radius [m].
  double g = 9.81;         // Gravity [m/s^2].
  // Minimum tension that still guarantees a taut cable [N]. Zero for an
  // ideal inextensible, massless cable.
  double t_min = 0.0;

  // Throws ValidationError naming the offending field.
  void Validate() const;

  bool operator==(const PlantParams&) const = default;
};

// Polar position of the UAV relative to the ground anchor and its pitch.
// Under the taut-cable assumption the unwound cable length equals r.
struct FullState {
  double r = 1.0;          // [m]
  double r_dot = 0.0;      // [m/s]
  double alpha = 0.0;      // Elevation from the horizontal [rad].
  double alpha_dot = 0.0;  // [rad/s]
  double theta = 0.0;      // Pitch relative to the horizon [rad].
  double theta_dot = 0.0;  // [rad/s]

  std::array<double, 6> ToArray() const {
    return {r, r_dot, alpha, alpha_dot, theta, theta_dot};
  }
  static FullState FromArray(const std::array<double, 6>& x) {
    return {x[0], x[1], x[2], x[3], x[4], x[5]};
  }

  bool operator==(const FullState&) const = default;
};

struct ControlInputs {
  double u1 = 0.0;  // Total thrust [N], non-negative.
  double u2 = 0.0;  // Body torque [N m].
  double u3 = 0.0;  // Winch torque [N m].
};

// Time derivative of a FullState; the rate entries mirror the input state.
struct StateDerivative {
  double r_dot = 0.0;
  double r_ddot = 0.0;
  double alpha_dot = 0.0;
  double alpha_ddot = 0.0;
  double theta_dot = 0.0;
  double theta_ddot = 0.0;

  std::array<double, 6> ToArray() const {
    return {r_dot, r_ddot, alpha_dot, alpha_ddot, theta_dot, theta_ddot};
  }
};

// Cable tension implied by the radial force balance,
//   T = m r alpha_dot^2 - m g sin(alpha) + u1 sin(alpha + theta) - m r_ddot.
// The value is signed: T <= 0 means the taut-cable hypothesis is violated.
double Tension(const FullState& x, double u1, double r_ddot,
               const PlantParams& p);

// Taut-cable equations of motion for a given tension. Throws
// PreconditionError if x.r <= 0.
StateDerivative TautRhs(const FullState& x, const ControlInputs& u,
                        double tension, const PlantParams& p);

struct CoupledSolution {
  StateDerivative derivative;
  double tension = 0.0;
};

// Open-loop evaluation: the radial acceleration depends on T and T depends
// on the radial acceleration. Both are linear, so the pair is solved in
// closed form.
CoupledSolution SolveOpenLoop(const FullState& x, const ControlInputs& u,
                              const PlantParams& p);

// Wraps an angle to (-pi, pi].
double WrapAngle(double angle);

}  // namespace tautline

#endif  // TAUTLINE_PLANT_H_
