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

#ifndef TAUTLINE_SIM_H_
#define TAUTLINE_SIM_H_

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tautline/analysis.h"
#include "tautline/control.h"
#include "tautline/equilibria.h"
#include "tautline/errors.h"
#include "tautline/gains.h"
#include "tautline/governor.h"
#include "tautline/plant.h"

namespace tautline {

// One classical fourth-order Runge-Kutta step of x' = f(t, x). Throws
// DivergenceError if the result is not finite.
template <std::size_t N, class F>
std::array<double, N> Rk4Step(F&& f, double t, const std::array<double, N>& x,
                              double dt) {
  if (!(dt > 0.0)) throw PreconditionError("dt must be > 0");
  auto axpy = [](const std::array<double, N>& a, double h,
                 const std::array<double, N>& b) {
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + h * b[i];
    return out;
  };
  const std::array<double, N> k1 = f(t, x);
  const std::array<double, N> k2 = f(t + 0.5 * dt, axpy(x, 0.5 * dt, k1));
  const std::array<double, N> k3 = f(t + 0.5 * dt, axpy(x, 0.5 * dt, k2));
  const std::array<double, N> k4 = f(t + dt, axpy(x, dt, k3));
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!std::isfinite(out[i])) {
      throw DivergenceError("integrator produced a non-finite state at t = " +
                            std::to_string(t + dt));
    }
  }
  return out;
}

using StateField = std::function<StateDerivative(const FullState&)>;

FullState Rk4Step(const StateField& f, const FullState& x, double dt);

struct SimConfig {
  double dt = 1e-3;
  double t_final = 10.0;
  ScenarioMode mode = ScenarioMode::kIdealAttitude;
  FullState initial;
  Setpoint reference;
  double convergence_tol = 1e-3;
  double convergence_dwell = 0.5;  // [s]

  // Throws ValidationError naming the offending field.
  void Validate() const;

  bool operator==(const SimConfig&) const = default;
};

struct LogRow {
  double t = 0.0;
  FullState state;
  ControlInputs inputs;
  double tension = 0.0;
  double theta_c = 0.0;
  int waypoint = -1;     // Active waypoint index; -1 without a governor.
  double r_ddot = 0.0;   // Kept in memory only, not serialized.
};

struct TrajectoryEvents {
  std::optional<double> tension_violation;  // First T <= 0 crossing [s].
  std::vector<double> switch_times;
  std::optional<double> convergence;  // Start of the dwell window [s].
};

struct TrajectoryLog {
  double dt = 0.0;
  std::vector<LogRow> rows;
  TrajectoryEvents events;
};

// Integrates the closed loop from cfg.initial with fixed-step RK4, logging
// one row per step including t = 0. In ideal-attitude mode only
// (r, r_dot, alpha, alpha_dot) are integrated; theta is logged as theta_c
// and theta_dot as its backward difference. Requires `plan` in
// inner-with-rg mode. Tension violations are recorded as events.
TrajectoryLog RunScenario(const SimConfig& cfg, const GainConfig& g,
                          const PlantParams& p,
                          const WaypointPlan* plan = nullptr);

// Euclidean distance between the six-state vector and the rest state at sp.
double SetpointError(const FullState& x, const Setpoint& sp);

struct MonitorCheck {
  std::string name;
  bool pass = true;
  std::optional<double> first_failure;  // [s]
  std::string detail;
};

struct MonitorReport {
  std::vector<MonitorCheck> checks;

  bool AllPass() const;
  // nullptr if no check has this name.
  const MonitorCheck* Find(const std::string& name) const;
};

// Post-run assertions: "tension" (T > t_min), "radial_envelope"
// (r within env +- 1e-6), "radial_acceleration" (|r_ddot| <= lambda1 +
// 1e-12), "radial_velocity" (|r_dot| <= env.vel_bound + 1e-9) and
// "convergence".
MonitorReport MonitorInvariants(const TrajectoryLog& log, const GainConfig& g,
                                const RadialEnvelope& env,
                                double t_min = 0.0);

}  // namespace tautline

#endif  // TAUTLINE_SIM_H_
