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

#ifndef TAUTLINE_GOVERNOR_H_
#define TAUTLINE_GOVERNOR_H_

#include <optional>
#include <string>
#include <vector>

#include "tautline/analysis.h"
#include "tautline/equilibria.h"
#include "tautline/gains.h"
#include "tautline/plant.h"

namespace tautline {

// Radii of the invariant ball around a waypoint: initial elevation errors
// with |(alpha - alpha_bar, alpha_dot)| <= dx_alpha and attitude errors with
// |(theta - theta_bar, theta_dot)| <= dx_theta converge without slackening
// the cable.
struct BallRadii {
  double dx_alpha = 0.0;
  double dx_theta = 0.0;
};

struct Waypoint {
  Setpoint sp;
  double s = 0.0;  // Path parameter: 0 at the final reference, 1 at start.
  double dx_alpha = 0.0;
  double dx_theta = 0.0;
  double t_bar = 0.0;
};

// Index 0 is the final reference, the last entry is the start.
struct WaypointPlan {
  std::vector<Waypoint> waypoints;
  BallRadii min_radii;
};

struct GovernorState {
  int active_index = 0;
  std::vector<double> switch_times;
};

struct GovernorOptions {
  int max_waypoints = 10000;
  int max_retries = 10;            // Step halvings per waypoint.
  double margin = 1e-9;            // Attainability margin for waypoints [rad].
  int split_samples = 2000;        // Grid over the error-budget split.
  // Bound on m |r_ddot| in the thrust budget. By default m lambda1; when
  // set, m * u3_bound is used instead.
  std::optional<double> u3_bound;
};

// Radii for a waypoint with equilibrium tension t_bar, maximizing
// dx_alpha * dx_theta over the split of the tension budget between the
// attitude and elevation errors. InfeasibleError when no split leaves both
// radii positive.
BallRadii UnconstrainedBallRadii(double t_bar, const GainConfig& g,
                                 const PlantParams& p,
                                 const GainCertificate& cert,
                                 const RadialEnvelope& env,
                                 const GovernorOptions& opts = {});

// Radii at T_bar = eps; every waypoint's radii dominate these.
BallRadii MinRadii(const GainConfig& g, const PlantParams& p,
                   const GainCertificate& cert, const RadialEnvelope& env,
                   const GovernorOptions& opts = {});

// Radii at an attainable setpoint, constrained to dominate MinRadii. Since
// the admissible region grows with T_bar, MinRadii is always a fallback.
BallRadii ComputeBallRadii(const Setpoint& sp, const GainConfig& g,
                           const PlantParams& p, const GainCertificate& cert,
                           const RadialEnvelope& env,
                           const GovernorOptions& opts = {});

// Envelope covering a transition between start and final radii, widened by
// the largest coasting distance vel_bound / k_dr on both sides to account
// for reference switches at non-zero radial speed.
RadialEnvelope PlanEnvelope(const Setpoint& start, const Setpoint& final_sp,
                            const GainConfig& g);

// Builds the waypoint chain backwards from `final_sp` to `start`, one path
// segment at a time. Each step advances along the segment by the remaining
// room inside the predecessor's ball less half the minimum radius, and is
// halved (up to max_retries times) if the new waypoint fails to be
// attainable, to admit radii, or to lie in the predecessor's ball.
// PreconditionError for unattainable endpoints, InfeasibleError if the
// waypoint cap is exceeded or refinement fails.
WaypointPlan BacktrackPlan(const Setpoint& start, const Setpoint& final_sp,
                           const GainConfig& g, const PlantParams& p,
                           const GainCertificate& cert,
                           const RadialEnvelope& env,
                           const GovernorOptions& opts = {});

// Whether the setpoint offset between waypoints k and k + 1 lies inside
// waypoint k's ball.
bool InsideBall(const Waypoint& center, const Setpoint& other);

// Empty if every consecutive pair is nested and s increases strictly,
// otherwise a description of the first failure.
std::string CheckPlanChain(const WaypointPlan& plan);

// Smallest setpoint distance between consecutive waypoints; 0 for plans
// with fewer than two waypoints.
double MinCenterSeparation(const WaypointPlan& plan);

// (alpha - alpha_bar)^2 + alpha_dot^2 <= dx_alpha^2 and
// (theta - theta_bar)^2 + theta_dot^2 <= dx_theta^2.
bool SwitchReady(const FullState& x, const Waypoint& next);

GovernorState InitialGovernorState(const WaypointPlan& plan);

// Moves to the lowest-index waypoint below the active one whose ball holds
// the state, recording `t` as a switch time. The index never increases.
GovernorState GovernorStep(const FullState& x, const WaypointPlan& plan,
                           GovernorState gs, double t);

}  // namespace tautline

#endif  // TAUTLINE_GOVERNOR_H_
