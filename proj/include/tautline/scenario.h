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

#ifndef TAUTLINE_SCENARIO_H_
#define TAUTLINE_SCENARIO_H_

#include <optional>
#include <random>

#include "tautline/analysis.h"
#include "tautline/config.h"
#include "tautline/governor.h"
#include "tautline/sim.h"

namespace tautline {

// The configuration (r, alpha, theta) of an initial state, used as the
// start of the waypoint chain.
Setpoint StartSetpoint(const FullState& initial);

// Certificate for a bundle: configured gamma_out, or the estimate at the
// reference when unset.
GainCertificate CertifyBundle(const ConfigBundle& b, const RadialEnvelope& env);

struct ScenarioSetup {
  RadialEnvelope env;
  std::optional<GainCertificate> cert;
  std::optional<WaypointPlan> plan;
};

// Envelope for every mode; certificate and waypoint plan only in
// inner-with-rg mode or when `force_plan` is set. PreconditionError if the
// plan start is not attainable.
ScenarioSetup PrepareScenario(const ConfigBundle& b, bool force_plan = false);

struct ScenarioResult {
  ScenarioSetup setup;
  TrajectoryLog log;
  MonitorReport report;
};

ScenarioResult RunBundle(const ConfigBundle& b);

enum class Half { kAny, kLower, kUpper };

// Random attainable setpoint with r_bar uniform in [r_lo, r_hi], alpha_bar
// uniform over the requested half of [0, pi] (off the vertical) and
// theta_bar uniform inside the open attainable interval, kept `inset` (as a
// fraction of the interval width) away from both ends.
Setpoint SampleAttainable(std::mt19937_64& rng, double eps,
                          const PlantParams& p, Half half = Half::kAny,
                          double r_lo = 0.5, double r_hi = 1.5,
                          double inset = 0.0);

}  // namespace tautline

#endif  // TAUTLINE_SCENARIO_H_
