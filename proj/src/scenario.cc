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

#include "tautline/scenario.h"

#include <cmath>

#include "tautline/errors.h"

namespace tautline {

Setpoint StartSetpoint(const FullState& initial) {
  return {initial.r, initial.alpha, WrapAngle(initial.theta)};
}

GainCertificate CertifyBundle(const ConfigBundle& b,
                              const RadialEnvelope& env) {
  if (b.gamma_out) {
    return SmallGainCertificate(b.gains, *b.gamma_out, 0.0, 0.0, env.r_min,
                                GammaOutSource::kConfigured);
  }
  const double estimate =
      EstimateGammaOut({b.sim.reference}, b.gains, b.plant);
  return SmallGainCertificate(b.gains, estimate, 0.0, 0.0, env.r_min,
                              GammaOutSource::kEstimated);
}

ScenarioSetup PrepareScenario(const ConfigBundle& b, bool force_plan) {
  ScenarioSetup setup;
  const bool governed = b.sim.mode == ScenarioMode::kInnerWithGovernor;
  if (!governed && !force_plan) {
    setup.env = ComputeRadialEnvelope(b.sim.initial.r, b.sim.initial.r_dot,
                                      b.sim.reference.r_bar, b.gains);
    return setup;
  }
  const Setpoint start = StartSetpoint(b.sim.initial);
  if (!IsAttainable(start, b.gains.eps, b.plant)) {
    throw PreconditionError(
        "the initial configuration is not an attainable equilibrium, so it "
        "cannot start a waypoint chain");
  }
  setup.env = PlanEnvelope(start, b.sim.reference, b.gains);
  setup.cert = CertifyBundle(b, setup.env);
  if (!setup.cert->small_gain_ok) {
    throw InfeasibleError(
        "no small-gain certificate: k_pt is below gamma_out^2 / zeta^2 for "
        "gamma_out = " + std::to_string(setup.cert->gamma_out));
  }
  GovernorOptions opts;
  opts.u3_bound = b.u3_bound;
  setup.plan = BacktrackPlan(start, b.sim.reference, b.gains, b.plant,
                             *setup.cert, setup.env, opts);
  return setup;
}

ScenarioResult RunBundle(const ConfigBundle& b) {
  ScenarioResult out;
  out.setup = PrepareScenario(b);
  out.log = RunScenario(b.sim, b.gains, b.plant,
                        out.setup.plan ? &*out.setup.plan : nullptr);
  out.report =
      MonitorInvariants(out.log, b.gains, out.setup.env, b.plant.t_min);
  return out;
}

Setpoint SampleAttainable(std::mt19937_64& rng, double eps,
                          const PlantParams& p, Half half, double r_lo,
                          double r_hi, double inset) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Setpoint sp;
    sp.r_bar = r_lo + (r_hi - r_lo) * unit(rng);
    const double lo = half == Half::kUpper ? kHalfPi : 0.0;
    const double hi = half == Half::kLower ? kHalfPi : kPi;
    sp.alpha_bar = lo + (hi - lo) * unit(rng);
    if (IsVertical(sp.alpha_bar)) continue;
    const double limit = ThetaLimit(sp.alpha_bar, eps, p);
    const double tilt = kHalfPi - sp.alpha_bar;
    const double t_lo = sp.alpha_bar < kHalfPi ? limit : tilt;
    const double t_hi = sp.alpha_bar < kHalfPi ? tilt : limit;
    if (!(t_hi > t_lo)) continue;
    const double w = t_hi - t_lo;
    sp.theta_bar = t_lo + w * (inset + (1.0 - 2.0 * inset) * unit(rng));
    if (IsAttainable(sp, eps, p)) return sp;
  }
  throw InfeasibleError("could not sample an attainable setpoint");
}

}  // namespace tautline
