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

#include "tautline/sim.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tautline {

FullState Rk4Step(const StateField& f, const FullState& x, double dt) {
  auto field = [&](double, const std::array<double, 6>& y) {
    return f(FullState::FromArray(y)).ToArray();
  };
  return FullState::FromArray(Rk4Step(field, 0.0, x.ToArray(), dt));
}

void SimConfig::Validate() const {
  if (!(dt > 0.0)) throw ValidationError("dt", "must be > 0");
  if (!(t_final > dt)) throw ValidationError("t_final", "must exceed dt");
  if (!(convergence_tol > 0.0)) {
    throw ValidationError("convergence_tol", "must be > 0");
  }
  if (!(convergence_dwell >= 0.0)) {
    throw ValidationError("convergence_dwell", "must be >= 0");
  }
  if (!(initial.r > 0.0)) throw ValidationError("r0", "must be > 0");
  if (!(initial.alpha >= 0.0 && initial.alpha <= kPi)) {
    throw ValidationError("alpha0", "must lie in [0, pi]");
  }
}

double SetpointError(const FullState& x, const Setpoint& sp) {
  const double e[6] = {x.r - sp.r_bar,         x.r_dot,
                       x.alpha - sp.alpha_bar, x.alpha_dot,
                       x.theta - sp.theta_bar, x.theta_dot};
  double sum = 0.0;
  for (double v : e) sum += v * v;
  return std::sqrt(sum);
}

namespace {

class EventTracker {
 public:
  EventTracker(const SimConfig& cfg, TrajectoryEvents* events)
      : cfg_(cfg), events_(events) {}

  void Observe(const LogRow& row, const Setpoint& reference) {
    if (!events_->tension_violation) {
      if (row.tension <= 0.0) {
        double t = row.t;
        if (have_prev_ && prev_tension_ > 0.0) {
          t = prev_t_ + (row.t - prev_t_) * prev_tension_ /
                            (prev_tension_ - row.tension);
        }
        events_->tension_violation = std::round(t * 1e4) / 1e4;
      }
    }
    prev_t_ = row.t;
    prev_tension_ = row.tension;
    have_prev_ = true;

    if (SetpointError(row.state, reference) < cfg_.convergence_tol) {
      if (!dwell_start_) dwell_start_ = row.t;
      if (!events_->convergence &&
          row.t - *dwell_start_ >= cfg_.convergence_dwell - 1e-12) {
        events_->convergence = *dwell_start_;
      }
    } else {
      dwell_start_.reset();
      // A later departure invalidates an earlier convergence claim.
      events_->convergence.reset();
    }
  }

 private:
  const SimConfig& cfg_;
  TrajectoryEvents* events_;
  bool have_prev_ = false;
  double prev_t_ = 0.0;
  double prev_tension_ = 0.0;
  std::optional<double> dwell_start_;
};

}  // namespace

TrajectoryLog RunScenario(const SimConfig& cfg, const GainConfig& g,
                          const PlantParams& p, const WaypointPlan* plan) {
  cfg.Validate();
  g.Validate();
  p.Validate();
  if (!IsAttainable(cfg.reference, g.eps, p)) {
    throw PreconditionError("reference is outside the attainable set");
  }
  if (std::abs(cfg.initial.r_dot) > g.lambda1 / g.k_dr) {
    throw PreconditionError("|r_dot(0)| exceeds lambda1 / k_dr");
  }
  const bool governed = cfg.mode == ScenarioMode::kInnerWithGovernor;
  if (governed && (plan == nullptr || plan->waypoints.empty())) {
    throw PreconditionError("inner-with-rg mode needs a waypoint plan");
  }
  const bool ideal = cfg.mode == ScenarioMode::kIdealAttitude;

  TrajectoryLog log;
  log.dt = cfg.dt;
  const long steps = std::lround(cfg.t_final / cfg.dt);
  log.rows.reserve(static_cast<std::size_t>(steps) + 1);
  EventTracker tracker(cfg, &log.events);

  FullState x = cfg.initial;
  x.theta = WrapAngle(x.theta);
  GovernorState gs;
  if (governed) gs = InitialGovernorState(*plan);
  std::optional<double> prev_theta_c;

  for (long k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;
    if (governed) gs = GovernorStep(x, *plan, std::move(gs), t);
    const Setpoint& sp =
        governed ? plan->waypoints[gs.active_index].sp : cfg.reference;

    const ClosedLoopEval eval = ClosedLoopRhs(x, sp, g, p, cfg.mode);
    LogRow row;
    row.t = t;
    row.state = x;
    row.inputs = eval.inputs;
    row.tension = eval.tension;
    row.theta_c = eval.diagnostics.theta_c;
    row.waypoint = governed ? gs.active_index : -1;
    row.r_ddot = eval.r_ddot;
    if (ideal) {
      row.state.theta = eval.diagnostics.theta_c;
      row.state.theta_dot =
          prev_theta_c ? (eval.diagnostics.theta_c - *prev_theta_c) / cfg.dt
                       : 0.0;
      prev_theta_c = eval.diagnostics.theta_c;
    }
    tracker.Observe(row, cfg.reference);
    log.rows.push_back(row);
    if (k == steps) break;

    if (ideal) {
      auto field = [&](double, const std::array<double, 4>& y) {
        FullState s{y[0], y[1], y[2], y[3], 0.0, 0.0};
        const StateDerivative d = ClosedLoopRhs(s, sp, g, p, cfg.mode).derivative;
        return std::array<double, 4>{d.r_dot, d.r_ddot, d.alpha_dot,
                                     d.alpha_ddot};
      };
      const std::array<double, 4> y0{x.r, x.r_dot, x.alpha, x.alpha_dot};
      const auto y = Rk4Step(field, t, y0, cfg.dt);
      x = FullState{y[0], y[1], y[2], y[3], 0.0, 0.0};
    } else {
      x = Rk4Step(
          [&](const FullState& s) {
            return ClosedLoopRhs(s, sp, g, p, cfg.mode).derivative;
          },
          x, cfg.dt);
    }
  }
  if (governed) log.events.switch_times = gs.switch_times;
  return log;
}

bool MonitorReport::AllPass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const MonitorCheck& c) { return c.pass; });
}

const MonitorCheck* MonitorReport::Find(const std::string& name) const {
  for (const MonitorCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

MonitorReport MonitorInvariants(const TrajectoryLog& log, const GainConfig& g,
                                const RadialEnvelope& env, double t_min) {
  MonitorCheck tension{"tension", true, std::nullopt, ""};
  MonitorCheck envelope{"radial_envelope", true, std::nullopt, ""};
  MonitorCheck accel{"radial_acceleration", true, std::nullopt, ""};
  MonitorCheck velocity{"radial_velocity", true, std::nullopt, ""};
  auto fail = [](MonitorCheck& c, double t) {
    if (c.pass) {
      c.pass = false;
      c.first_failure = t;
    }
  };
  double t_low = std::numeric_limits<double>::infinity();
  for (const LogRow& row : log.rows) {
    t_low = std::min(t_low, row.tension);
    if (!(row.tension > t_min)) fail(tension, row.t);
    if (row.state.r < env.r_min - 1e-6 || row.state.r > env.r_max + 1e-6) {
      fail(envelope, row.t);
    }
    if (std::abs(row.r_ddot) > g.lambda1 + 1e-12) fail(accel, row.t);
    if (std::abs(row.state.r_dot) > env.vel_bound + 1e-9) fail(velocity, row.t);
  }
  if (log.events.tension_violation) {
    fail(tension, *log.events.tension_violation);
    tension.first_failure = log.events.tension_violation;
  }
  tension.detail = "min T = " + std::to_string(t_low);
  MonitorCheck converged{"convergence", log.events.convergence.has_value(),
                         std::nullopt, ""};
  converged.detail = converged.pass
                         ? "converged at t = " +
                               std::to_string(*log.events.convergence)
                         : "no convergence within the horizon";
  MonitorReport report;
  report.checks = {tension, envelope, accel, velocity, converged};
  return report;
}

}  // namespace tautline
