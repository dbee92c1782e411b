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

#include "tautline/governor.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tautline/errors.h"

namespace tautline {
namespace {

void CheckPreconditions(const GainConfig& g, const GainCertificate& cert,
                        const RadialEnvelope& env) {
  if (!cert.small_gain_ok) {
    throw PreconditionError("ball radii need a small-gain certificate");
  }
  if (!(env.r_min > g.lambda1 / (g.k_dr * g.k_dr))) {
    throw PreconditionError("radial envelope reaches below lambda1 / k_dr^2");
  }
}

// Radii for one split kappa in (0, 1) of the attitude budget, or nullopt if
// either radius is not positive.
std::optional<BallRadii> SplitRadii(double t_bar, double kappa,
                                    const GainConfig& g, const PlantParams& p,
                                    const GainCertificate& cert,
                                    const RadialEnvelope& env,
                                    const GovernorOptions& opts) {
  const double accel = opts.u3_bound ? *opts.u3_bound : g.lambda1;
  const double c = std::sqrt(2.0) * p.m * p.g + p.m * accel;
  const double d =
      2.0 * p.m * env.vel_bound + p.m * env.r_max * (g.k_pa + g.k_da);
  const double x_theta = kappa * t_bar / (t_bar + c);
  const double x_alpha = (t_bar - (t_bar + c) * x_theta) / (d * x_theta);
  // Initial errors whose trajectory bound stays inside (x_alpha, x_theta).
  BallRadii r{x_alpha - cert.gamma_out * x_theta,
              x_theta - cert.gamma_in * x_alpha};
  if (!(r.dx_alpha > 0.0 && r.dx_theta > 0.0)) return std::nullopt;
  // The attitude error must also stay inside the budget tm.
  const double budget = (1.0 - cert.GainProduct()) * g.theta_tilde_max;
  const double used = r.dx_theta + cert.gamma_in * r.dx_alpha;
  if (used >= budget) {
    const double scale = 0.999 * budget / used;
    r.dx_alpha *= scale;
    r.dx_theta *= scale;
  }
  return r;
}

template <class Accept>
std::optional<BallRadii> BestSplit(double t_bar, const GainConfig& g,
                                   const PlantParams& p,
                                   const GainCertificate& cert,
                                   const RadialEnvelope& env,
                                   const GovernorOptions& opts,
                                   Accept accept) {
  std::optional<BallRadii> best;
  const int n = std::max(opts.split_samples, 2);
  for (int i = 1; i < n; ++i) {
    const double kappa = static_cast<double>(i) / n;
    const auto r = SplitRadii(t_bar, kappa, g, p, cert, env, opts);
    if (!r || !accept(*r)) continue;
    if (!best || r->dx_alpha * r->dx_theta > best->dx_alpha * best->dx_theta) {
      best = r;
    }
  }
  return best;
}

double Distance(const Setpoint& a, const Setpoint& b) {
  return std::hypot(a.r_bar - b.r_bar, a.alpha_bar - b.alpha_bar,
                    a.theta_bar - b.theta_bar);
}

}  // namespace

BallRadii UnconstrainedBallRadii(double t_bar, const GainConfig& g,
                                 const PlantParams& p,
                                 const GainCertificate& cert,
                                 const RadialEnvelope& env,
                                 const GovernorOptions& opts) {
  CheckPreconditions(g, cert, env);
  if (!(t_bar > 0.0)) throw PreconditionError("T_bar must be > 0");
  const auto best = BestSplit(t_bar, g, p, cert, env, opts,
                              [](const BallRadii&) { return true; });
  if (!best) {
    throw InfeasibleError("no split of the tension budget leaves positive "
                          "ball radii");
  }
  return *best;
}

BallRadii MinRadii(const GainConfig& g, const PlantParams& p,
                   const GainCertificate& cert, const RadialEnvelope& env,
                   const GovernorOptions& opts) {
  if (!(g.eps > 0.0)) {
    throw PreconditionError("minimum radii need a positive tension margin");
  }
  return UnconstrainedBallRadii(g.eps, g, p, cert, env, opts);
}

BallRadii ComputeBallRadii(const Setpoint& sp, const GainConfig& g,
                           const PlantParams& p, const GainCertificate& cert,
                           const RadialEnvelope& env,
                           const GovernorOptions& opts) {
  if (!IsAttainable(sp, g.eps, p)) {
    throw PreconditionError("ball radii requested at an unattainable setpoint");
  }
  const BallRadii floor = MinRadii(g, p, cert, env, opts);
  const double t_bar = EquilibriumTension(sp, p, g.HoverTension());
  const auto best =
      BestSplit(t_bar, g, p, cert, env, opts, [&](const BallRadii& r) {
        return r.dx_alpha >= floor.dx_alpha && r.dx_theta >= floor.dx_theta;
      });
  return best ? *best : floor;
}

RadialEnvelope PlanEnvelope(const Setpoint& start, const Setpoint& final_sp,
                            const GainConfig& g) {
  RadialEnvelope env =
      ComputeRadialEnvelope(start.r_bar, 0.0, final_sp.r_bar, g);
  const double coast = env.vel_bound / g.k_dr;
  env.r_min = std::max(env.r_min - coast, 0.5 * env.r_min);
  env.r_max += coast;
  return env;
}

WaypointPlan BacktrackPlan(const Setpoint& start, const Setpoint& final_sp,
                           const GainConfig& g, const PlantParams& p,
                           const GainCertificate& cert,
                           const RadialEnvelope& env,
                           const GovernorOptions& opts) {
  if (!IsAttainable(start, g.eps, p) || !IsAttainable(final_sp, g.eps, p)) {
    throw PreconditionError("plan endpoints must be attainable");
  }
  WaypointPlan plan;
  plan.min_radii = MinRadii(g, p, cert, env, opts);
  auto make = [&](const Setpoint& sp, double s) {
    const BallRadii r = ComputeBallRadii(sp, g, p, cert, env, opts);
    return Waypoint{sp, s, r.dx_alpha, r.dx_theta,
                    EquilibriumTension(sp, p, g.HoverTension())};
  };
  plan.waypoints.push_back(make(final_sp, 0.0));
  if (start == final_sp) return plan;

  const PathSpec path = InterpolatePath(final_sp, start, g.eps, p);
  const double segments = static_cast<double>(path.segments.size());
  const double half_a = plan.min_radii.dx_alpha / 2.0;
  const double half_t = plan.min_radii.dx_theta / 2.0;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  for (std::size_t j = 0; j < path.segments.size(); ++j) {
    const auto& [near, far] = path.segments[j];
    const double span_a = std::abs(far.alpha_bar - near.alpha_bar);
    const double span_t = std::abs(far.theta_bar - near.theta_bar);
    double mu = 0.0;
    while (mu < 1.0) {
      const Waypoint& prev = plan.waypoints.back();
      double step =
          std::min(span_a > 0.0 ? (prev.dx_alpha - half_a) / span_a : kInf,
                   span_t > 0.0 ? (prev.dx_theta - half_t) / span_t : kInf);
      if (!(step > 0.0)) {
        throw InfeasibleError("waypoint radii fell below half the minimum");
      }
      std::optional<Waypoint> placed;
      for (int attempt = 0; attempt <= opts.max_retries && !placed;
           ++attempt, step *= 0.5) {
        const double next = std::min(1.0, mu + step);
        const Setpoint sp = Lerp(near, far, next);
        const bool endpoint = next == 1.0;
        if (!endpoint && !IsAttainable(sp, g.eps, p, opts.margin)) continue;
        Waypoint wp;
        try {
          wp = make(sp, (static_cast<double>(j) + next) / segments);
        } catch (const InfeasibleError&) {
          continue;
        }
        if (!InsideBall(prev, wp.sp)) continue;
        placed = wp;
        mu = next;
      }
      if (!placed) {
        throw InfeasibleError("waypoint refinement failed after " +
                              std::to_string(opts.max_retries) + " retries");
      }
      plan.waypoints.push_back(*placed);
      if (static_cast<int>(plan.waypoints.size()) > opts.max_waypoints) {
        throw InfeasibleError("plan exceeds " +
                              std::to_string(opts.max_waypoints) +
                              " waypoints");
      }
    }
  }
  return plan;
}

bool InsideBall(const Waypoint& center, const Setpoint& other) {
  return std::abs(other.alpha_bar - center.sp.alpha_bar) <= center.dx_alpha &&
         std::abs(other.theta_bar - center.sp.theta_bar) <= center.dx_theta;
}

std::string CheckPlanChain(const WaypointPlan& plan) {
  const auto& w = plan.waypoints;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    std::ostringstream why;
    if (!(w[k + 1].s > w[k].s)) {
      why << "s does not increase between waypoints " << k << " and " << k + 1;
      return why.str();
    }
    if (!InsideBall(w[k], w[k + 1].sp)) {
      why << "waypoint " << k + 1 << " lies outside the ball of waypoint "
          << k;
      return why.str();
    }
  }
  return {};
}

double MinCenterSeparation(const WaypointPlan& plan) {
  const auto& w = plan.waypoints;
  if (w.size() < 2) return 0.0;
  double out = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    out = std::min(out, Distance(w[k].sp, w[k + 1].sp));
  }
  return out;
}

bool SwitchReady(const FullState& x, const Waypoint& next) {
  const double ea = x.alpha - next.sp.alpha_bar;
  const double et = x.theta - next.sp.theta_bar;
  return ea * ea + x.alpha_dot * x.alpha_dot <= next.dx_alpha * next.dx_alpha &&
         et * et + x.theta_dot * x.theta_dot <= next.dx_theta * next.dx_theta;
}

GovernorState InitialGovernorState(const WaypointPlan& plan) {
  if (plan.waypoints.empty()) throw PreconditionError("empty waypoint plan");
  return {static_cast<int>(plan.waypoints.size()) - 1, {}};
}

GovernorState GovernorStep(const FullState& x, const WaypointPlan& plan,
                           GovernorState gs, double t) {
  if (gs.active_index < 0 ||
      gs.active_index >= static_cast<int>(plan.waypoints.size())) {
    throw PreconditionError("active waypoint index out of range");
  }
  for (int k = 0; k < gs.active_index; ++k) {
    if (SwitchReady(x, plan.waypoints[k])) {
      gs.active_index = k;
      gs.switch_times.push_back(t);
      break;
    }
  }
  return gs;
}

}  // namespace tautline
