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

#include "tautline/analysis.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>

#include "tautline/control.h"
#include "tautline/errors.h"
#include "tautline/sim.h"

namespace tautline {

RadialEnvelope ComputeRadialEnvelope(double r0, double r_dot0, double r_bar,
                                     const GainConfig& g) {
  const double rate_limit = g.lambda1 / g.k_dr;
  if (std::abs(r_dot0) > rate_limit) {
    throw PreconditionError("|r_dot(0)| exceeds lambda1 / k_dr");
  }
  const double r_tilde = r0 - r_bar;
  const double sk = std::sqrt(g.k_pr);
  RadialEnvelope env;
  env.r_star = r0;
  if (r_tilde * r_dot0 >= 0.0) {
    env.r_star = r0 + r_dot0 / g.k_dr;
  } else {
    const double den = g.k_pr * r_tilde + sk * r_dot0;
    const double tau = den != 0.0 ? r_dot0 / den : -1.0;
    if (tau > 0.0) {
      env.tau_star = tau;
      env.r_star = r_bar + (r_tilde + r_dot0 / sk) * std::exp(-sk * tau);
    }
  }
  env.r_min = std::min({r_bar, r0, env.r_star});
  env.r_max = std::max({r_bar, r0, env.r_star});
  env.vel_bound = std::max(g.lambda1, g.lambda2) / g.k_dr;
  return env;
}

RadialEnvelope CombineEnvelopes(const std::vector<RadialEnvelope>& parts) {
  if (parts.empty()) throw PreconditionError("no envelopes to combine");
  RadialEnvelope out = parts.front();
  for (const RadialEnvelope& e : parts) {
    out.r_min = std::min(out.r_min, e.r_min);
    out.r_max = std::max(out.r_max, e.r_max);
    out.vel_bound = std::max(out.vel_bound, e.vel_bound);
    if (std::abs(e.r_star - e.r_min) > std::abs(out.r_star - out.r_min)) {
      out.r_star = e.r_star;
      out.tau_star = e.tau_star;
    }
  }
  return out;
}

double RestrictionR(const GainConfig& g) {
  const double c = std::cos(g.theta_tilde_max);
  return g.nu * (g.k_da / 2.0) * c / (1.0 - c);
}

double ThetaBudgetResidual(double x, double zeta, double nu) {
  const double k = (1.0 - nu) * (1.0 - nu) * zeta * zeta;
  const double b = 0.25 * (1.0 + 2.0 * k) * (1.0 + 2.0 * k);
  return k * x * x * x - b * (1.0 - x) * (1.0 - x);
}

double ThetaBudget(double zeta, double nu) {
  if (!(zeta > 0.0 && zeta <= 1.0)) {
    throw PreconditionError("zeta must lie in (0, 1]");
  }
  if (!(nu >= 0.0 && nu < 1.0)) throw PreconditionError("nu must lie in [0, 1)");
  double lo = 1e-12;
  double hi = 1.0 - 1e-12;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (ThetaBudgetResidual(mid, zeta, nu) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double GammaInBound(const GainConfig& g) {
  return 1.0 / (g.zeta * std::sqrt(g.k_pt));
}

L1Norm GammaInL1(const GainConfig& g, double t_horizon, double dt) {
  if (!(g.zeta > 0.0 && g.zeta < 1.0)) {
    throw PreconditionError("zeta must lie in (0, 1)");
  }
  const double q = std::sqrt(g.k_pt);
  const double decay = q * g.zeta;
  if (t_horizon == 0.0) t_horizon = 40.0 / decay;
  if (dt == 0.0) dt = t_horizon / 2e5;
  if (!(t_horizon > 0.0)) throw PreconditionError("t_horizon must be > 0");
  if (!(dt > 0.0)) throw PreconditionError("dt must be > 0");

  const double w = q * std::sqrt(1.0 - g.zeta * g.zeta);
  const double c = g.zeta / std::sqrt(1.0 - g.zeta * g.zeta);
  auto f = [&](double s) {
    return std::abs(std::cos(w * s) - c * std::sin(w * s)) *
           std::exp(-decay * s);
  };
  long n = static_cast<long>(std::ceil(t_horizon / dt));
  if (n % 2 == 1) ++n;
  const double h = t_horizon / static_cast<double>(n);
  double sum = f(0.0) + f(t_horizon);
  for (long i = 1; i < n; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f(h * static_cast<double>(i));
  }
  L1Norm out;
  out.value = sum * h / 3.0;
  // |cos - c sin| <= sqrt(1 + c^2) = 1 / sqrt(1 - zeta^2).
  out.tail = std::exp(-decay * t_horizon) / decay /
             std::sqrt(1.0 - g.zeta * g.zeta);
  return out;
}

double Lambda1Bound(const GainConfig& g, double r_min) {
  return RestrictionR(g) * g.k_dr * r_min;
}

std::string_view ToString(GammaOutSource source) {
  return source == GammaOutSource::kEstimated ? "estimated" : "configured";
}

TrajectoryBounds TrajectoryBound(double gamma_in, double gamma_out,
                                 double x_alpha0, double x_theta0) {
  const double product = gamma_in * gamma_out;
  if (!(product < 1.0)) {
    throw InfeasibleError("small-gain condition fails: gamma_in gamma_out = " +
                          std::to_string(product));
  }
  const double k = 1.0 / (1.0 - product);
  return {k * (x_alpha0 + gamma_out * x_theta0),
          k * (gamma_in * x_alpha0 + x_theta0)};
}

GainCertificate SmallGainCertificate(const GainConfig& g, double gamma_out,
                                     double x_alpha0, double x_theta0,
                                     double r_min, GammaOutSource source) {
  if (!(gamma_out >= 0.0)) throw PreconditionError("gamma_out must be >= 0");
  if (!(x_alpha0 >= 0.0 && x_theta0 >= 0.0)) {
    throw PreconditionError("initial error norms must be >= 0");
  }
  if (!(r_min > 0.0)) throw PreconditionError("r_min must be > 0");
  GainCertificate c;
  const L1Norm l1 = GammaInL1(g);
  c.gamma_in = l1.value + l1.tail;
  c.gamma_in_bound = GammaInBound(g);
  c.gamma_out = gamma_out;
  c.gamma_out_source = source;
  c.r_restriction = RestrictionR(g);
  c.r_min = r_min;
  c.lambda1_max = Lambda1Bound(g, r_min);
  c.lambda1_ok = g.lambda1 < c.lambda1_max;
  c.theta_budget = ThetaBudget(g.zeta, g.nu);
  c.theta_budget_ok =
      ThetaBudgetResidual(g.theta_tilde_max, g.zeta, g.nu) > 0.0;
  c.x_alpha0 = x_alpha0;
  c.x_theta0 = x_theta0;
  const TrajectoryBounds b =
      TrajectoryBound(c.gamma_in, gamma_out, x_alpha0, x_theta0);
  c.bound_alpha = b.alpha;
  c.bound_theta = b.theta;
  c.inner_gain_ok = g.k_pt >= gamma_out * gamma_out / (g.zeta * g.zeta);
  c.small_gain_ok = c.inner_gain_ok;
  c.init_ball = (1.0 - c.GainProduct()) * g.theta_tilde_max;
  c.init_ok = x_theta0 + c.gamma_in * x_alpha0 < c.init_ball;
  return c;
}

ErrorTerms ComputeErrorTerms(const FullState& x, const Setpoint& sp,
                             double t_bar, double theta_tilde, double u_t,
                             double u_alpha, const PlantParams& p) {
  if (!(x.r > 0.0)) throw PreconditionError("r must be > 0");
  (void)sp;
  const double ct = std::cos(theta_tilde);
  const double st = std::sin(theta_tilde);
  ErrorTerms e;
  e.delta = 2.0 * x.r_dot / x.r * (1.0 - ct);
  e.gamma = p.g * std::cos(x.alpha) / x.r * (ct - 1.0) -
            u_t * st / (p.m * x.r);
  e.t_predicted = p.m * x.r * x.alpha_dot * x.alpha_dot + t_bar -
                  u_t * (1.0 - ct) + u_alpha * st;
  return e;
}

namespace {

// Peak |theta_c_dot| / amplitude for one drive frequency over all phases.
double PeakRatio(const Setpoint& sp, double freq, const GainConfig& g,
                 const PlantParams& p, const GammaOutOptions& opts,
                 double amplitude) {
  const int steps = static_cast<int>(std::lround(opts.horizon / opts.dt));
  double best = 0.0;
  for (int k = 0; k < opts.phase_count; ++k) {
    const double phase = 2.0 * kPi * k / opts.phase_count;
    auto theta_c_at = [&](const std::array<double, 2>& y) {
      FullState x;
      x.r = sp.r_bar;
      x.alpha = y[0];
      x.alpha_dot = y[1];
      return OuterLoop(x, sp, 0.0, g, p);
    };
    auto rhs = [&](double t, const std::array<double, 2>& y) {
      const OuterLoopOutput out = theta_c_at(y);
      const double theta = out.theta_c + amplitude * std::sin(freq * t + phase);
      const double acc = -p.g * std::cos(y[0]) / sp.r_bar +
                         out.u1 * std::cos(y[0] + theta) / (p.m * sp.r_bar);
      return std::array<double, 2>{y[1], acc};
    };
    std::array<double, 2> y{sp.alpha_bar, 0.0};
    double prev = theta_c_at(y).theta_c;
    for (int i = 0; i < steps; ++i) {
      y = Rk4Step(rhs, i * opts.dt, y, opts.dt);
      const double now = theta_c_at(y).theta_c;
      best = std::max(best, std::abs(now - prev) / opts.dt);
      prev = now;
    }
  }
  return best / amplitude;
}

}  // namespace

double EstimateGammaOut(const std::vector<Setpoint>& setpoints,
                        const GainConfig& g, const PlantParams& p,
                        const GammaOutOptions& opts) {
  if (setpoints.empty()) throw PreconditionError("no setpoints to sample");
  if (!(opts.freq_count >= 2 && opts.phase_count >= 1 && opts.dt > 0.0 &&
        opts.horizon > opts.dt && opts.freq_min > 0.0 &&
        opts.freq_max > opts.freq_min && opts.safety > 0.0)) {
    throw PreconditionError("invalid gamma_out estimator options");
  }
  const double amplitude =
      opts.amplitude > 0.0 ? opts.amplitude : g.theta_tilde_max;
  std::vector<std::future<double>> jobs;
  for (const Setpoint& sp : setpoints) {
    for (int i = 0; i < opts.freq_count; ++i) {
      const double freq =
          opts.freq_min * std::pow(opts.freq_max / opts.freq_min,
                                   static_cast<double>(i) /
                                       (opts.freq_count - 1));
      jobs.push_back(std::async(std::launch::async, PeakRatio, sp, freq,
                                std::cref(g), std::cref(p), std::cref(opts),
                                amplitude));
    }
  }
  double peak = 0.0;
  for (auto& job : jobs) peak = std::max(peak, job.get());
  return opts.safety * peak;
}

}  // namespace tautline
