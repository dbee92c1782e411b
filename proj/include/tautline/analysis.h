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

#ifndef TAUTLINE_ANALYSIS_H_
#define TAUTLINE_ANALYSIS_H_

#include <string_view>
#include <vector>

#include "tautline/equilibria.h"
#include "tautline/gains.h"
#include "tautline/plant.h"

namespace tautline {

// Bounds on the radial trajectory under the nested-saturation winch law,
// valid when |r_dot(0)| <= lambda1 / k_dr.
struct RadialEnvelope {
  double r_min = 0.0;
  double r_max = 0.0;
  double r_star = 0.0;    // Extremal excursion.
  double tau_star = 0.0;  // Time of the overshoot extremum (0 if none).
  double vel_bound = 0.0; // max(lambda1, lambda2) / k_dr.
};

RadialEnvelope ComputeRadialEnvelope(double r0, double r_dot0, double r_bar,
                                     const GainConfig& g);

// Envelope covering every radial transient between the given radii, each
// started at rest.
RadialEnvelope CombineEnvelopes(const std::vector<RadialEnvelope>& parts);

// Admissible |r_dot / r| for which the elevation loop stays ISS:
// nu (k_da / 2) cos(tm) / (1 - cos(tm)).
double RestrictionR(const GainConfig& g);

// a x^3 - b (1 - x)^2 with a = (1 - nu)^2 zeta^2 and
// b = (1 + 2 (1 - nu)^2 zeta^2)^2 / 4.
double ThetaBudgetResidual(double x, double zeta, double nu);

// Unique root of ThetaBudgetResidual in (0, 1). Budgets above the root
// satisfy the inequality.
double ThetaBudget(double zeta, double nu);

// 1 / (zeta sqrt(k_pt)).
double GammaInBound(const GainConfig& g);

struct L1Norm {
  double value = 0.0;
  double tail = 0.0;  // Bound on the truncated integral beyond the horizon.
};

// Integral of |cos(w s) - zeta / sqrt(1 - zeta^2) sin(w s)| e^{-q zeta s}
// over [0, t_horizon] with q = sqrt(k_pt), w = q sqrt(1 - zeta^2), by
// composite Simpson quadrature. Non-positive arguments select the default
// horizon 40 / (zeta q) and step horizon / 2e5.
L1Norm GammaInL1(const GainConfig& g, double t_horizon = 0.0, double dt = 0.0);

// Bound on lambda1 keeping the radial rate inside the elevation-loop
// restriction: RestrictionR(g) * k_dr * r_min.
double Lambda1Bound(const GainConfig& g, double r_min);

enum class GammaOutSource { kConfigured, kEstimated };
std::string_view ToString(GammaOutSource source);

struct GainCertificate {
  double gamma_in = 0.0;        // l1 value plus truncation tail.
  double gamma_in_bound = 0.0;  // Closed-form upper bound.
  double gamma_out = 0.0;
  GammaOutSource gamma_out_source = GammaOutSource::kConfigured;
  double r_restriction = 0.0;
  double r_min = 0.0;
  double lambda1_max = 0.0;
  double theta_budget = 0.0;  // Root of the budget cubic.
  bool theta_budget_ok = false;
  bool lambda1_ok = false;
  bool inner_gain_ok = false;  // k_pt >= gamma_out^2 / zeta^2.
  bool small_gain_ok = false;  // gamma_in gamma_out < 1 and inner_gain_ok.
  double x_alpha0 = 0.0;
  double x_theta0 = 0.0;
  // Right-hand side of the initial-error condition,
  // (1 - gamma_in gamma_out) theta_tilde_max.
  double init_ball = 0.0;
  bool init_ok = false;
  double bound_alpha = 0.0;  // Sup-norm bound on the elevation error.
  double bound_theta = 0.0;  // Sup-norm bound on the attitude error.

  double GainProduct() const { return gamma_in * gamma_out; }
};

struct TrajectoryBounds {
  double alpha = 0.0;
  double theta = 0.0;
};

// [|x_a|; |x_t|] <= 1 / (1 - gi go) [[1, go], [gi, 1]] [x_a0; x_t0].
// InfeasibleError if gi go >= 1.
TrajectoryBounds TrajectoryBound(double gamma_in, double gamma_out,
                                 double x_alpha0, double x_theta0);

// Assembles the interconnection certificate. Throws InfeasibleError when
// gamma_in gamma_out >= 1 and PreconditionError for negative arguments.
GainCertificate SmallGainCertificate(
    const GainConfig& g, double gamma_out, double x_alpha0, double x_theta0,
    double r_min, GammaOutSource source = GammaOutSource::kConfigured);

// Quantities of the elevation error dynamics under an attitude error
// theta_tilde = theta - theta_c:
//   alpha_ddot = -(k_pa a~ + k_da alpha_dot) cos(theta_tilde)
//                - delta alpha_dot + gamma.
struct ErrorTerms {
  double delta = 0.0;
  double gamma = 0.0;
  double t_predicted = 0.0;  // Cable tension implied by the error.
};

ErrorTerms ComputeErrorTerms(const FullState& x, const Setpoint& sp,
                             double t_bar, double theta_tilde, double u_t,
                             double u_alpha, const PlantParams& p);

struct GammaOutOptions {
  double amplitude = 0.0;  // Attitude-error amplitude; 0 selects tm.
  double freq_min = 0.1;   // [rad/s]
  double freq_max = 100.0;
  int freq_count = 25;
  int phase_count = 8;
  double horizon = 3.0;
  double dt = 1e-3;
  double safety = 2.0;
};

// Empirical outer-loop gain from the attitude error to theta_c_dot. The
// elevation loop is simulated with r held at r_bar while the attitude
// tracks theta_c with a sinusoidal error of the given amplitude; the peak
// ratio over a log-spaced frequency grid and evenly spaced phases, maximized
// over `setpoints`, is scaled by the safety factor. Runs in parallel.
double EstimateGammaOut(const std::vector<Setpoint>& setpoints,
                        const GainConfig& g, const PlantParams& p,
                        const GammaOutOptions& opts = {});

}  // namespace tautline

#endif  // TAUTLINE_ANALYSIS_H_
