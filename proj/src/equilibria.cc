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

#include "tautline/equilibria.h"

#include <cmath>

#include "tautline/errors.h"

namespace tautline {
namespace {

bool SameHalf(double a, double b) {
  return (a <= kHalfPi && b <= kHalfPi) || (a >= kHalfPi && b >= kHalfPi);
}

}  // namespace

Setpoint Lerp(const Setpoint& a, const Setpoint& b, double w) {
  if (w == 0.0) return a;
  if (w == 1.0) return b;
  return {a.r_bar + w * (b.r_bar - a.r_bar),
          a.alpha_bar + w * (b.alpha_bar - a.alpha_bar),
          a.theta_bar + w * (b.theta_bar - a.theta_bar)};
}

double ThetaLimit(double alpha_bar, double eps, const PlantParams& p) {
  if (!(alpha_bar >= 0.0 && alpha_bar <= kPi)) {
    throw PreconditionError("alpha_bar must lie in [0, pi]");
  }
  if (!(eps >= 0.0)) throw PreconditionError("eps must be >= 0");
  if (IsVertical(alpha_bar)) {
    throw SingularError("theta limit is undefined at the vertical");
  }
  const double c = std::cos(alpha_bar);
  const double slope = eps / (p.m * p.g * c) + std::tan(alpha_bar);
  const double branch = alpha_bar < kHalfPi ? 0.0 : kPi;
  return std::atan(slope) + branch - alpha_bar;
}

bool IsAttainable(const Setpoint& sp, double eps, const PlantParams& p,
                  double margin) {
  if (!(sp.r_bar > 0.0)) return false;
  if (!(sp.alpha_bar >= 0.0 && sp.alpha_bar <= kPi)) return false;
  if (IsVertical(sp.alpha_bar)) return sp.theta_bar == 0.0;
  const double limit = ThetaLimit(sp.alpha_bar, eps, p);
  const double tilt = kHalfPi - sp.alpha_bar;
  if (sp.alpha_bar < kHalfPi) {
    return sp.theta_bar > limit + margin && sp.theta_bar < tilt - margin;
  }
  return sp.theta_bar > tilt + margin && sp.theta_bar < limit - margin;
}

double EquilibriumTension(const Setpoint& sp, const PlantParams& p,
                          std::optional<double> hover_tension) {
  if (IsVertical(sp.alpha_bar)) {
    if (!hover_tension) {
      throw SingularError(
          "equilibrium tension at the vertical is free; configure a hover "
          "tension");
    }
    return *hover_tension;
  }
  const double a = sp.alpha_bar;
  return p.m * p.g *
         (std::tan(a + sp.theta_bar) * std::cos(a) - std::sin(a));
}

EquilibriumData Equilibrium(const Setpoint& sp, const PlantParams& p,
                            std::optional<double> hover_tension) {
  const ControlInputs u = EquilibriumInputs(sp, p, hover_tension);
  return {EquilibriumTension(sp, p, hover_tension), u.u1};
}

ControlInputs EquilibriumInputs(const Setpoint& sp, const PlantParams& p,
                                std::optional<double> hover_tension) {
  const double t_bar = EquilibriumTension(sp, p, hover_tension);
  ControlInputs u;
  u.u2 = 0.0;
  u.u3 = -p.rho * t_bar;
  if (IsVertical(sp.alpha_bar)) {
    u.u1 = t_bar + p.m * p.g;
    return u;
  }
  const double c = std::cos(sp.alpha_bar + sp.theta_bar);
  if (std::abs(c) < 1e-12) {
    throw SingularError("thrust is undefined for alpha_bar + theta_bar = "
                        "+-pi/2");
  }
  u.u1 = p.m * p.g * std::cos(sp.alpha_bar) / c;
  return u;
}

bool CertifyPath(const PathSpec& path, double eps, const PlantParams& p,
                 int samples_per_segment) {
  for (const auto& [a, b] : path.segments) {
    for (int i = 1; i <= samples_per_segment; ++i) {
      const double w = static_cast<double>(i) / (samples_per_segment + 1);
      if (!IsAttainable(Lerp(a, b, w), eps, p)) return false;
    }
  }
  return true;
}

PathSpec InterpolatePath(const Setpoint& from, const Setpoint& to, double eps,
                         const PlantParams& p, int samples_per_segment) {
  if (!IsAttainable(from, eps, p) || !IsAttainable(to, eps, p)) {
    throw PreconditionError("path endpoints must be attainable");
  }
  PathSpec path;
  if (SameHalf(from.alpha_bar, to.alpha_bar)) {
    path.segments.emplace_back(from, to);
  } else {
    const Setpoint joint{(from.r_bar + to.r_bar) / 2.0, kHalfPi, 0.0};
    path.segments.emplace_back(from, joint);
    path.segments.emplace_back(joint, to);
  }
  if (!CertifyPath(path, eps, p, samples_per_segment)) {
    throw InfeasibleError("interpolated path leaves the attainable set");
  }
  return path;
}

}  // namespace tautline
