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

#ifndef TAUTLINE_GAINS_H_
#define TAUTLINE_GAINS_H_

#include <cmath>
#include <optional>

namespace tautline {

// Controller gains, saturation levels and analysis parameters.
//
// The radial loop is critically damped (k_dr = 2 sqrt(k_pr)); the attitude
// loop uses k_dt = 2 zeta sqrt(k_pt). Both relations are checked by
// Validate(). Defaults reproduce the reference scenario shipped in
// configs/reference_scenario.cfg.
struct GainConfig {
  double k_pr = 30.0;
  double k_dr = 2.0 * std::sqrt(30.0);
  double lambda1 = 1.0;  // Outer radial saturation [m/s^2].
  double lambda2 = 2.0;  // Inner radial saturation [m/s^2].
  double k_pa = 30.0;
  double k_da = 2.0 * 0.9 * std::sqrt(30.0);
  double k_pt = 200.0;
  double k_dt = 2.0 * 0.9 * std::sqrt(200.0);
  double zeta = 0.9;
  double eps = 2.0;              // Tension margin of the attainable set [N].
  double nu = 0.5;               // Fraction of the admissible |r_dot / r|.
  double theta_tilde_max = 0.75; // Attitude-error budget [rad].
  // Tension assigned to the vertical hover equilibrium, where the force
  // balance leaves it free. Unset means HoverTension() picks a default.
  std::optional<double> hover_tension;

  // Configured hover tension, or 2 eps (1 N when eps = 0).
  double HoverTension() const {
    if (hover_tension) return *hover_tension;
    return eps > 0.0 ? 2.0 * eps : 1.0;
  }

  // Throws ValidationError naming the violated invariant.
  void Validate() const;

  bool operator==(const GainConfig&) const = default;
};

}  // namespace tautline

#endif  // TAUTLINE_GAINS_H_
