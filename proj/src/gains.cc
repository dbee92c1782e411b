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

#include "tautline/gains.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "tautline/errors.h"
#include "tautline/plant.h"

namespace tautline {
namespace {

bool NearlyEqual(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

void RequirePositive(const char* key, double value) {
  if (!(value > 0.0)) throw ValidationError(key, "must be > 0");
}

}  // namespace

void GainConfig::Validate() const {
  RequirePositive("k_pr", k_pr);
  RequirePositive("k_dr", k_dr);
  RequirePositive("lambda1", lambda1);
  RequirePositive("lambda2", lambda2);
  RequirePositive("k_pa", k_pa);
  RequirePositive("k_da", k_da);
  RequirePositive("k_pt", k_pt);
  RequirePositive("k_dt", k_dt);
  if (!(zeta > 0.0 && zeta < 1.0)) {
    throw ValidationError("zeta", "damping ratio must lie in (0, 1)");
  }
  if (!(eps >= 0.0)) throw ValidationError("eps", "must be >= 0");
  if (!(nu > 0.0 && nu < 1.0)) {
    throw ValidationError("nu", "restriction fraction must lie in (0, 1)");
  }
  if (!(theta_tilde_max > 0.0 && theta_tilde_max < kHalfPi)) {
    throw ValidationError("theta_tilde_max", "must lie in (0, pi/2)");
  }
  if (!NearlyEqual(k_dr, 2.0 * std::sqrt(k_pr))) {
    throw ValidationError("k_dr", "must equal 2 sqrt(k_pr)");
  }
  if (!NearlyEqual(k_dt, 2.0 * zeta * std::sqrt(k_pt))) {
    throw ValidationError("k_dt", "must equal 2 zeta sqrt(k_pt)");
  }
  if (!(lambda2 > lambda1)) {
    throw ValidationError("lambda2", "must be greater than lambda1");
  }
  if (hover_tension && !(*hover_tension > 0.0)) {
    throw ValidationError("hover_tension", "must be > 0");
  }
}

}  // namespace tautline
