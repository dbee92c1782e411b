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

#ifndef TAUTLINE_CONFIG_H_
#define TAUTLINE_CONFIG_H_

#include <optional>
#include <string>
#include <string_view>

#include "tautline/gains.h"
#include "tautline/plant.h"
#include "tautline/sim.h"

namespace tautline {

// Everything a scenario file can set. Defaults reproduce the reference
// scenario: the vehicle starts at rest at (1, pi/8, pi/10) and is sent to
// (0.5, 9 pi/10, -pi/20).
struct ConfigBundle {
  PlantParams plant;
  GainConfig gains;
  SimConfig sim = DefaultSimConfig();
  // Outer-loop gain for the certificate; unset means "estimate".
  std::optional<double> gamma_out;
  // Replaces lambda1 in the thrust budget of the ball radii.
  std::optional<double> u3_bound;

  static SimConfig DefaultSimConfig();
  bool operator==(const ConfigBundle&) const = default;
};

// Parses "pi", "-pi", "pi*a", "pi/b", "pi*a/b" (a, b decimal) or a plain
// number, in radians. Returns nullopt on malformed input.
std::optional<double> ParseAngle(std::string_view text);

// Flat "key = value" document with '#' comments. Missing keys keep their
// defaults; k_dr, k_da and k_dt default to 2 sqrt(k_pr), 2 zeta sqrt(k_pa)
// and 2 zeta sqrt(k_pt) when omitted. Throws ConfigParseError (with line)
// for malformed lines, unknown or duplicate keys and unparsable values, and
// ValidationError (with key) when the assembled bundle violates an
// invariant.
ConfigBundle ParseConfig(std::string_view text);

// Reads and parses a file; ConfigParseError with line 0 if unreadable.
ConfigBundle LoadConfig(const std::string& path);

// Renders every key with round-trip precision.
std::string EmitConfig(const ConfigBundle& bundle);

// Throws ValidationError for the first violated invariant.
void ValidateBundle(const ConfigBundle& bundle);

}  // namespace tautline

#endif  // TAUTLINE_CONFIG_H_
