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

#ifndef TAUTLINE_REPORT_H_
#define TAUTLINE_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "tautline/analysis.h"
#include "tautline/governor.h"
#include "tautline/plant.h"
#include "tautline/sim.h"

namespace tautline {

inline constexpr char kLogHeader[] =
    "t,r,r_dot,alpha,alpha_dot,theta,theta_dot,u1,u2,u3,T,theta_c,waypoint";

// Header, one row per step with 9 significant digits, then events as '#'
// comment lines:
//   # tension_violation t=<s>
//   # switch t=<s>            (one per switch)
//   # convergence t=<s>
std::string FormatLog(const TrajectoryLog& log);

// Writes FormatLog(log) to `path`; std::runtime_error naming the path on
// I/O failure.
void EmitLog(const TrajectoryLog& log, const std::string& path);

// Inverse of FormatLog. r_ddot is not serialized and reads back as 0.
// ConfigParseError (with line) on malformed input.
TrajectoryLog ParseLogCsv(std::string_view text);

// index,s,r_bar,alpha_bar,theta_bar,dx_alpha,dx_theta
std::string FormatPlan(const WaypointPlan& plan);

// key: value lines.
std::string FormatCertificate(const GainCertificate& cert);

std::string FormatMonitor(const MonitorReport& report);

struct AttainableRow {
  double alpha_bar = 0.0;
  double theta_min = 0.0;  // Open bounds; theta_min > theta_max when empty.
  double theta_max = 0.0;
};

// `grid` evenly spaced elevations over [0, pi], plus an exact pi/2 row
// (singleton 0) when the grid misses it. PreconditionError if grid < 2.
std::vector<AttainableRow> AttainableSetSample(double eps, int grid,
                                               const PlantParams& p);

// alpha_bar,theta_min,theta_max
std::string FormatAttainableSet(const std::vector<AttainableRow>& rows);

}  // namespace tautline

#endif  // TAUTLINE_REPORT_H_
