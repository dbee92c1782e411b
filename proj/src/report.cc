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

#include "tautline/report.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tautline/equilibria.h"
#include "tautline/errors.h"

namespace tautline {
namespace {

std::string G9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string Seconds(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

double ToDouble(std::string_view s, int line) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw ConfigParseError(line, "bad number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> Split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

std::string FormatLog(const TrajectoryLog& log) {
  std::string out = kLogHeader;
  out += '\n';
  for (const LogRow& row : log.rows) {
    const FullState& x = row.state;
    const double cols[12] = {row.t,       x.r,
                             x.r_dot,     x.alpha,
                             x.alpha_dot, WrapAngle(x.theta),
                             x.theta_dot, row.inputs.u1,
                             row.inputs.u2, row.inputs.u3,
                             row.tension, row.theta_c};
    for (double v : cols) {
      out += G9(v);
      out += ',';
    }
    out += std::to_string(row.waypoint);
    out += '\n';
  }
  const TrajectoryEvents& e = log.events;
  if (e.tension_violation) {
    out += "# tension_violation t=" + Seconds(*e.tension_violation) + "\n";
  }
  for (double t : e.switch_times) out += "# switch t=" + G9(t) + "\n";
  if (e.convergence) out += "# convergence t=" + G9(*e.convergence) + "\n";
  return out;
}

void EmitLog(const TrajectoryLog& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << FormatLog(log);
  if (!out) throw std::runtime_error("write failed for " + path);
}

TrajectoryLog ParseLogCsv(std::string_view text) {
  TrajectoryLog log;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string_view body = std::string_view(line).substr(1);
      const auto eq = body.find("t=");
      if (eq == std::string_view::npos) continue;
      const double t = ToDouble(body.substr(eq + 2), line_no);
      if (body.find("tension_violation") != std::string_view::npos) {
        log.events.tension_violation = t;
      } else if (body.find("switch") != std::string_view::npos) {
        log.events.switch_times.push_back(t);
      } else if (body.find("convergence") != std::string_view::npos) {
        log.events.convergence = t;
      }
      continue;
    }
    if (!header) {
      if (line != kLogHeader) throw ConfigParseError(line_no, "bad header");
      header = true;
      continue;
    }
    const auto f = Split(line, ',');
    if (f.size() != 13) {
      throw ConfigParseError(line_no, "expected 13 columns");
    }
    double v[12];
    for (int i = 0; i < 12; ++i) v[i] = ToDouble(f[i], line_no);
    LogRow row;
    row.t = v[0];
    row.state = FullState{v[1], v[2], v[3], v[4], v[5], v[6]};
    row.inputs = ControlInputs{v[7], v[8], v[9]};
    row.tension = v[10];
    row.theta_c = v[11];
    int wp = 0;
    const auto [end, ec] =
        std::from_chars(f[12].data(), f[12].data() + f[12].size(), wp);
    if (ec != std::errc() || end != f[12].data() + f[12].size()) {
      throw ConfigParseError(line_no, "bad waypoint index");
    }
    row.waypoint = wp;
    log.rows.push_back(row);
  }
  if (!header) throw ConfigParseError(line_no, "missing header");
  if (log.rows.size() >= 2) log.dt = log.rows[1].t - log.rows[0].t;
  return log;
}

std::string FormatPlan(const WaypointPlan& plan) {
  std::string out = "index,s,r_bar,alpha_bar,theta_bar,dx_alpha,dx_theta\n";
  for (std::size_t k = 0; k < plan.waypoints.size(); ++k) {
    const Waypoint& w = plan.waypoints[k];
    out += std::to_string(k) + "," + G9(w.s) + "," + G9(w.sp.r_bar) + "," +
           G9(w.sp.alpha_bar) + "," + G9(w.sp.theta_bar) + "," +
           G9(w.dx_alpha) + "," + G9(w.dx_theta) + "\n";
  }
  return out;
}

std::string FormatCertificate(const GainCertificate& c) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "gamma_in: " << G9(c.gamma_in) << "\n"
      << "gamma_in_bound: " << G9(c.gamma_in_bound) << "\n"
      << "gamma_out: " << G9(c.gamma_out) << "\n"
      << "gamma_out_source: " << ToString(c.gamma_out_source) << "\n"
      << "gain_product: " << G9(c.GainProduct()) << "\n"
      << "inner_gain_ok: " << yes(c.inner_gain_ok) << "\n"
      << "small_gain_ok: " << yes(c.small_gain_ok) << "\n"
      << "r_restriction: " << G9(c.r_restriction) << "\n"
      << "r_min: " << G9(c.r_min) << "\n"
      << "lambda1_max: " << G9(c.lambda1_max) << "\n"
      << "lambda1_ok: " << yes(c.lambda1_ok) << "\n"
      << "theta_budget_root: " << G9(c.theta_budget) << "\n"
      << "theta_budget_ok: " << yes(c.theta_budget_ok) << "\n"
      << "x_alpha0: " << G9(c.x_alpha0) << "\n"
      << "x_theta0: " << G9(c.x_theta0) << "\n"
      << "init_ball: " << G9(c.init_ball) << "\n"
      << "init_ok: " << yes(c.init_ok) << "\n"
      << "bound_alpha: " << G9(c.bound_alpha) << "\n"
      << "bound_theta: " << G9(c.bound_theta) << "\n";
  return out.str();
}

std::string FormatMonitor(const MonitorReport& report) {
  std::ostringstream out;
  for (const MonitorCheck& c : report.checks) {
    out << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (c.first_failure) out << " (first failure t=" << Seconds(*c.first_failure) << ")";
    if (!c.detail.empty()) out << " " << c.detail;
    out << "\n";
  }
  return out.str();
}

std::vector<AttainableRow> AttainableSetSample(double eps, int grid,
                                               const PlantParams& p) {
  if (grid < 2) throw PreconditionError("grid must be >= 2");
  if (!(eps >= 0.0)) throw PreconditionError("eps must be >= 0");
  std::vector<double> alphas;
  bool has_vertical = false;
  for (int i = 0; i < grid; ++i) {
    double a = std::min(kPi, kPi * i / (grid - 1));
    if (2 * i == grid - 1) a = kHalfPi;
    has_vertical = has_vertical || IsVertical(a);
    alphas.push_back(a);
  }
  if (!has_vertical) {
    alphas.insert(std::upper_bound(alphas.begin(), alphas.end(), kHalfPi),
                  kHalfPi);
  }
  std::vector<AttainableRow> rows;
  for (double a : alphas) {
    AttainableRow row{a, 0.0, 0.0};
    if (!IsVertical(a)) {
      const double limit = ThetaLimit(a, eps, p);
      const double tilt = kHalfPi - a;
      row.theta_min = a < kHalfPi ? limit : tilt;
      row.theta_max = a < kHalfPi ? tilt : limit;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string FormatAttainableSet(const std::vector<AttainableRow>& rows) {
  std::string out = "alpha_bar,theta_min,theta_max\n";
  for (const AttainableRow& r : rows) {
    out += G9(r.alpha_bar) + "," + G9(r.theta_min) + "," + G9(r.theta_max) +
           "\n";
  }
  return out;
}

}  // namespace tautline
