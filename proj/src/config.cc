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

#include "tautline/config.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include "tautline/errors.h"

namespace tautline {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> ParseNumber(std::string_view text) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::string Format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

enum class Kind { kNumber, kAngle };

struct Field {
  const char* key;
  Kind kind;
  std::function<double&(ConfigBundle&)> ref;
};

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = {
      {"m", Kind::kNumber, [](ConfigBundle& b) -> double& { return b.plant.m; }},
      {"j_uav", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.plant.j_uav; }},
      {"i_winch", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.plant.i_winch; }},
      {"rho", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.plant.rho; }},
      {"g", Kind::kNumber, [](ConfigBundle& b) -> double& { return b.plant.g; }},
      {"t_min", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.plant.t_min; }},
      {"k_pr", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.k_pr; }},
      {"k_dr", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.k_dr; }},
      {"lambda1", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.lambda1; }},
      {"lambda2", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.lambda2; }},
      {"k_pa", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.k_pa; }},
      {"k_da", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.k_da; }},
      {"k_pt", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.k_pt; }},
      {"k_dt", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.k_dt; }},
      {"zeta", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.zeta; }},
      {"eps", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.eps; }},
      {"nu", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.gains.nu; }},
      {"theta_tilde_max", Kind::kAngle,
       [](ConfigBundle& b) -> double& { return b.gains.theta_tilde_max; }},
      {"dt", Kind::kNumber, [](ConfigBundle& b) -> double& { return b.sim.dt; }},
      {"t_final", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.sim.t_final; }},
      {"convergence_tol", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.sim.convergence_tol; }},
      {"convergence_dwell", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.sim.convergence_dwell; }},
      {"r0", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.sim.initial.r; }},
      {"r_dot0", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.sim.initial.r_dot; }},
      {"alpha0", Kind::kAngle,
       [](ConfigBundle& b) -> double& { return b.sim.initial.alpha; }},
      {"alpha_dot0", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.sim.initial.alpha_dot; }},
      {"theta0", Kind::kAngle,
       [](ConfigBundle& b) -> double& { return b.sim.initial.theta; }},
      {"theta_dot0", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.sim.initial.theta_dot; }},
      {"r_bar", Kind::kNumber,
       [](ConfigBundle& b) -> double& { return b.sim.reference.r_bar; }},
      {"alpha_bar", Kind::kAngle,
       [](ConfigBundle& b) -> double& { return b.sim.reference.alpha_bar; }},
      {"theta_bar", Kind::kAngle,
       [](ConfigBundle& b) -> double& { return b.sim.reference.theta_bar; }},
  };
  return fields;
}

}  // namespace

SimConfig ConfigBundle::DefaultSimConfig() {
  SimConfig cfg;
  cfg.initial = FullState{1.0, 0.0, kPi / 8.0, 0.0, kPi / 10.0, 0.0};
  cfg.reference = Setpoint{0.5, 9.0 * kPi / 10.0, -kPi / 20.0};
  return cfg;
}

std::optional<double> ParseAngle(std::string_view text) {
  text = Trim(text);
  double sign = 1.0;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    if (text.front() == '-') sign = -1.0;
    std::string_view rest = Trim(text.substr(1));
    if (rest.substr(0, 2) != "pi") return ParseNumber(text);
    text = rest;
  }
  if (text.substr(0, 2) != "pi") return ParseNumber(text);
  text.remove_prefix(2);
  double num = 1.0;
  double den = 1.0;
  text = Trim(text);
  if (!text.empty() && text.front() == '*') {
    text.remove_prefix(1);
    const auto slash = text.find('/');
    const auto n = ParseNumber(text.substr(0, slash));
    if (!n) return std::nullopt;
    num = *n;
    text = slash == std::string_view::npos ? std::string_view{}
                                           : text.substr(slash);
  }
  text = Trim(text);
  if (!text.empty()) {
    if (text.front() != '/') return std::nullopt;
    const auto d = ParseNumber(text.substr(1));
    if (!d || *d == 0.0) return std::nullopt;
    den = *d;
  }
  return sign * kPi * num / den;
}

void ValidateBundle(const ConfigBundle& b) {
  b.plant.Validate();
  b.gains.Validate();
  b.sim.Validate();
  if (b.gamma_out && !(*b.gamma_out >= 0.0)) {
    throw ValidationError("gamma_out", "must be >= 0 or 'estimate'");
  }
  if (b.u3_bound && !(*b.u3_bound > 0.0)) {
    throw ValidationError("u3_bound", "must be > 0");
  }
  if (!(b.sim.reference.r_bar > 0.0)) {
    throw ValidationError("r_bar", "must be > 0");
  }
  if (!(b.sim.reference.alpha_bar >= 0.0 && b.sim.reference.alpha_bar <= kPi)) {
    throw ValidationError("alpha_bar", "must lie in [0, pi]");
  }
  if (!IsAttainable(b.sim.reference, b.gains.eps, b.plant)) {
    throw ValidationError("theta_bar",
                          "reference is outside the attainable set for eps");
  }
}

ConfigBundle ParseConfig(std::string_view text) {
  ConfigBundle b;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigParseError(line_no, "expected 'key = value'");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigParseError(line_no, "missing key");
    if (value.empty()) throw ConfigParseError(line_no, "missing value");
    if (!seen.insert(key).second) {
      throw ConfigParseError(line_no, "duplicate key '" + key + "'");
    }
    auto need = [&](std::optional<double> v) {
      if (!v) {
        throw ConfigParseError(line_no, "cannot parse value '" +
                                            std::string(value) + "' for '" +
                                            key + "'");
      }
      return *v;
    };
    if (key == "mode") {
      try {
        b.sim.mode = ParseScenarioMode(value);
      } catch (const ValidationError& e) {
        throw ConfigParseError(line_no, e.what());
      }
    } else if (key == "gamma_out") {
      if (value == "estimate") {
        b.gamma_out.reset();
      } else {
        b.gamma_out = need(ParseNumber(value));
      }
    } else if (key == "hover_tension") {
      b.gains.hover_tension = need(ParseNumber(value));
    } else if (key == "u3_bound") {
      b.u3_bound = need(ParseNumber(value));
    } else {
      bool found = false;
      for (const Field& f : Fields()) {
        if (key != f.key) continue;
        f.ref(b) = need(f.kind == Kind::kAngle ? ParseAngle(value)
                                               : ParseNumber(value));
        found = true;
        break;
      }
      if (!found) throw ConfigParseError(line_no, "unknown key '" + key + "'");
    }
    if (end == text.size()) break;
  }
  GainConfig& g = b.gains;
  if (!seen.count("k_dr")) g.k_dr = 2.0 * std::sqrt(g.k_pr);
  if (!seen.count("k_da")) g.k_da = 2.0 * g.zeta * std::sqrt(g.k_pa);
  if (!seen.count("k_dt")) g.k_dt = 2.0 * g.zeta * std::sqrt(g.k_pt);
  ValidateBundle(b);
  return b;
}

ConfigBundle LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError(0, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str());
}

std::string EmitConfig(const ConfigBundle& bundle) {
  ConfigBundle b = bundle;
  std::ostringstream out;
  out << "mode = " << ToString(b.sim.mode) << "\n";
  for (const Field& f : Fields()) {
    out << f.key << " = " << Format(f.ref(b)) << "\n";
  }
  out << "gamma_out = "
      << (b.gamma_out ? Format(*b.gamma_out) : std::string("estimate"))
      << "\n";
  if (b.gains.hover_tension) {
    out << "hover_tension = " << Format(*b.gains.hover_tension) << "\n";
  }
  if (b.u3_bound) out << "u3_bound = " << Format(*b.u3_bound) << "\n";
  return out.str();
}

}  // namespace tautline
