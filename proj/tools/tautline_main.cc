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

// Command-line front end: runs scenarios, builds waypoint plans, prints gain
// certificates and samples the attainable-equilibria region.
//
// Exit codes: 0 when every monitor assertion passes, 2 when a run completes
// with a violated assertion (or a certificate cannot be issued), 1 for
// configuration and usage errors.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tautline/config.h"
#include "tautline/errors.h"
#include "tautline/report.h"
#include "tautline/scenario.h"

namespace fs = std::filesystem;
using namespace tautline;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitViolation = 2;

struct CommonFlags {
  std::string config;
  std::string out;
  std::string mode;
  std::optional<double> dt;
  std::optional<double> t_final;
  unsigned long long seed = 1;
};

void AddCommon(CLI::App* app, CommonFlags* f) {
  app->add_option("--config", f->config, "Scenario file (key = value)");
  app->add_option("--out", f->out, "Output directory");
  app->add_option("--mode", f->mode,
                  "ideal-attitude | inner-no-rg | inner-with-rg");
  app->add_option("--dt", f->dt, "Integration step [s]");
  app->add_option("--t-final", f->t_final, "Horizon [s]");
  app->add_option("--seed", f->seed, "Seed for randomized sweeps");
}

ConfigBundle LoadBundle(const CommonFlags& f) {
  ConfigBundle b = f.config.empty() ? ParseConfig("") : LoadConfig(f.config);
  if (!f.mode.empty()) b.sim.mode = ParseScenarioMode(f.mode);
  if (f.dt) b.sim.dt = *f.dt;
  if (f.t_final) b.sim.t_final = *f.t_final;
  ValidateBundle(b);
  return b;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
}

// Writes to <out>/<name> when --out is set, to stdout otherwise.
void Deliver(const CommonFlags& f, const std::string& name,
             const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(f.out);
  WriteText(fs::path(f.out) / name, text);
}

int Simulate(const CommonFlags& f) {
  const ConfigBundle b = LoadBundle(f);
  const ScenarioResult r = RunBundle(b);
  Deliver(f, "trajectory.csv", FormatLog(r.log));
  if (r.setup.plan && !f.out.empty()) {
    WriteText(fs::path(f.out) / "plan.csv", FormatPlan(*r.setup.plan));
  }
  std::cerr << "mode: " << ToString(b.sim.mode) << "\n";
  if (r.setup.plan) {
    std::cerr << "waypoints: " << r.setup.plan->waypoints.size() << "\n";
  }
  std::cerr << FormatMonitor(r.report);
  return r.report.AllPass() ? kExitOk : kExitViolation;
}

int Plan(const CommonFlags& f) {
  const ConfigBundle b = LoadBundle(f);
  const ScenarioSetup setup = PrepareScenario(b, /*force_plan=*/true);
  Deliver(f, "plan.csv", FormatPlan(*setup.plan));
  std::cerr << "waypoints: " << setup.plan->waypoints.size()
            << "\nmin_radii: " << setup.plan->min_radii.dx_alpha << " "
            << setup.plan->min_radii.dx_theta << "\n";
  return kExitOk;
}

int Certify(const CommonFlags& f) {
  const ConfigBundle b = LoadBundle(f);
  const Setpoint start = StartSetpoint(b.sim.initial);
  const RadialEnvelope env =
      IsAttainable(start, b.gains.eps, b.plant)
          ? PlanEnvelope(start, b.sim.reference, b.gains)
          : ComputeRadialEnvelope(b.sim.initial.r, b.sim.initial.r_dot,
                                  b.sim.reference.r_bar, b.gains);
  const GainCertificate cert = CertifyBundle(b, env);
  Deliver(f, "certificate.txt", FormatCertificate(cert));
  return cert.small_gain_ok ? kExitOk : kExitViolation;
}

int Attainable(const CommonFlags& f, std::optional<double> eps, int grid) {
  const ConfigBundle b = LoadBundle(f);
  const auto rows =
      AttainableSetSample(eps ? *eps : b.gains.eps, grid, b.plant);
  Deliver(f, "attainable_set.csv", FormatAttainableSet(rows));
  return kExitOk;
}

std::string Outcome(const ScenarioResult& r) {
  std::string s = r.report.AllPass() ? "pass" : "FAIL";
  const TrajectoryEvents& e = r.log.events;
  if (e.tension_violation) {
    s += " tension_violation=" + std::to_string(*e.tension_violation);
  }
  if (e.convergence) s += " convergence=" + std::to_string(*e.convergence);
  return s;
}

int SweepDirectory(const CommonFlags& f, const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".cfg") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ConfigParseError(0, "no .cfg files in " + dir);
  // Parse everything first so a bad file fails the sweep before any run.
  std::vector<ConfigBundle> bundles;
  for (const fs::path& p : files) {
    CommonFlags one = f;
    one.config = p.string();
    bundles.push_back(LoadBundle(one));
  }
  std::vector<std::future<ScenarioResult>> runs;
  for (const ConfigBundle& b : bundles) {
    runs.push_back(std::async(std::launch::async, RunBundle, b));
  }
  if (!f.out.empty()) fs::create_directories(f.out);
  int code = kExitOk;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const ScenarioResult r = runs[i].get();
    if (!f.out.empty()) {
      EmitLog(r.log, (fs::path(f.out) / files[i].stem()).string() + ".csv");
    }
    std::cout << files[i].stem().string() << " "
              << ToString(bundles[i].sim.mode) << " " << Outcome(r) << "\n";
    if (!r.report.AllPass()) code = kExitViolation;
  }
  return code;
}

int SweepRandom(const CommonFlags& f, int count) {
  ConfigBundle base = LoadBundle(f);
  base.sim.mode = ScenarioMode::kInnerWithGovernor;
  std::mt19937_64 rng(f.seed);
  std::vector<ConfigBundle> bundles;
  for (int i = 0; i < count; ++i) {
    ConfigBundle b = base;
    const Setpoint start = SampleAttainable(rng, b.gains.eps, b.plant);
    b.sim.reference = SampleAttainable(rng, b.gains.eps, b.plant);
    b.sim.initial = FullState{start.r_bar, 0.0, start.alpha_bar,
                              0.0,         start.theta_bar, 0.0};
    bundles.push_back(b);
  }
  auto run = [](const ConfigBundle& b) -> std::optional<ScenarioResult> {
    try {
      return RunBundle(b);
    } catch (const InfeasibleError&) {
      return std::nullopt;
    }
  };
  std::vector<std::future<std::optional<ScenarioResult>>> runs;
  for (const ConfigBundle& b : bundles) {
    runs.push_back(std::async(std::launch::async, run, b));
  }
  int code = kExitOk;
  for (int i = 0; i < count; ++i) {
    const auto r = runs[i].get();
    std::cout << "pair " << i << " ";
    if (!r) {
      std::cout << "no certificate\n";
      continue;
    }
    std::cout << r->setup.plan->waypoints.size() << " waypoints "
              << Outcome(*r) << "\n";
    if (!r->report.AllPass()) code = kExitViolation;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tethered UAV simulation and verification toolkit"};
  app.require_subcommand(1);
  CommonFlags flags;

  CLI::App* simulate = app.add_subcommand("simulate", "Run one scenario");
  CLI::App* plan = app.add_subcommand("plan", "Print the waypoint plan");
  CLI::App* certify =
      app.add_subcommand("certify", "Print the gain certificate");
  CLI::App* attainable = app.add_subcommand(
      "attainable-set", "Sample the attainable-equilibria region");
  CLI::App* sweep = app.add_subcommand("sweep", "Run a batch of scenarios");
  for (CLI::App* sub : {simulate, plan, certify, attainable, sweep}) {
    AddCommon(sub, &flags);
  }
  std::optional<double> eps;
  int grid = 181;
  attainable->add_option("--eps", eps, "Tension margin [N]");
  attainable->add_option("--grid", grid, "Number of elevation samples")
      ->check(CLI::Range(2, 1000000));
  std::string config_dir;
  int random_pairs = 0;
  auto* dir_opt =
      sweep->add_option("--config-dir", config_dir, "Directory of .cfg files");
  sweep->add_option("--random", random_pairs,
                    "Random governed (start, final) pairs")
      ->excludes(dir_opt)
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*simulate) return Simulate(flags);
    if (*plan) return Plan(flags);
    if (*certify) return Certify(flags);
    if (*attainable) return Attainable(flags, eps, grid);
    if (*sweep) {
      if (random_pairs > 0) return SweepRandom(flags, random_pairs);
      if (config_dir.empty()) {
        std::cerr << "sweep needs --config-dir or --random\n";
        return kExitConfig;
      }
      return SweepDirectory(flags, config_dir);
    }
  } catch (const ConfigParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ValidationError& e) {
    std::cerr << "invalid value for " << e.key() << ": " << e.what() << "\n";
    return kExitConfig;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
