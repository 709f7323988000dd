// Copyright 2026 The rydgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rydgate/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rydgate/config.hpp"
#include "rydgate/errors.hpp"
#include "rydgate/experiments.hpp"
#include "rydgate/propagate.hpp"
#include "rydgate/stochastic.hpp"

namespace rydgate {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Flag if given, else config value, else default.
template <typename T>
T pick(const CLI::Option* flag, const T& flag_value, const std::optional<T>& config_value, const T& fallback) {
  if (flag->count() > 0) return flag_value;
  return config_value.value_or(fallback);
}

std::uint64_t parse_seed(const std::string& text, const char* source) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigError(std::string("invalid seed from ") + source + ": '" + text + "'");
  }
  return v;
}

struct Globals {
  std::string units_text;
  std::string seed_text;
  std::string out;
  std::string config_path;
  std::string fidelity_text = "linear";
  CLI::Option* units_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

struct Context {
  Config config;
  UnitMode units = UnitMode::natural;
  bool units_explicit = false;
  std::uint64_t seed = 0;
  std::string seed_source = "default";
  FidelityMode fidelity = FidelityMode::linear;
  std::string out;
  json invocation;
};

Context make_context(const Globals& g, const std::vector<std::string>& args) {
  Context c;
  if (!g.config_path.empty()) c.config = load_config(g.config_path);
  if (g.units_opt->count() > 0) {
    c.units = parse_unit_mode(g.units_text);
    c.units_explicit = true;
  } else if (c.config.units) {
    c.units = *c.config.units;
    c.units_explicit = true;
  }
  if (g.seed_opt->count() > 0) {
    c.seed = parse_seed(g.seed_text, "--seed");
    c.seed_source = "flag";
  } else if (c.config.noise.seed) {
    c.seed = *c.config.noise.seed;
    c.seed_source = "config";
  } else if (const char* env = std::getenv("RYDGATE_SEED"); env && *env) {
    c.seed = parse_seed(env, "RYDGATE_SEED");
    c.seed_source = "RYDGATE_SEED";
  }
  if (g.fidelity_text == "linear") {
    c.fidelity = FidelityMode::linear;
  } else if (g.fidelity_text == "squared") {
    c.fidelity = FidelityMode::squared;
  } else {
    throw ConfigError("unknown fidelity mode '" + g.fidelity_text + "'");
  }
  c.out = g.out;
  c.invocation = args;
  return c;
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open output file " + path.string());
  body(f);
  if (!f) throw ConfigError("failed writing " + path.string());
}

bool wants_json(const std::string& out) { return fs::path(out).extension() == ".json"; }

void annotate(json& metadata, const Context& c) {
  metadata["seed"] = c.seed;
  metadata["seed_source"] = c.seed_source;
  metadata["units"] = to_string(c.units);
  metadata["invocation"] = c.invocation;
}

void emit_table(ScanResult result, const Context& c, std::ostream& out) {
  annotate(result.metadata, c);
  if (c.out.empty()) {
    write_csv(out, result);
  } else if (wants_json(c.out)) {
    write_file(c.out, [&](std::ostream& f) { f << to_json(result).dump(2) << '\n'; });
  } else {
    write_file(c.out, [&](std::ostream& f) { write_csv(f, result); });
    write_file(c.out + ".meta.json", [&](std::ostream& f) { f << result.metadata.dump(2) << '\n'; });
  }
}

void emit_json(const json& doc, const Context& c, std::ostream& out) {
  if (c.out.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    write_file(c.out, [&](std::ostream& f) { f << doc.dump(2) << '\n'; });
  }
}

ThermalScaling parse_scaling(const std::string& s) {
  if (s == "direct") return ThermalScaling::direct;
  if (s == "physical") return ThermalScaling::physical;
  throw ConfigError("unknown thermal scaling '" + s + "'");
}

void require_natural(const Context& c, const char* command) {
  if (c.units_explicit && c.units != UnitMode::natural) {
    throw ConfigError(std::string(command) + " runs in natural units");
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric controlled-phase gate simulator for two Rydberg atoms", "rydgate"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);
  Globals g;
  g.units_opt = app.add_option("--units", g.units_text, "Unit mode: natural or mhz");
  g.seed_opt = app.add_option("--seed", g.seed_text, "RNG seed (falls back to RYDGATE_SEED)");
  app.add_option("--out", g.out, "Output file; .json selects JSON, anything else CSV plus <out>.meta.json");
  app.add_option("--config", g.config_path, "JSON config file");
  app.add_option("--fidelity", g.fidelity_text, "Gate fidelity normalization: linear or squared");

  std::function<void(Context&)> action;
  const auto on = [&](CLI::App* sub, std::function<void(Context&)> f) {
    sub->callback([&action, f] { action = f; });
  };

  // gate
  double gate_kappa = 1.65, gate_v = kTwoPi, gate_rate = TimeOptimalOptions::default_rate, gate_eta = 0.0;
  int gate_trials = 0;
  bool gate_time_optimal = false;
  auto* gate = app.add_subcommand("gate", "Analyze one gate: phases, delta gamma, fidelity");
  auto* gk = gate->add_option("--kappa", gate_kappa, "Omega / V")->check(CLI::PositiveNumber);
  auto* gv = gate->add_option("--v", gate_v, "Interaction V")->check(CLI::PositiveNumber);
  gate->add_flag("--time-optimal", gate_time_optimal, "Analyze the time-optimal comparison waveform");
  gate->add_option("--time-optimal-rate", gate_rate, "Phase-drive rate in units of the carrier Rabi frequency");
  auto* ge = gate->add_option("--eta", gate_eta, "Noise amplitude on both channels")->check(CLI::NonNegativeNumber);
  auto* gt = gate->add_option("--trials", gate_trials, "Monte-Carlo trials for --eta")->check(CLI::PositiveNumber);
  on(gate, [&](Context& c) {
    json doc;
    Schedule schedule;
    IntegratorConfig integrator;
    const double kappa = pick(gk, gate_kappa, c.config.scan.kappa, 1.65);
    const double v = pick(gv, gate_v, c.config.scan.v, kTwoPi);
    if (gate_time_optimal) {
      TimeOptimalOptions o;
      o.rate_factor = gate_rate;
      schedule = time_optimal_schedule(o);
      integrator = IntegratorConfig::substepped_with(2000);
    } else if (c.config.schedule && gk->count() == 0 && gv->count() == 0) {
      schedule = *c.config.schedule;
      if (schedule.time_dependent()) integrator = IntegratorConfig::substepped_with(2000);
    } else {
      schedule = standard_schedule(kappa, v);
    }
    if (c.units_explicit) schedule.units = c.units;
    doc = to_json(analyze_gate(evolution_operator(schedule, integrator), c.fidelity));
    doc["schedule"] = to_json(schedule);
    const double eta = pick(ge, gate_eta, c.config.noise.eta_rabi, 0.0);
    const int trials = pick(gt, gate_trials, c.config.noise.trials, 0);
    if (trials > 0) {
      NoiseSpec noise{eta, pick(ge, gate_eta, c.config.noise.eta_detuning, eta), c.config.noise.substeps.value_or(100),
                      c.seed};
      doc["monte_carlo"] = to_json(monte_carlo_gate_fidelity(kappa, v, noise, trials, {c.fidelity, 0}));
    }
    if (c.config.thermal.temperature || c.config.thermal.distance) {
      const auto& tc = c.config.thermal;
      ThermalSpec t;
      t.equilibrium_distance = tc.distance.value_or(t.equilibrium_distance);
      t.temperature = tc.temperature.value_or(0.0);
      t.vibration_rate = tc.vibration_rate.value_or(0.0);
      t.phase = tc.phase.value_or(0.0);
      t.scaling = parse_scaling(tc.scaling.value_or("direct"));
      doc["thermal_fidelity"] =
          thermal_gate_fidelity(kappa, v, t, {tc.substeps.value_or(4000), c.fidelity});
    }
    doc["tool_version"] = kToolVersion;
    doc["seed"] = c.seed;
    doc["units"] = to_string(schedule.units);
    emit_json(doc, c, out);
  });

  // dynamics
  double dyn_kappa = 1.65, dyn_v = kTwoPi;
  int dyn_samples = 100;
  auto* dyn = app.add_subcommand("dynamics", "Population dynamics of the computational states");
  auto* dk = dyn->add_option("--kappa", dyn_kappa)->check(CLI::PositiveNumber);
  auto* dv = dyn->add_option("--v", dyn_v)->check(CLI::PositiveNumber);
  auto* ds = dyn->add_option("--samples", dyn_samples, "Samples per segment")->check(CLI::PositiveNumber);
  on(dyn, [&](Context& c) {
    emit_table(run_dynamics(pick(dk, dyn_kappa, c.config.scan.kappa, 1.65), pick(dv, dyn_v, c.config.scan.v, kTwoPi),
                            pick(ds, dyn_samples, c.config.scan.samples, 100)),
               c, out);
  });

  // scan-kappa
  double sk_min = 0.2, sk_max = 5.0, sk_v = kTwoPi;
  int sk_steps = 49;
  auto* sk = app.add_subcommand("scan-kappa", "Controlled phase versus kappa");
  auto* skmin = sk->add_option("--min", sk_min)->check(CLI::PositiveNumber);
  auto* skmax = sk->add_option("--max", sk_max)->check(CLI::PositiveNumber);
  auto* sksteps = sk->add_option("--steps", sk_steps)->check(CLI::PositiveNumber);
  auto* skv = sk->add_option("--v", sk_v)->check(CLI::PositiveNumber);
  on(sk, [&](Context& c) {
    require_natural(c, "scan-kappa");
    const auto grid = linspace(pick(skmin, sk_min, c.config.scan.min, 0.2), pick(skmax, sk_max, c.config.scan.max, 5.0),
                               pick(sksteps, sk_steps, c.config.scan.steps, 49));
    emit_table(scan_kappa(grid, pick(skv, sk_v, c.config.scan.v, kTwoPi)), c, out);
  });

  // noise-map
  double nm_eta_max = 0.05;
  int nm_steps = 6, nm_trials = 100, nm_substeps = 100;
  auto* nm = app.add_subcommand("noise-map", "Mean gate fidelity over a grid of noise amplitudes");
  auto* nmeta = nm->add_option("--eta-max", nm_eta_max)->check(CLI::NonNegativeNumber);
  auto* nmsteps = nm->add_option("--steps", nm_steps, "Grid points per axis")->check(CLI::PositiveNumber);
  auto* nmtrials = nm->add_option("--trials", nm_trials)->check(CLI::PositiveNumber);
  auto* nmsub = nm->add_option("--substeps", nm_substeps, "Noise samples per segment")->check(CLI::PositiveNumber);
  on(nm, [&](Context& c) {
    require_natural(c, "noise-map");
    NoiseMapSpec spec;
    const double eta_max = pick(nmeta, nm_eta_max, c.config.noise.eta_rabi, 0.05);
    const int steps = pick(nmsteps, nm_steps, c.config.scan.steps, 6);
    spec.eta_rabi = linspace(0.0, eta_max, steps);
    spec.eta_detuning = linspace(0.0, pick(nmeta, nm_eta_max, c.config.noise.eta_detuning, eta_max), steps);
    spec.trials = pick(nmtrials, nm_trials, c.config.noise.trials, 100);
    spec.substeps = pick(nmsub, nm_substeps, c.config.noise.substeps, 100);
    spec.seed = c.seed;
    spec.kappa = c.config.scan.kappa.value_or(1.65);
    spec.v = c.config.scan.v.value_or(kTwoPi);
    emit_table(run_noise_map(spec), c, out);
  });

  // thermal-map
  double tm_dmin = 4.0, tm_dmax = 8.0, tm_tmin = 1.0, tm_tmax = 20.0;
  int tm_dsteps = 5, tm_tsteps = 5, tm_substeps = 4000;
  std::string tm_scaling = "direct";
  auto* tm = app.add_subcommand("thermal-map", "Gate fidelity versus atom spacing and temperature");
  tm->add_option("--distance-min", tm_dmin)->check(CLI::PositiveNumber);
  tm->add_option("--distance-max", tm_dmax)->check(CLI::PositiveNumber);
  tm->add_option("--distance-steps", tm_dsteps)->check(CLI::PositiveNumber);
  tm->add_option("--temperature-min", tm_tmin)->check(CLI::NonNegativeNumber);
  tm->add_option("--temperature-max", tm_tmax)->check(CLI::NonNegativeNumber);
  tm->add_option("--temperature-steps", tm_tsteps)->check(CLI::PositiveNumber);
  auto* tmscale = tm->add_option("--scaling", tm_scaling, "direct: V (D/L)^6, physical: V (L/D)^6");
  auto* tmsub = tm->add_option("--substeps", tm_substeps)->check(CLI::PositiveNumber);
  on(tm, [&](Context& c) {
    require_natural(c, "thermal-map");
    ThermalMapSpec spec;
    spec.distances = linspace(tm_dmin, tm_dmax, tm_dsteps);
    spec.temperatures = linspace(tm_tmin, tm_tmax, tm_tsteps);
    spec.scaling = parse_scaling(pick(tmscale, tm_scaling, c.config.thermal.scaling, std::string("direct")));
    spec.substeps = pick(tmsub, tm_substeps, c.config.thermal.substeps, 4000);
    spec.kappa = c.config.scan.kappa.value_or(1.65);
    spec.v = c.config.scan.v.value_or(kTwoPi);
    emit_table(run_thermal_map(spec), c, out);
  });

  // interfere
  double if_min = 1.0, if_max = 5.0, if_ref = 1.65;
  int if_steps = 81;
  std::string if_duration = "fixed";
  auto* itf = app.add_subcommand("interfere", "Interferometer populations versus kappa");
  auto* ifmin = itf->add_option("--min", if_min)->check(CLI::PositiveNumber);
  auto* ifmax = itf->add_option("--max", if_max)->check(CLI::PositiveNumber);
  auto* ifsteps = itf->add_option("--steps", if_steps)->check(CLI::PositiveNumber);
  auto* ifref = itf->add_option("--reference-kappa", if_ref, "Kappa fixing the segment duration")
                    ->check(CLI::PositiveNumber);
  auto* ifdur = itf->add_option("--duration", if_duration, "fixed or cyclic");
  on(itf, [&](Context& c) {
    require_natural(c, "interfere");
    InterferometerSpec spec;
    spec.kappas = linspace(pick(ifmin, if_min, c.config.scan.min, 1.0), pick(ifmax, if_max, c.config.scan.max, 5.0),
                           pick(ifsteps, if_steps, c.config.scan.steps, 81));
    spec.reference_kappa = pick(ifref, if_ref, c.config.scan.reference_kappa, 1.65);
    spec.v = c.config.scan.v.value_or(kTwoPi);
    const auto mode = pick(ifdur, if_duration, c.config.scan.duration_mode, std::string("fixed"));
    if (mode == "fixed") {
      spec.duration = DurationMode::fixed;
    } else if (mode == "cyclic") {
      spec.duration = DurationMode::cyclic;
    } else {
      throw ConfigError("unknown duration mode '" + mode + "'");
    }
    emit_table(run_interferometer(spec), c, out);
  });

  // decay
  std::vector<double> dc_rabis{5.0, 10.0, 20.0};
  double dc_max = 10.0, dc_base = 0.01, dc_rate = TimeOptimalOptions::default_rate;
  int dc_steps = 21;
  bool dc_no_to = false;
  std::string dc_target = "ideal";
  auto* dc = app.add_subcommand("decay", "State fidelity versus Rydberg decay rate (MHz units)");
  auto* dcr = dc->add_option("--rabi-mhz", dc_rabis, "Rabi frequencies / 2pi in MHz")->delimiter(',');
  auto* dcmax = dc->add_option("--max-multiplier", dc_max)->check(CLI::NonNegativeNumber);
  auto* dcsteps = dc->add_option("--steps", dc_steps)->check(CLI::PositiveNumber);
  auto* dcbase = dc->add_option("--base-rate-mhz", dc_base, "Gamma_0 / 2pi in MHz")->check(CLI::NonNegativeNumber);
  dc->add_flag("--no-time-optimal", dc_no_to, "Skip the time-optimal comparison curve");
  auto* dcrate = dc->add_option("--time-optimal-rate", dc_rate);
  auto* dctarget = dc->add_option("--target", dc_target, "ideal (compensated Cz image) or initial");
  on(dc, [&](Context& c) {
    if (c.units_explicit && c.units != UnitMode::megahertz) throw ConfigError("decay runs in MHz units");
    c.units = UnitMode::megahertz;
    DecayCurveSpec spec;
    spec.rabis.clear();
    for (double r : pick(dcr, dc_rabis, c.config.decay.rabis_mhz, dc_rabis)) spec.rabis.push_back(angular_mhz(r));
    spec.multipliers = linspace(0.0, pick(dcmax, dc_max, c.config.decay.max_multiplier, 10.0),
                                pick(dcsteps, dc_steps, c.config.decay.steps, 21));
    spec.base_rate = angular_mhz(pick(dcbase, dc_base, c.config.decay.base_rate, 0.01));
    spec.compare_time_optimal = !dc_no_to && c.config.decay.compare_time_optimal.value_or(true);
    spec.time_optimal.rate_factor =
        pick(dcrate, dc_rate, c.config.scan.time_optimal_rate, TimeOptimalOptions::default_rate);
    const auto target = pick(dctarget, dc_target, c.config.decay.target, std::string("ideal"));
    if (target == "ideal") {
      spec.target = StateTargetMode::ideal_final;
    } else if (target == "initial") {
      spec.target = StateTargetMode::initial;
    } else {
      throw ConfigError("unknown state target '" + target + "'");
    }
    emit_table(run_decay_curves(spec), c, out);
  });

  // actuate
  std::vector<double> ac_etas{0.5, 1.0, 2.0, 3.0, 4.0};
  double ac_threshold = 0.96, ac_window = 8.0;
  int ac_phase_steps = 31, ac_duration_steps = 120;
  std::string ac_mode = "fixed-omega";
  bool ac_independent = false;
  auto* ac = app.add_subcommand("actuate", "Actuating quantity V*4T versus interaction strength");
  auto* acetas = ac->add_option("--etas", ac_etas, "V / 2pi values")->delimiter(',');
  auto* acth = ac->add_option("--threshold", ac_threshold);
  auto* acmode = ac->add_option("--mode", ac_mode, "fixed-omega or fixed-kappa");
  auto* acps = ac->add_option("--phase-steps", ac_phase_steps)->check(CLI::PositiveNumber);
  auto* acds = ac->add_option("--duration-steps", ac_duration_steps)->check(CLI::PositiveNumber);
  auto* acw = ac->add_option("--window-periods", ac_window)->check(CLI::PositiveNumber);
  ac->add_flag("--independent-phases", ac_independent, "Scan three segment phases independently");
  on(ac, [&](Context& c) {
    require_natural(c, "actuate");
    ActuatingSpec spec;
    spec.etas = pick(acetas, ac_etas, c.config.scan.etas, ac_etas);
    spec.threshold = pick(acth, ac_threshold, c.config.scan.threshold, 0.96);
    const auto mode = pick(acmode, ac_mode, c.config.scan.mode, std::string("fixed-omega"));
    if (mode == "fixed-omega") {
      spec.mode = ActuatingMode::fixed_omega;
    } else if (mode == "fixed-kappa") {
      spec.mode = ActuatingMode::fixed_kappa;
    } else {
      throw ConfigError("unknown actuating mode '" + mode + "'");
    }
    spec.kappa = c.config.scan.kappa.value_or(1.65);
    spec.phase_steps = pick(acps, ac_phase_steps, c.config.scan.phase_steps, 31);
    spec.duration_steps = pick(acds, ac_duration_steps, c.config.scan.duration_steps, 120);
    spec.window_periods = pick(acw, ac_window, c.config.scan.window_periods, 8.0);
    spec.independent_phases = ac_independent || c.config.scan.independent_phases.value_or(false);
    emit_table(run_actuating_scan(spec).table, c, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    std::vector<std::string> args(argv, argv + argc);
    Context c = make_context(g, args);
    action(c);
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rydgate
