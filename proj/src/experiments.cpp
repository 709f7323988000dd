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

#include "rydgate/experiments.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "rydgate/basis.hpp"
#include "rydgate/errors.hpp"
#include "rydgate/hamiltonian.hpp"
#include "rydgate/propagate.hpp"

namespace rydgate {
namespace {

nlohmann::json base_metadata(const std::string& pipeline, UnitMode units) {
  return {{"pipeline", pipeline}, {"tool_version", kToolVersion}, {"units", to_string(units)}};
}

std::vector<Cell> as_cells(const std::vector<double>& values) { return {values.begin(), values.end()}; }

void require_nonempty(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) throw InvalidParameter(std::string(what) + " grid is empty");
}

// Like analyze_gate's fidelity, but never throws: a basis state that does
// not return simply scores low.
double self_compensated_fidelity(const Matrix9& gate) {
  const double phi01 = std::arg(std::conj(gate(1, 1)));
  const double phi10 = std::arg(std::conj(gate(3, 3)));
  return gate_fidelity(gate, cz_target(phi01, phi10));
}

DensityMatrix initial_superposition() { return density_from_state(equal_computational_superposition()); }

DensityMatrix decay_target(const Matrix9& closed, StateTargetMode mode) {
  const DensityMatrix rho = initial_superposition();
  if (mode == StateTargetMode::initial) return rho;
  const auto phases = gate_phases(closed);
  const Matrix9 uz = embed_computational(cz_target(phases.phi01, phases.phi10));
  return uz * rho * uz.adjoint();
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw InvalidParameter("grid needs at least one step");
  if (steps == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
  return out;
}

GateOutcome run_gate(double kappa, double v, FidelityMode mode) {
  return analyze_gate(evolution_operator(standard_schedule(kappa, v)), mode);
}

ScanResult run_dynamics(double kappa, double v, int samples_per_segment) {
  const Schedule schedule = standard_schedule(kappa, v);
  IntegratorConfig config;
  config.samples_per_segment = samples_per_segment;
  ScanResult out;
  out.name = "dynamics";
  out.columns = {"initial", "t"};
  for (auto label : kBasisLabels) out.columns.push_back("P" + std::string(label));
  out.columns.push_back("norm");
  Axis initial{"initial", {}};
  for (auto label : kComputationalLabels) initial.values.emplace_back(std::string(label));
  out.axes.push_back(initial);
  std::vector<PopulationSample> first;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto history =
        propagate_state(schedule, basis_state(BasisIndex(kComputational[k])), config).history;
    if (k == 0) first = history;
    for (const auto& row : history) {
      std::vector<Cell> cells{std::string(kComputationalLabels[k]), row.time};
      for (double p : row.populations) cells.emplace_back(p);
      cells.emplace_back(row.norm);
      out.rows.push_back(std::move(cells));
    }
  }
  Axis time{"t", {}};
  for (const auto& row : first) time.values.emplace_back(row.time);
  out.axes.push_back(time);
  out.metadata = base_metadata("dynamics", schedule.units);
  out.metadata["schedule"] = to_json(schedule);
  out.metadata["kappa"] = kappa;
  out.metadata["v"] = v;
  out.metadata["samples_per_segment"] = samples_per_segment;
  out.check_complete();
  return out;
}

ScanResult scan_kappa(const std::vector<double>& kappas, double v) {
  require_nonempty(kappas, "kappa");
  ScanResult out;
  out.name = "scan-kappa";
  out.axes.push_back({"kappa", as_cells(kappas)});
  out.columns = {"kappa", "delta_gamma", "phi01", "phi10", "phi11", "P00", "P01", "P10", "P11", "fidelity", "leakage"};
  out.rows.resize(kappas.size());
  parallel_for(kappas.size(), 0, [&](std::size_t i) {
    const auto g = run_gate(kappas[i], v);
    out.rows[i] = {kappas[i],         g.delta_gamma,          g.phases.phi01,         g.phases.phi10,
                   g.phases.phi11,    g.return_probabilities[0], g.return_probabilities[1],
                   g.return_probabilities[2], g.return_probabilities[3], g.fidelity, g.leakage};
  });
  out.metadata = base_metadata("scan-kappa", UnitMode::natural);
  out.metadata["v"] = v;
  out.metadata["grid"] = {{"kappa", kappas}};
  out.check_complete();
  return out;
}

ScanResult run_noise_map(const NoiseMapSpec& spec) {
  require_nonempty(spec.eta_rabi, "eta_rabi");
  require_nonempty(spec.eta_detuning, "eta_detuning");
  ScanResult out;
  out.name = "noise-map";
  out.axes = {{"eta_rabi", as_cells(spec.eta_rabi)}, {"eta_detuning", as_cells(spec.eta_detuning)}};
  out.columns = {"eta_rabi", "eta_detuning", "mean_fidelity", "std_fidelity", "stderr_fidelity", "trials"};
  std::size_t cell = 0;
  for (double er : spec.eta_rabi) {
    for (double ed : spec.eta_detuning) {
      const NoiseSpec noise{er, ed, spec.substeps, splitmix64(spec.seed + cell)};
      const auto mc = monte_carlo_gate_fidelity(spec.kappa, spec.v, noise, spec.trials);
      out.rows.push_back({er, ed, mc.mean, mc.stddev, mc.standard_error(), static_cast<double>(mc.trials)});
      ++cell;
    }
  }
  out.metadata = base_metadata("noise-map", UnitMode::natural);
  out.metadata["schedule"] = to_json(standard_schedule(spec.kappa, spec.v));
  out.metadata["seed"] = spec.seed;
  out.metadata["generator"] = kGeneratorName;
  out.metadata["trials"] = spec.trials;
  out.metadata["noise_substeps"] = spec.substeps;
  out.metadata["distribution"] = "uniform[-1,1]";
  out.metadata["grid"] = {{"eta_rabi", spec.eta_rabi}, {"eta_detuning", spec.eta_detuning}};
  out.check_complete();
  return out;
}

ScanResult run_thermal_map(const ThermalMapSpec& spec) {
  require_nonempty(spec.distances, "distance");
  require_nonempty(spec.temperatures, "temperature");
  ScanResult out;
  out.name = "thermal-map";
  out.axes = {{"distance", as_cells(spec.distances)}, {"temperature", as_cells(spec.temperatures)}};
  out.columns = {"distance", "temperature", "fidelity"};
  const std::size_t nt = spec.temperatures.size();
  out.rows.resize(spec.distances.size() * nt);
  parallel_for(out.rows.size(), 0, [&](std::size_t i) {
    ThermalSpec t;
    t.equilibrium_distance = spec.distances[i / nt];
    t.temperature = spec.temperatures[i % nt];
    t.scaling = spec.scaling;
    const double f = thermal_gate_fidelity(spec.kappa, spec.v, t, {spec.substeps, FidelityMode::linear});
    out.rows[i] = {t.equilibrium_distance, t.temperature, f};
  });
  out.metadata = base_metadata("thermal-map", UnitMode::natural);
  out.metadata["schedule"] = to_json(standard_schedule(spec.kappa, spec.v));
  out.metadata["scaling"] = spec.scaling == ThermalScaling::direct ? "direct" : "physical";
  out.metadata["vibration_rate"] = 50.0 * kTwoPi / standard_segment_duration(spec.kappa, spec.v);
  out.metadata["substeps"] = spec.substeps;
  out.metadata["grid"] = {{"distance", spec.distances}, {"temperature", spec.temperatures}};
  out.check_complete();
  return out;
}

Matrix9 interferometer_preparation() {
  Eigen::Matrix3cd q = Eigen::Matrix3cd::Identity();
  const double h = 1.0 / std::sqrt(2.0);
  q(0, 0) = h;
  q(1, 0) = h;
  q(0, 1) = -h;
  q(1, 1) = h;
  Matrix9 b = Matrix9::Zero();
  for (int a = 0; a < 3; ++a) b.block<3, 3>(3 * a, 3 * a) = q;
  return b;
}

InterferometerReadout interferometer_readout(const PulseSegment& segment, double v) {
  const Matrix9 b = interferometer_preparation();
  const StateVector psi = b * step_propagator(build_full(segment, v), segment.duration) * b *
                          basis_state(basis::s10);
  return {std::norm(psi(basis::s10.value())), std::norm(psi(basis::s11.value()))};
}

ScanResult run_interferometer(const InterferometerSpec& spec) {
  require_nonempty(spec.kappas, "kappa");
  ScanResult out;
  out.name = "interfere";
  out.axes.push_back({"kappa", as_cells(spec.kappas)});
  out.columns = {"kappa", "duration", "P10", "P11", "P10_plus_P11"};
  const double fixed = standard_segment_duration(spec.reference_kappa, spec.v);
  for (double kappa : spec.kappas) {
    const double t = spec.duration == DurationMode::fixed ? fixed : standard_segment_duration(kappa, spec.v);
    const PulseSegment seg{kappa * spec.v, -spec.v / 2.0, 0.0, t};
    const auto r = interferometer_readout(seg, spec.v);
    out.rows.push_back({kappa, t, r.p10, r.p11, r.p10 + r.p11});
  }
  out.metadata = base_metadata("interfere", UnitMode::natural);
  out.metadata["v"] = spec.v;
  out.metadata["duration_mode"] = spec.duration == DurationMode::fixed ? "fixed" : "cyclic";
  out.metadata["reference_kappa"] = spec.reference_kappa;
  out.metadata["grid"] = {{"kappa", spec.kappas}};
  out.check_complete();
  return out;
}

ScanResult run_decay_curves(const DecayCurveSpec& spec) {
  require_nonempty(spec.multipliers, "decay multiplier");
  struct Curve {
    std::string label;
    double rabi;
    Schedule schedule;
    IntegratorConfig config;
  };
  std::vector<Curve> curves;
  for (double rabi : spec.rabis) {
    Schedule s = standard_schedule(spec.kappa, rabi / spec.kappa);
    s.units = UnitMode::megahertz;
    curves.push_back({"geometric", rabi, s, IntegratorConfig{}});
  }
  if (spec.compare_time_optimal) {
    curves.push_back({"time-optimal", spec.time_optimal.rabi, time_optimal_schedule(spec.time_optimal),
                      IntegratorConfig::substepped_with(spec.time_optimal_substeps)});
  }
  ScanResult out;
  out.name = "decay";
  Axis curve_axis{"curve", {}};
  for (const auto& c : curves) curve_axis.values.emplace_back(c.label + "@" + format_double(c.rabi));
  out.axes = {curve_axis, {"multiplier", as_cells(spec.multipliers)}};
  out.columns = {"curve", "rabi", "multiplier", "gamma", "fidelity", "trace"};
  const std::size_t nm = spec.multipliers.size();
  out.rows.resize(curves.size() * nm);
  const DensityMatrix rho0 = initial_superposition();
  std::vector<DensityMatrix> targets;
  for (const auto& c : curves) targets.push_back(decay_target(evolution_operator(c.schedule, c.config), spec.target));
  parallel_for(out.rows.size(), 0, [&](std::size_t i) {
    const auto& c = curves[i / nm];
    const double r = spec.multipliers[i % nm];
    const auto decay = DecaySpec::from_multiplier(r, spec.base_rate);
    const Matrix9 u = evolution_operator(c.schedule, decay, c.config);
    const DensityMatrix rho = u * rho0 * u.adjoint();
    out.rows[i] = {c.label, c.rabi, r, decay.gamma, state_fidelity(rho, targets[i / nm]), rho.trace().real()};
  });
  out.metadata = base_metadata("decay", UnitMode::megahertz);
  out.metadata["kappa"] = spec.kappa;
  out.metadata["base_rate"] = spec.base_rate;
  out.metadata["target"] = spec.target == StateTargetMode::ideal_final ? "ideal_final" : "initial";
  out.metadata["schedules"] = nlohmann::json::array();
  for (const auto& c : curves) out.metadata["schedules"].push_back(to_json(c.schedule));
  out.metadata["grid"] = {{"multiplier", spec.multipliers}};
  out.check_complete();
  return out;
}

QuadraticFit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
  QuadraticFit fit;
  if (x.size() != y.size() || x.size() < 3) return fit;
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    a.row(i) << 1.0, xi, xi * xi;
    b(i) = y[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector3d c = a.colPivHouseholderQr().solve(b);
  fit.coefficients = {c(0), c(1), c(2)};
  fit.relative_residual = (a * c - b).norm() / b.norm();
  fit.valid = true;
  return fit;
}

ActuatingResult run_actuating_scan(const ActuatingSpec& spec) {
  if (spec.etas.empty()) throw InvalidParameter("eta list is empty");
  if (spec.phase_steps < 1 || spec.duration_steps < 1) throw InvalidParameter("scan steps must be positive");
  const auto phase_grid = linspace(0.0, kPi, spec.phase_steps);
  const std::size_t np = phase_grid.size();
  const std::size_t phase_cells = spec.independent_phases ? np * np * np : np;
  const auto nd = static_cast<std::size_t>(spec.duration_steps);

  ActuatingResult result;
  ScanResult& out = result.table;
  out.name = "actuate";
  out.axes.push_back({"eta", as_cells(spec.etas)});
  out.columns = {"eta", "v", "rabi", "qualifying_cells", "total_cells", "mean_duration", "actuating", "actuating_over_pi"};
  std::vector<double> fit_x, fit_y;
  for (double eta : spec.etas) {
    if (!(eta > 0.0)) throw InvalidParameter("eta must be positive");
    const double v = eta * kTwoPi;
    const double rabi = spec.mode == ActuatingMode::fixed_omega ? spec.kappa * kTwoPi : spec.kappa * v;
    const double t_max = spec.window_periods * kPi * v / (rabi * rabi);
    std::vector<double> qualifying(phase_cells * nd, 0.0);
    parallel_for(qualifying.size(), 0, [&](std::size_t i) {
      const std::size_t pi = i / nd;
      const double t = t_max * static_cast<double>(i % nd + 1) / static_cast<double>(nd);
      std::array<double, 4> phases{0.0, phase_grid[pi], 0.0, phase_grid[pi]};
      if (spec.independent_phases) {
        phases = {0.0, phase_grid[pi / (np * np)], phase_grid[(pi / np) % np], phase_grid[pi % np]};
      }
      Matrix9 gate = Matrix9::Identity();
      for (double phase : phases) {
        gate = step_propagator(build_full(DriveParameters{rabi, -v / 2.0, phase, v}), t) * gate;
      }
      if (self_compensated_fidelity(gate) > spec.threshold) qualifying[i] = t;
    });
    double sum = 0.0;
    int count = 0;
    for (double t : qualifying) {
      if (t > 0.0) {
        sum += t;
        ++count;
      }
    }
    std::vector<Cell> row{eta, v, rabi, static_cast<double>(count), static_cast<double>(qualifying.size())};
    if (count > 0) {
      const double mean_t = sum / count;
      row.insert(row.end(), {mean_t, 4.0 * v * mean_t, 4.0 * v * mean_t / kPi});
      fit_x.push_back(v);
      fit_y.push_back(4.0 * v * mean_t);
    } else {
      row.insert(row.end(), {std::string(), std::string(), std::string()});
    }
    out.rows.push_back(std::move(row));
  }
  result.fit = fit_quadratic(fit_x, fit_y);
  out.metadata = base_metadata("actuate", UnitMode::natural);
  out.metadata["mode"] = spec.mode == ActuatingMode::fixed_omega ? "fixed-omega" : "fixed-kappa";
  out.metadata["threshold"] = spec.threshold;
  out.metadata["kappa"] = spec.kappa;
  out.metadata["independent_phases"] = spec.independent_phases;
  out.metadata["grid"] = {{"eta", spec.etas},
                          {"phase_steps", spec.phase_steps},
                          {"duration_steps", spec.duration_steps},
                          {"window", "(0, window_periods * pi * v / rabi^2]"},
                          {"window_periods", spec.window_periods}};
  if (result.fit.valid) {
    out.metadata["fit"] = {{"coefficients", result.fit.coefficients},
                           {"relative_residual", result.fit.relative_residual}};
  } else {
    out.metadata["fit"] = nullptr;
  }
  out.check_complete();
  return result;
}

}  // namespace rydgate
