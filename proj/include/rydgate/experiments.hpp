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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rydgate/metrics.hpp"
#include "rydgate/model.hpp"
#include "rydgate/scan.hpp"
#include "rydgate/specs.hpp"
#include "rydgate/stochastic.hpp"

namespace rydgate {

inline constexpr const char* kToolVersion = "rydgate 1.0.0";

std::vector<double> linspace(double lo, double hi, int steps);

GateOutcome run_gate(double kappa, double v, FidelityMode mode = FidelityMode::linear);

// P_k(t) over [0, 4T] for each computational initial state.
ScanResult run_dynamics(double kappa, double v, int samples_per_segment = 100);

ScanResult scan_kappa(const std::vector<double>& kappas, double v);

struct NoiseMapSpec {
  std::vector<double> eta_rabi = linspace(0.0, 0.05, 6);
  std::vector<double> eta_detuning = linspace(0.0, 0.05, 6);
  int trials = 100;
  int substeps = 100;
  std::uint64_t seed = 0;
  double kappa = 1.65;
  double v = kTwoPi;
};

// Cell i of the grid draws from seed splitmix64(seed + i).
ScanResult run_noise_map(const NoiseMapSpec& spec);

struct ThermalMapSpec {
  std::vector<double> distances = linspace(4.0, 8.0, 5);
  std::vector<double> temperatures = linspace(1.0, 20.0, 5);
  ThermalScaling scaling = ThermalScaling::direct;
  int substeps = 4000;
  double kappa = 1.65;
  double v = kTwoPi;
};

ScanResult run_thermal_map(const ThermalMapSpec& spec);

enum class DurationMode {
  fixed,   // T of the reference kappa for every grid point
  cyclic,  // T recomputed from each kappa
};

struct InterferometerSpec {
  std::vector<double> kappas = linspace(1.0, 5.0, 81);
  double v = kTwoPi;
  double reference_kappa = 1.65;
  DurationMode duration = DurationMode::fixed;
};

// I on atom 1, Q on atom 2: |0> -> (|0> + |1>)/sqrt2, |1> -> (|1> - |0>)/sqrt2, |r> -> |r>.
Matrix9 interferometer_preparation();

struct InterferometerReadout {
  double p10 = 0.0;
  double p11 = 0.0;
};

// |10> -> B -> one segment -> B.
InterferometerReadout interferometer_readout(const PulseSegment& segment, double v);

ScanResult run_interferometer(const InterferometerSpec& spec);

struct DecayCurveSpec {
  std::vector<double> rabis = {angular_mhz(5.0), angular_mhz(10.0), angular_mhz(20.0)};
  double kappa = 1.65;
  std::vector<double> multipliers = linspace(0.0, 10.0, 21);
  double base_rate = angular_mhz(0.01);
  bool compare_time_optimal = true;
  TimeOptimalOptions time_optimal;
  int time_optimal_substeps = 2000;
  StateTargetMode target = StateTargetMode::ideal_final;
};

// State fidelity of psi_i = sum_k |k>/2 per curve and decay multiplier (MHz units).
ScanResult run_decay_curves(const DecayCurveSpec& spec);

enum class ActuatingMode { fixed_omega, fixed_kappa };

struct ActuatingSpec {
  std::vector<double> etas = {0.5, 1.0, 2.0, 3.0, 4.0};
  double threshold = 0.96;
  ActuatingMode mode = ActuatingMode::fixed_omega;
  double kappa = 1.65;  // fixed-omega: rabi = kappa * 2 pi; fixed-kappa: rabi = kappa * V
  int phase_steps = 31;
  int duration_steps = 120;
  double window_periods = 8.0;  // T in (0, window_periods * pi V / rabi^2]
  bool independent_phases = false;
};

struct QuadraticFit {
  std::array<double, 3> coefficients{};  // c0 + c1 V + c2 V^2
  double relative_residual = 0.0;
  bool valid = false;
};

QuadraticFit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y);

struct ActuatingResult {
  ScanResult table;
  QuadraticFit fit;
};

ActuatingResult run_actuating_scan(const ActuatingSpec& spec);

}  // namespace rydgate
