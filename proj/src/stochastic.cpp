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

#include "rydgate/stochastic.hpp"

#include <cmath>

#include "rydgate/errors.hpp"
#include "rydgate/propagate.hpp"

namespace rydgate {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(~stream))) {}

double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomStream::symmetric_unit() { return 2.0 * uniform() - 1.0; }

NoiseTrace sample_noise_trace(const NoiseSpec& spec, std::size_t segment_count, std::uint64_t trial) {
  if (spec.substeps < 1) throw InvalidParameter("noise substeps must be at least 1");
  if (!(spec.eta_rabi >= 0.0) || !(spec.eta_detuning >= 0.0)) {
    throw InvalidParameter("noise amplitudes must be non-negative");
  }
  RandomStream rng(spec.seed, trial);
  NoiseTrace trace;
  const auto n = static_cast<std::size_t>(spec.substeps);
  trace.rabi.assign(segment_count, std::vector<double>(n));
  trace.detuning.assign(segment_count, std::vector<double>(n));
  for (std::size_t s = 0; s < segment_count; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      trace.rabi[s][k] = 1.0 + spec.eta_rabi * rng.symmetric_unit();
      trace.detuning[s][k] = 1.0 + spec.eta_detuning * rng.symmetric_unit();
    }
  }
  return trace;
}

double MonteCarloResult::standard_error() const {
  return trials > 0 ? stddev / std::sqrt(static_cast<double>(trials)) : 0.0;
}

nlohmann::json to_json(const MonteCarloResult& r) {
  return {{"mean", r.mean},   {"std", r.stddev},           {"trials", r.trials},
          {"seed", r.seed},   {"generator", kGeneratorName}, {"per_trial", r.per_trial}};
}

namespace {

MonteCarloResult summarize(std::vector<double> values, std::uint64_t seed) {
  MonteCarloResult r;
  r.trials = static_cast<int>(values.size());
  r.seed = seed;
  // Shifted by the first value, so identical trials give exactly that value and zero spread.
  const double shift = values.front();
  const auto n = static_cast<double>(values.size());
  double sum = 0.0, ss = 0.0;
  for (double x : values) sum += x - shift;
  const double offset = sum / n;
  r.mean = shift + offset;
  for (double x : values) ss += (x - shift - offset) * (x - shift - offset);
  if (values.size() > 1) r.stddev = std::sqrt(ss / (n - 1.0));
  r.per_trial = std::move(values);
  return r;
}

ThermalSpec with_default_rate(ThermalSpec thermal, double kappa, double v) {
  if (thermal.vibration_rate == 0.0) thermal.vibration_rate = 50.0 * kTwoPi / standard_segment_duration(kappa, v);
  return thermal;
}

}  // namespace

Matrix4 nominal_target(double kappa, double v) {
  const auto phases = gate_phases(evolution_operator(standard_schedule(kappa, v)));
  return cz_target(phases.phi01, phases.phi10);
}

MonteCarloResult monte_carlo_gate_fidelity(double kappa, double v, const NoiseSpec& spec, int trials,
                                           const MonteCarloOptions& options) {
  if (trials < 1) throw InvalidParameter("trials must be at least 1");
  const Schedule base = standard_schedule(kappa, v);
  const Matrix4 target = nominal_target(kappa, v);
  // Integrator steps coincide with the noise steps, so each step is exact.
  const auto config = IntegratorConfig::substepped_with(spec.substeps);
  std::vector<double> values(static_cast<std::size_t>(trials));
  parallel_for(values.size(), options.threads, [&](std::size_t i) {
    Schedule s = base;
    s.noise = sample_noise_trace(spec, s.segments.size(), i);
    values[i] = gate_fidelity(evolution_operator(s, config), target, options.fidelity);
  });
  return summarize(std::move(values), spec.seed);
}

double thermal_gate_fidelity(double kappa, double v, const ThermalSpec& thermal, const ThermalOptions& options) {
  Schedule s = standard_schedule(kappa, v);
  s.thermal = with_default_rate(thermal, kappa, v);
  const Matrix4 target = nominal_target(kappa, v);
  return gate_fidelity(evolution_operator(s, IntegratorConfig::substepped_with(options.substeps)), target,
                       options.fidelity);
}

MonteCarloResult thermal_random_phase_fidelity(double kappa, double v, const ThermalSpec& thermal, int trials,
                                               std::uint64_t seed, const ThermalOptions& options) {
  if (trials < 1) throw InvalidParameter("trials must be at least 1");
  std::vector<double> values(static_cast<std::size_t>(trials));
  parallel_for(values.size(), 0, [&](std::size_t i) {
    RandomStream rng(seed, i);
    ThermalSpec t = thermal;
    t.phase = kTwoPi * rng.uniform();
    values[i] = thermal_gate_fidelity(kappa, v, t, options);
  });
  return summarize(std::move(values), seed);
}

}  // namespace rydgate
