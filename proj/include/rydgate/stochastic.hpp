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
#include <random>
#include <vector>

#include <json.hpp>

#include "rydgate/metrics.hpp"
#include "rydgate/model.hpp"
#include "rydgate/specs.hpp"

namespace rydgate {

inline constexpr const char* kGeneratorName = "mt19937_64/splitmix64";

std::uint64_t splitmix64(std::uint64_t x);

// mt19937_64 seeded from splitmix64(seed, stream); uniform doubles use the
// top 53 bits so the sequence is identical on every platform.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);
  double uniform();          // [0, 1)
  double symmetric_unit();   // [-1, 1)

 private:
  std::mt19937_64 engine_;
};

// Multipliers 1 + eta R with R uniform on [-1, 1), one draw per substep and channel.
NoiseTrace sample_noise_trace(const NoiseSpec& spec, std::size_t segment_count, std::uint64_t trial = 0);

struct MonteCarloResult {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single trial
  int trials = 0;
  std::vector<double> per_trial;
  std::uint64_t seed = 0;

  double standard_error() const;
};

nlohmann::json to_json(const MonteCarloResult& result);

struct MonteCarloOptions {
  FidelityMode fidelity = FidelityMode::linear;
  unsigned threads = 0;  // 0 picks hardware concurrency
};

// Nominal standard gate with its local phases; noisy and thermal runs are scored against it.
Matrix4 nominal_target(double kappa, double v);

MonteCarloResult monte_carlo_gate_fidelity(double kappa, double v, const NoiseSpec& spec, int trials,
                                           const MonteCarloOptions& options = {});

struct ThermalOptions {
  int substeps = 4000;
  FidelityMode fidelity = FidelityMode::linear;
};

// Vibration rate 0 in `thermal` selects 50 oscillations per segment.
double thermal_gate_fidelity(double kappa, double v, const ThermalSpec& thermal, const ThermalOptions& options = {});

// Averages over a uniformly random initial oscillation phase.
MonteCarloResult thermal_random_phase_fidelity(double kappa, double v, const ThermalSpec& thermal, int trials,
                                               std::uint64_t seed, const ThermalOptions& options = {});

// Runs f(i) for i in [0, n) on a small thread pool. The lowest failing index
// is rethrown as IntegratorFailure naming that index.
template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& f);

}  // namespace rydgate

#include "rydgate/detail/parallel.hpp"
