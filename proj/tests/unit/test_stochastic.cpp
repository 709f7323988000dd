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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rydgate/errors.hpp"
#include "rydgate/experiments.hpp"
#include "rydgate/stochastic.hpp"

using namespace rydgate;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

TEST_CASE("Noise traces", "[stochastic]") {
  SECTION("zero amplitude gives unit multipliers") {
    const auto t = sample_noise_trace(NoiseSpec{0.0, 0.0, 100, 42}, 4);
    REQUIRE(t.rabi.size() == 4);
    for (std::size_t s = 0; s < 4; ++s) {
      REQUIRE(t.rabi[s].size() == 100);
      for (std::size_t k = 0; k < 100; ++k) {
        REQUIRE(t.rabi[s][k] == 1.0);
        REQUIRE(t.detuning[s][k] == 1.0);
      }
    }
  }
  SECTION("deterministic per seed and trial") {
    const NoiseSpec spec{0.05, 0.03, 50, 7};
    const auto a = sample_noise_trace(spec, 4, 3);
    const auto b = sample_noise_trace(spec, 4, 3);
    REQUIRE(a.rabi == b.rabi);
    REQUIRE(a.detuning == b.detuning);
    REQUIRE(a.rabi != sample_noise_trace(spec, 4, 4).rabi);
    NoiseSpec other = spec;
    other.seed = 8;
    REQUIRE(a.rabi != sample_noise_trace(other, 4, 3).rabi);
  }
  SECTION("sampler statistics") {
    const auto t = sample_noise_trace(NoiseSpec{1.0, 1.0, 100000, 11}, 1);
    const auto& r = t.rabi[0];
    const double mean = std::accumulate(r.begin(), r.end(), 0.0) / r.size() - 1.0;
    REQUIRE(std::abs(mean) < 0.01);
    const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
    REQUIRE(*lo >= 0.0);
    REQUIRE(*hi <= 2.0);
    REQUIRE(*lo < 0.01);
    REQUIRE(*hi > 1.99);
  }
  SECTION("piecewise lookup") {
    NoiseTrace t;
    t.rabi = {{1.0, 2.0, 3.0, 4.0}};
    t.detuning = t.rabi;
    REQUIRE(t.rabi_at(0, 0.0, 1.0) == 1.0);
    REQUIRE(t.rabi_at(0, 0.3, 1.0) == 2.0);
    REQUIRE(t.rabi_at(0, 1.0, 1.0) == 4.0);
  }
  SECTION("uniform draws are platform independent") {
    RandomStream a(123, 0), b(123, 0);
    for (int i = 0; i < 100; ++i) {
      const double x = a.uniform();
      REQUIRE(x == b.uniform());
      REQUIRE(x >= 0.0);
      REQUIRE(x < 1.0);
    }
  }
}

TEST_CASE("Monte-Carlo gate fidelity", "[stochastic]") {
  const double nominal = run_gate(1.65, kTwoPi).fidelity;
  SECTION("noise free trials reproduce the nominal gate") {
    const auto r = monte_carlo_gate_fidelity(1.65, kTwoPi, NoiseSpec{0.0, 0.0, 100, 1}, 3);
    REQUIRE(r.stddev == 0.0);
    REQUIRE_THAT(r.mean, WithinAbs(nominal, 1e-10));
  }
  SECTION("aggregation and serialization") {
    const auto r = monte_carlo_gate_fidelity(1.65, kTwoPi, NoiseSpec{0.05, 0.05, 100, 5}, 12);
    REQUIRE(r.trials == 12);
    REQUIRE(r.per_trial.size() == 12);
    const double mean = std::accumulate(r.per_trial.begin(), r.per_trial.end(), 0.0) / 12.0;
    REQUIRE_THAT(r.mean, WithinAbs(mean, 1e-12));
    REQUIRE(r.mean >= 0.995);
    const auto doc = to_json(r);
    REQUIRE(doc["seed"] == 5);
    REQUIRE(doc["generator"] == "mt19937_64/splitmix64");
    REQUIRE(doc["per_trial"].size() == 12);
  }
  SECTION("bit-identical regardless of thread count") {
    const NoiseSpec spec{0.04, 0.02, 100, 99};
    const auto one = monte_carlo_gate_fidelity(1.65, kTwoPi, spec, 8, {FidelityMode::linear, 1});
    const auto many = monte_carlo_gate_fidelity(1.65, kTwoPi, spec, 8, {FidelityMode::linear, 4});
    REQUIRE(one.per_trial == many.per_trial);
    REQUIRE(one.mean == many.mean);
  }
  SECTION("fidelity falls as the noise grows") {
    double previous = 2.0, previous_se = 0.0;
    for (double eta : {0.0, 0.025, 0.05}) {
      const auto r = monte_carlo_gate_fidelity(1.65, kTwoPi, NoiseSpec{eta, eta, 100, 3}, 30);
      REQUIRE(r.mean <= previous + 2.0 * std::hypot(r.standard_error(), previous_se));
      previous = r.mean;
      previous_se = r.standard_error();
    }
  }
  SECTION("invalid trials") {
    REQUIRE_THROWS_AS(monte_carlo_gate_fidelity(1.65, kTwoPi, NoiseSpec{}, 0), InvalidParameter);
  }
}

TEST_CASE("Parallel failures name the trial", "[stochastic]") {
  REQUIRE_THROWS_WITH(parallel_for(10, 3,
                                   [](std::size_t i) {
                                     if (i == 6 || i == 8) throw std::runtime_error("boom");
                                   }),
                      ContainsSubstring("trial 6"));
  REQUIRE_THROWS_AS(parallel_for(2, 1, [](std::size_t) { throw std::runtime_error("x"); }), IntegratorFailure);
}

TEST_CASE("Thermal gate fidelity", "[stochastic]") {
  const double nominal = run_gate(1.65, kTwoPi).fidelity;
  ThermalSpec cold;
  REQUIRE_THAT(thermal_gate_fidelity(1.65, kTwoPi, cold), WithinAbs(nominal, 1e-10));

  ThermalSpec hot;
  hot.temperature = 20.0;
  const double f8 = thermal_gate_fidelity(1.65, kTwoPi, hot);
  REQUIRE(f8 == thermal_gate_fidelity(1.65, kTwoPi, hot));
  REQUIRE_THAT(f8, WithinAbs(thermal_gate_fidelity(1.65, kTwoPi, hot, {16000, FidelityMode::linear}), 1e-6));
  hot.equilibrium_distance = 4.0;
  REQUIRE(thermal_gate_fidelity(1.65, kTwoPi, hot) < f8);

  ThermalSpec bad;
  bad.equilibrium_distance = 1.0;
  bad.temperature = 20.0;
  REQUIRE_THROWS_AS(thermal_gate_fidelity(1.65, kTwoPi, bad), DegenerateGeometry);

  ThermalSpec warm;
  warm.temperature = 10.0;
  const auto r = thermal_random_phase_fidelity(1.65, kTwoPi, warm, 4, 17, {1000, FidelityMode::linear});
  REQUIRE(r.per_trial == thermal_random_phase_fidelity(1.65, kTwoPi, warm, 4, 17, {1000, FidelityMode::linear}).per_trial);
  REQUIRE(r.mean < nominal);
}
