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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rydgate/model.hpp"
#include "rydgate/units.hpp"

namespace rydgate {

struct NoiseSection {
  std::optional<double> eta_rabi, eta_detuning;
  std::optional<int> substeps, trials;
  std::optional<std::uint64_t> seed;
};

struct ThermalSection {
  std::optional<double> distance, temperature, vibration_rate, phase;
  std::optional<std::string> scaling;
  std::optional<int> substeps;
};

struct DecaySection {
  std::optional<double> base_rate, max_multiplier;
  std::optional<int> steps;
  std::optional<std::vector<double>> rabis_mhz;
  std::optional<std::string> target;
  std::optional<bool> compare_time_optimal;
};

struct ScanSection {
  std::optional<double> kappa, v, min, max, threshold, window_periods, reference_kappa, time_optimal_rate;
  std::optional<int> steps, samples, phase_steps, duration_steps, trials;
  std::optional<std::vector<double>> etas;
  std::optional<std::string> mode, duration_mode;
  std::optional<bool> independent_phases;
};

struct Config {
  std::optional<UnitMode> units;
  std::optional<Schedule> schedule;
  NoiseSection noise;
  ThermalSection thermal;
  DecaySection decay;
  ScanSection scan;
};

// Unknown sections or keys and mistyped values raise ConfigError.
Config parse_config(const nlohmann::json& doc);
Config load_config(const std::filesystem::path& path);

}  // namespace rydgate
