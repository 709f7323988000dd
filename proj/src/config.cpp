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

#include "rydgate/config.hpp"

#include <fstream>
#include <set>

#include "rydgate/errors.hpp"

namespace rydgate {
namespace {

using nlohmann::json;

void check_keys(const json& section, const std::string& name, const std::set<std::string>& allowed) {
  if (!section.is_object()) throw ConfigError("config section '" + name + "' must be an object");
  for (const auto& [key, value] : section.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in config section '" + name + "'");
  }
}

template <typename T>
void read(const json& section, const char* key, std::optional<T>& slot) {
  if (!section.contains(key)) return;
  try {
    slot = section.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

}  // namespace

Config parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  check_keys(doc, "root", {"units", "schedule", "noise", "thermal", "decay", "scan"});
  Config c;
  if (doc.contains("units")) {
    if (!doc["units"].is_string()) throw ConfigError("units must be a string");
    c.units = parse_unit_mode(doc["units"].get<std::string>());
  }
  if (doc.contains("schedule")) c.schedule = schedule_from_json(doc["schedule"]);
  if (doc.contains("noise")) {
    const auto& s = doc["noise"];
    check_keys(s, "noise", {"eta_rabi", "eta_detuning", "substeps", "trials", "seed"});
    read(s, "eta_rabi", c.noise.eta_rabi);
    read(s, "eta_detuning", c.noise.eta_detuning);
    read(s, "substeps", c.noise.substeps);
    read(s, "trials", c.noise.trials);
    read(s, "seed", c.noise.seed);
  }
  if (doc.contains("thermal")) {
    const auto& s = doc["thermal"];
    check_keys(s, "thermal", {"distance", "temperature", "vibration_rate", "phase", "scaling", "substeps"});
    read(s, "distance", c.thermal.distance);
    read(s, "temperature", c.thermal.temperature);
    read(s, "vibration_rate", c.thermal.vibration_rate);
    read(s, "phase", c.thermal.phase);
    read(s, "scaling", c.thermal.scaling);
    read(s, "substeps", c.thermal.substeps);
  }
  if (doc.contains("decay")) {
    const auto& s = doc["decay"];
    check_keys(s, "decay", {"base_rate", "max_multiplier", "steps", "rabis_mhz", "target", "compare_time_optimal"});
    read(s, "base_rate", c.decay.base_rate);
    read(s, "max_multiplier", c.decay.max_multiplier);
    read(s, "steps", c.decay.steps);
    read(s, "rabis_mhz", c.decay.rabis_mhz);
    read(s, "target", c.decay.target);
    read(s, "compare_time_optimal", c.decay.compare_time_optimal);
  }
  if (doc.contains("scan")) {
    const auto& s = doc["scan"];
    check_keys(s, "scan",
               {"kappa", "v", "min", "max", "threshold", "window_periods", "reference_kappa", "time_optimal_rate",
                "steps", "samples", "phase_steps", "duration_steps", "trials", "etas", "mode", "duration_mode",
                "independent_phases"});
    auto& sc = c.scan;
    read(s, "kappa", sc.kappa);
    read(s, "v", sc.v);
    read(s, "min", sc.min);
    read(s, "max", sc.max);
    read(s, "threshold", sc.threshold);
    read(s, "window_periods", sc.window_periods);
    read(s, "reference_kappa", sc.reference_kappa);
    read(s, "time_optimal_rate", sc.time_optimal_rate);
    read(s, "steps", sc.steps);
    read(s, "samples", sc.samples);
    read(s, "phase_steps", sc.phase_steps);
    read(s, "duration_steps", sc.duration_steps);
    read(s, "trials", sc.trials);
    read(s, "etas", sc.etas);
    read(s, "mode", sc.mode);
    read(s, "duration_mode", sc.duration_mode);
    read(s, "independent_phases", sc.independent_phases);
  }
  return c;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

}  // namespace rydgate
