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

#include "rydgate/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rydgate/errors.hpp"

namespace rydgate {
namespace {

double piecewise(const std::vector<std::vector<double>>& samples, std::size_t segment, double local_time,
                 double duration) {
  const auto& seg = samples.at(segment);
  if (seg.empty()) return 1.0;
  const double n = static_cast<double>(seg.size());
  auto k = static_cast<std::ptrdiff_t>(std::floor(local_time / duration * n));
  k = std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(seg.size()) - 1);
  return seg[static_cast<std::size_t>(k)];
}

double require_number(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw ConfigError(std::string("schedule: missing numeric field '") + key + "'");
  }
  return obj.at(key).get<double>();
}

}  // namespace

double PhaseDriveSpec::phase_at(double t) const { return amplitude * std::cos(rate * t - offset); }

double NoiseTrace::rabi_at(std::size_t segment, double local_time, double duration) const {
  return piecewise(rabi, segment, local_time, duration);
}

double NoiseTrace::detuning_at(std::size_t segment, double local_time, double duration) const {
  return piecewise(detuning, segment, local_time, duration);
}

double Schedule::total_duration() const {
  double total = 0.0;
  for (const auto& s : segments) total += s.duration;
  return total;
}

void validate(const Schedule& schedule) {
  for (std::size_t i = 0; i < schedule.segments.size(); ++i) {
    const auto& s = schedule.segments[i];
    if (!(s.duration > 0.0) || !std::isfinite(s.duration)) {
      throw InvalidParameter("segment " + std::to_string(i) + ": duration must be positive");
    }
    if (!(s.rabi >= 0.0) || !std::isfinite(s.rabi)) {
      throw InvalidParameter("segment " + std::to_string(i) + ": rabi frequency must be non-negative");
    }
    if (!std::isfinite(s.detuning) || !std::isfinite(s.phase)) {
      throw InvalidParameter("segment " + std::to_string(i) + ": non-finite detuning or phase");
    }
  }
  if (!std::isfinite(schedule.interaction)) throw InvalidParameter("interaction must be finite");
  if (schedule.noise) {
    const auto n = schedule.segments.size();
    if (schedule.noise->rabi.size() != n || schedule.noise->detuning.size() != n) {
      throw InvalidParameter("noise trace does not match the segment count");
    }
  }
  if (schedule.thermal && !(schedule.thermal->equilibrium_distance > 0.0)) {
    throw InvalidParameter("thermal equilibrium distance must be positive");
  }
}

double standard_segment_duration(double kappa, double v) {
  if (!(kappa > 0.0) || !(v > 0.0)) {
    throw InvalidParameter("standard schedule needs kappa > 0 and V > 0");
  }
  const double rabi = kappa * v;
  return 2.0 * std::numbers::pi / std::sqrt(4.0 * rabi * rabi + v * v / 4.0);
}

Schedule standard_schedule(double kappa, double v) {
  const double half_pi = std::numbers::pi / 2.0;
  return standard_schedule(kappa, v, {0.0, half_pi, 0.0, half_pi});
}

Schedule standard_schedule(double kappa, double v, const std::vector<double>& phases,
                           std::optional<double> duration) {
  const double t = standard_segment_duration(kappa, v);
  Schedule schedule;
  schedule.interaction = v;
  for (double phase : phases) {
    schedule.segments.push_back({kappa * v, -v / 2.0, phase, duration.value_or(t)});
  }
  validate(schedule);
  return schedule;
}

Schedule time_optimal_schedule(const TimeOptimalOptions& options) {
  if (!(options.rabi > 0.0)) throw InvalidParameter("time-optimal rabi frequency must be positive");
  Schedule schedule;
  schedule.units = UnitMode::megahertz;
  schedule.interaction = options.interaction;
  schedule.segments.push_back(
      {options.rabi, 0.0, 0.0, options.duration_factor * std::numbers::pi / options.rabi});
  schedule.phase_drive = PhaseDriveSpec{options.amplitude, options.rate_factor * options.rabi, options.offset,
                                        options.rabi};
  return schedule;
}

nlohmann::json to_json(const Schedule& schedule) {
  nlohmann::json doc;
  doc["segments"] = nlohmann::json::array();
  for (const auto& s : schedule.segments) {
    doc["segments"].push_back(
        {{"rabi", s.rabi}, {"detuning", s.detuning}, {"phase", s.phase}, {"duration", s.duration}});
  }
  doc["interaction"] = schedule.interaction;
  doc["units"] = std::string(to_string(schedule.units));
  if (schedule.phase_drive) {
    const auto& d = *schedule.phase_drive;
    doc["phase_drive"] = {
        {"amplitude", d.amplitude}, {"rate", d.rate}, {"offset", d.offset}, {"carrier_rabi", d.carrier_rabi}};
  }
  if (schedule.thermal) {
    const auto& t = *schedule.thermal;
    doc["thermal"] = {{"equilibrium_distance", t.equilibrium_distance},
                      {"waist", t.waist},
                      {"vibration_rate", t.vibration_rate},
                      {"temperature", t.temperature},
                      {"reference_temperature", t.reference_temperature},
                      {"phase", t.phase},
                      {"scaling", t.scaling == ThermalScaling::direct ? "direct" : "physical"}};
  }
  if (schedule.noise) {
    doc["noise"] = {{"rabi", schedule.noise->rabi}, {"detuning", schedule.noise->detuning}};
  }
  return doc;
}

namespace {

Schedule parse_schedule(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("schedule: expected a JSON object");
  if (!doc.contains("segments") || !doc.at("segments").is_array()) {
    throw ConfigError("schedule: missing 'segments' array");
  }
  Schedule schedule;
  for (const auto& s : doc.at("segments")) {
    if (!s.is_object()) throw ConfigError("schedule: segment must be an object");
    schedule.segments.push_back({require_number(s, "rabi"), require_number(s, "detuning"),
                                 require_number(s, "phase"), require_number(s, "duration")});
  }
  schedule.interaction = require_number(doc, "interaction");
  if (doc.contains("units")) schedule.units = parse_unit_mode(doc.at("units").get<std::string>());
  if (doc.contains("phase_drive")) {
    const auto& d = doc.at("phase_drive");
    schedule.phase_drive = PhaseDriveSpec{require_number(d, "amplitude"), require_number(d, "rate"),
                                          require_number(d, "offset"), require_number(d, "carrier_rabi")};
  }
  if (doc.contains("thermal")) {
    const auto& t = doc.at("thermal");
    ThermalSpec spec;
    spec.equilibrium_distance = require_number(t, "equilibrium_distance");
    spec.waist = t.value("waist", 1.0);
    spec.vibration_rate = require_number(t, "vibration_rate");
    spec.temperature = require_number(t, "temperature");
    spec.reference_temperature = t.value("reference_temperature", 20.0);
    spec.phase = t.value("phase", 0.0);
    const auto scaling = t.value("scaling", std::string("direct"));
    if (scaling == "direct") {
      spec.scaling = ThermalScaling::direct;
    } else if (scaling == "physical") {
      spec.scaling = ThermalScaling::physical;
    } else {
      throw ConfigError("thermal scaling must be 'direct' or 'physical'");
    }
    schedule.thermal = spec;
  }
  if (doc.contains("noise")) {
    const auto& n = doc.at("noise");
    NoiseTrace trace;
    trace.rabi = n.at("rabi").get<std::vector<std::vector<double>>>();
    trace.detuning = n.at("detuning").get<std::vector<std::vector<double>>>();
    schedule.noise = std::move(trace);
  }
  try {
    validate(schedule);
  } catch (const InvalidParameter& e) {
    throw ConfigError(std::string("schedule: ") + e.what());
  }
  return schedule;
}

}  // namespace

Schedule schedule_from_json(const nlohmann::json& doc) {
  try {
    return parse_schedule(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("schedule: ") + e.what());
  }
}

}  // namespace rydgate
