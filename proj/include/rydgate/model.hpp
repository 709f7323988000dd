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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rydgate/specs.hpp"
#include "rydgate/units.hpp"

namespace rydgate {

// Constant drive over one interval: Rabi frequency, detuning, laser phase.
struct PulseSegment {
  double rabi = 0.0;
  double detuning = 0.0;
  double phase = 0.0;
  double duration = 0.0;
};

// Continuous phase modulation phi(t) = amplitude * cos(rate*t - offset),
// added to the segment phase. t is measured from the schedule start.
struct PhaseDriveSpec {
  double amplitude = 0.0;
  double rate = 0.0;
  double offset = 0.0;
  double carrier_rabi = 0.0;

  double phase_at(double t) const;
};

// A realized noise sequence: per segment, piecewise-constant multipliers on
// equal subintervals.
struct NoiseTrace {
  std::vector<std::vector<double>> rabi;
  std::vector<std::vector<double>> detuning;

  // Multipliers in effect at local time t of a segment of given duration.
  double rabi_at(std::size_t segment, double local_time, double duration) const;
  double detuning_at(std::size_t segment, double local_time, double duration) const;
};

struct Schedule {
  std::vector<PulseSegment> segments;
  double interaction = 0.0;
  UnitMode units = UnitMode::natural;
  std::optional<NoiseTrace> noise;
  std::optional<ThermalSpec> thermal;
  std::optional<PhaseDriveSpec> phase_drive;

  double total_duration() const;
  bool time_dependent() const { return noise || thermal || phase_drive; }
};

// Throws InvalidParameter on non-positive durations, negative Rabi
// frequencies or a noise trace that does not match the segment count.
void validate(const Schedule& schedule);

// Segment duration T = 2*pi / sqrt(4*Omega^2 + V^2/4) with Omega = kappa*V.
double standard_segment_duration(double kappa, double v);

// Four equal segments with Omega = kappa*V, Delta = -V/2 and phases given by
// `phases` (default 0, pi/2, 0, pi/2). `duration` overrides T when set.
Schedule standard_schedule(double kappa, double v);
Schedule standard_schedule(double kappa, double v, const std::vector<double>& phases,
                           std::optional<double> duration = std::nullopt);

struct TimeOptimalOptions {
  static constexpr double default_rate = 1.0431;
  static constexpr double alternate_rate = 1.4031;

  double rabi = angular_mhz(5.0);
  double amplitude = angular_mhz(0.1122);
  double rate_factor = default_rate;  // omega = rate_factor * rabi
  double offset = -0.7318;
  double duration_factor = 2.43;  // T_t = duration_factor * pi / rabi
  double interaction = angular_mhz(450.0);
};

// Single resonant segment with sinusoidal phase modulation, in MHz units.
Schedule time_optimal_schedule(const TimeOptimalOptions& options = {});

nlohmann::json to_json(const Schedule& schedule);
Schedule schedule_from_json(const nlohmann::json& doc);

}  // namespace rydgate
