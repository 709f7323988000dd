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

#include <cmath>
#include <cstdint>

namespace rydgate {

// Rydberg decay. gamma is the amplitude decay rate per excited atom,
// gamma = multiplier * base_rate.
struct DecaySpec {
  double gamma = 0.0;
  double base_rate = 0.0;

  static DecaySpec from_multiplier(double multiplier, double base_rate);
};

// How the distance modulation maps onto the interaction.
enum class ThermalScaling {
  direct,    // V * (D/L)^6
  physical,  // V * (L/D)^6
};

// Thermal motion in a single synthetic relative coordinate,
// D(t) = L + b*r0*sin(omega*t + phase) with b = sqrt(2*T_m/T_0).
// Lengths are in units of r0 (r0 = 1 um).
struct ThermalSpec {
  double equilibrium_distance = 8.0;
  double waist = 1.0;
  double vibration_rate = 0.0;
  double temperature = 0.0;            // uK
  double reference_temperature = 20.0; // uK
  double phase = 0.0;
  ThermalScaling scaling = ThermalScaling::direct;

  double amplitude() const { return std::sqrt(2.0 * temperature / reference_temperature); }
  double distance(double t) const {
    return equilibrium_distance + amplitude() * waist * std::sin(vibration_rate * t + phase);
  }
};

// Multiplicative control noise, Omega' = (1 + eta_rabi R) Omega and
// Delta' = (1 + eta_detuning R') Delta with R, R' i.i.d. uniform on [-1, 1],
// piecewise constant over `substeps` intervals per segment.
struct NoiseSpec {
  double eta_rabi = 0.0;
  double eta_detuning = 0.0;
  int substeps = 100;
  std::uint64_t seed = 0;
};

}  // namespace rydgate
