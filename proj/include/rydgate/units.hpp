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

#include <string>
#include <string_view>

namespace rydgate {

// natural: hbar = 1, time unit 1, reference interaction V0 = 2*pi.
// megahertz: angular frequencies in rad/us (2*pi x MHz), times in us.
enum class UnitMode { natural, megahertz };

enum class Quantity { angular_frequency, time };

// Accepts "natural", "mhz" and "megahertz"; anything else is a ConfigError.
UnitMode parse_unit_mode(std::string_view text);
std::string_view to_string(UnitMode mode);

// Converts between modes. One natural frequency unit corresponds to
// `mhz_scale` MHz, so angular frequencies scale by mhz_scale and times by
// 1/mhz_scale; every product (frequency x time) is preserved.
double unit_convert(double value, Quantity quantity, UnitMode from, UnitMode to, double mhz_scale = 1.0);

// 2*pi x value_mhz.
constexpr double angular_mhz(double value_mhz) { return 2.0 * 3.14159265358979323846 * value_mhz; }

}  // namespace rydgate
