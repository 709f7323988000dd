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

#include "rydgate/units.hpp"

#include "rydgate/errors.hpp"

namespace rydgate {

UnitMode parse_unit_mode(std::string_view text) {
  if (text == "natural") return UnitMode::natural;
  if (text == "mhz" || text == "megahertz") return UnitMode::megahertz;
  throw ConfigError("unknown unit mode '" + std::string(text) + "' (expected natural or mhz)");
}

std::string_view to_string(UnitMode mode) { return mode == UnitMode::natural ? "natural" : "mhz"; }

double unit_convert(double value, Quantity quantity, UnitMode from, UnitMode to, double mhz_scale) {
  if (!(mhz_scale > 0.0)) throw InvalidParameter("mhz_scale must be positive");
  if (from == to) return value;
  const bool to_mhz = to == UnitMode::megahertz;
  const double factor = quantity == Quantity::angular_frequency ? mhz_scale : 1.0 / mhz_scale;
  return to_mhz ? value * factor : value / factor;
}

}  // namespace rydgate
