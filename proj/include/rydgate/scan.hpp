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

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace rydgate {

// Shortest round-trip decimal form; locale independent.
std::string format_double(double value);

using Cell = std::variant<double, std::string>;

struct Axis {
  std::string name;
  std::vector<Cell> values;
};

struct ScanResult {
  std::string name;
  std::vector<Axis> axes;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json metadata = nlohmann::json::object();

  std::size_t expected_rows() const;

  // Throws NumericError when rows do not fill the grid or a row is ragged.
  void check_complete() const;

  std::size_t column(std::string_view name) const;
  double number(std::size_t row, std::string_view column_name) const;
};

// Header row then one line per row; empty string cells stay empty.
void write_csv(std::ostream& out, const ScanResult& result);

nlohmann::json to_json(const ScanResult& result);

}  // namespace rydgate
