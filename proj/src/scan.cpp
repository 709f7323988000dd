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

#include "rydgate/scan.hpp"

#include <charconv>
#include <cmath>

#include "rydgate/errors.hpp"

namespace rydgate {
namespace {

nlohmann::json cell_json(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  return std::get<std::string>(cell);
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::size_t ScanResult::expected_rows() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.values.size();
  return n;
}

void ScanResult::check_complete() const {
  if (rows.size() != expected_rows()) {
    throw NumericError(name + ": " + std::to_string(rows.size()) + " rows for a grid of " +
                       std::to_string(expected_rows()));
  }
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw NumericError(name + ": ragged row");
  }
}

std::size_t ScanResult::column(std::string_view column_name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == column_name) return i;
  }
  throw InvalidParameter("no column named " + std::string(column_name));
}

double ScanResult::number(std::size_t row, std::string_view column_name) const {
  const auto& cell = rows.at(row).at(column(column_name));
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  return std::nan("");
}

void write_csv(std::ostream& out, const ScanResult& result) {
  for (std::size_t i = 0; i < result.columns.size(); ++i) out << (i ? "," : "") << result.columns[i];
  out << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const auto* d = std::get_if<double>(&row[i])) {
        out << format_double(*d);
      } else {
        out << std::get<std::string>(row[i]);
      }
    }
    out << '\n';
  }
}

nlohmann::json to_json(const ScanResult& result) {
  nlohmann::json doc;
  doc["name"] = result.name;
  doc["axes"] = nlohmann::json::array();
  for (const auto& axis : result.axes) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : axis.values) values.push_back(cell_json(v));
    doc["axes"].push_back({{"name", axis.name}, {"values", values}});
  }
  doc["columns"] = result.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : result.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    doc["rows"].push_back(std::move(r));
  }
  doc["metadata"] = result.metadata;
  return doc;
}

}  // namespace rydgate
