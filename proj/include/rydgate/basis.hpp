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

#include <array>
#include <string>
#include <string_view>

#include "rydgate/linalg.hpp"

namespace rydgate {

// Single-atom level. Order 0 < 1 < r fixes the two-atom basis order.
enum class Level : int { ground0 = 0, ground1 = 1, rydberg = 2 };

// Index into the fixed nine-state basis {00,01,0r,10,11,1r,r0,r1,rr}. The
// first character is atom 1, the second atom 2; index = 3*atom1 + atom2.
class BasisIndex {
 public:
  constexpr explicit BasisIndex(int value) : value_(value) { check(value); }
  constexpr BasisIndex(Level atom1, Level atom2)
      : BasisIndex(3 * static_cast<int>(atom1) + static_cast<int>(atom2)) {}

  // Throws InvalidParameter for anything but the nine labels.
  static BasisIndex from_label(std::string_view label);

  constexpr int value() const { return value_; }
  constexpr Level atom1() const { return static_cast<Level>(value_ / 3); }
  constexpr Level atom2() const { return static_cast<Level>(value_ % 3); }
  constexpr int rydberg_count() const {
    return (atom1() == Level::rydberg ? 1 : 0) + (atom2() == Level::rydberg ? 1 : 0);
  }
  constexpr bool computational() const { return rydberg_count() == 0; }
  std::string_view label() const;

  friend constexpr bool operator==(BasisIndex, BasisIndex) = default;

 private:
  static constexpr void check(int value) {
    if (value < 0 || value >= kDim) throw_out_of_range(value);
  }
  [[noreturn]] static void throw_out_of_range(int value);

  int value_;
};

inline constexpr std::array<std::string_view, kDim> kBasisLabels{
    "00", "01", "0r", "10", "11", "1r", "r0", "r1", "rr"};

namespace basis {
inline constexpr BasisIndex s00{0}, s01{1}, s0r{2}, s10{3}, s11{4}, s1r{5}, sr0{6}, sr1{7}, srr{8};
}  // namespace basis

// Computational basis {00, 01, 10, 11} in that order.
inline constexpr std::array<int, 4> kComputational{0, 1, 3, 4};
inline constexpr std::array<std::string_view, 4> kComputationalLabels{"00", "01", "10", "11"};

StateVector basis_state(BasisIndex index);

// Normalized equal superposition over the computational basis, sum_k |k>/2.
StateVector equal_computational_superposition();

// Pure-state projector |psi><psi|.
DensityMatrix density_from_state(const StateVector& psi);

}  // namespace rydgate
