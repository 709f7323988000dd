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
#include <utility>

#include "rydgate/linalg.hpp"

namespace rydgate {

double chi(double kappa);

// Holonomic operator on {|11>, |rr>}. Unitary when phi is a
// multiple of pi/2, the only phases the standard schedule uses.
Matrix2 u11_analytic(double phi, double chi);

struct TwoLevelParams {
  double mixing_angle = 0.0;  // theta_10, tan = rabi / detuning, cos > 0
  double half_angle = 0.0;    // beta
  double phase = 0.0;         // phi in the axis

  static TwoLevelParams from_drive(double rabi, double detuning, double duration, double phase);
  std::array<double, 3> axis() const;
};

// cos(beta) I - i sin(beta) n.sigma on {|10>, |r0>}.
Matrix2 u10_analytic(const TwoLevelParams& params);

// Analytic forms mapped onto the simulation frame. For a full |11> cycle of
// the standard drive, exp(-i H11 T11) restricted to {|11>, |rr>} equals
// -e^{i chi} u11_analytic(phi, chi + pi).
Matrix2 u11_lab(double kappa, double phi);

// exp(-i H10 T) = e^{-i detuning T / 2} u10_analytic(theta, beta, -phi - pi/2).
// Requires detuning <= 0 so that the cos(theta) > 0 branch matches.
Matrix2 u10_lab(double rabi, double detuning, double duration, double phase);

struct DressedPair {
  Vector2 bright;
  Vector2 dark;
};

DressedPair dressed_states(double phi);

struct Periods {
  double t11 = 0.0;
  double t10 = 0.0;
};

Periods periods(double kappa, double v);

// tan(beta) cos(theta_10) + 1 under the standard detuning with T = T11.
double composite_condition(double kappa);

// Bisection on (lo, hi) to `tolerance`; throws RootNotFound without a sign change.
double composite_cyclic_root(double lo = 0.05, double hi = 1.0, double tolerance = 1e-6);

// |<10| [U10(pi/2) U10(0)]^2 |10>|^2 with T = T11.
double composite_return_probability(double kappa);

}  // namespace rydgate
