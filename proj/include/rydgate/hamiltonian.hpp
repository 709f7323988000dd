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
#include <string_view>

#include <Eigen/Core>

#include "rydgate/basis.hpp"
#include "rydgate/linalg.hpp"
#include "rydgate/model.hpp"
#include "rydgate/specs.hpp"

namespace rydgate {

// Instantaneous control values entering the two-atom Hamiltonian.
struct DriveParameters {
  double rabi = 0.0;
  double detuning = 0.0;
  double phase = 0.0;
  double interaction = 0.0;
};

struct OperatorMatrix {
  Matrix9 elements = Matrix9::Zero();
  bool hermitian = true;
};

// Two-atom Hamiltonian (hbar = 1)
//   H = sum_atoms [ (Omega/2) e^{i phi} |r><1| + h.c. + Delta |r><r| ] + V |rr><rr|
// in the fixed basis {00,01,0r,10,11,1r,r0,r1,rr}. The laser phase rides on
// the raising operator, so <0r|H|01> = (Omega/2) e^{i phi}.
OperatorMatrix build_full(const DriveParameters& drive);
OperatorMatrix build_full(const PulseSegment& segment, double v);

enum class Subspace { s01, s10, s11 };

// "01", "10" or "11".
Subspace parse_subspace(std::string_view label);

// H01 on {01, 0r}; H10 on {10, r0}; H11 on {11, R, rr} with
// R = (1r + r1)/sqrt(2).
struct SubspaceHamiltonian {
  Subspace which;
  Eigen::MatrixXcd elements;
};

SubspaceHamiltonian build_subspace(Subspace which, const DriveParameters& drive);
SubspaceHamiltonian build_subspace(Subspace which, const PulseSegment& segment, double v);

// Isometry whose columns are the subspace basis vectors in the full space
// (9 x 2 or 9 x 3).
Eigen::MatrixXcd subspace_embedding(Subspace which);

// Adds -i*gamma per Rydberg excitation to the diagonal (|rr> gets -2i*gamma).
// Clears the hermitian flag when gamma > 0.
OperatorMatrix apply_decay(const OperatorMatrix& h, const DecaySpec& decay);

// V_a(t) = V (D(t)/L)^6, or V (L/D(t))^6 in physical scaling.
double thermal_interaction(double t, double v, const ThermalSpec& spec);

// Drive in effect at local time t of segment `segment`; absolute_time is
// measured from the start of the schedule. Applies noise multipliers, phase
// drive and thermal interaction when present.
DriveParameters instantaneous_drive(const Schedule& schedule, std::size_t segment, double local_time,
                                    double absolute_time);

}  // namespace rydgate
