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

#include <json.hpp>

#include "rydgate/linalg.hpp"

namespace rydgate {

enum class FidelityMode {
  linear,   // |tr(M T^dagger)| / 4
  squared,  // |tr(M T^dagger)|^2 / 16
};

enum class StateTargetMode {
  ideal_final,  // U_z rho_i U_z^dagger
  initial,      // rho_i itself
};

// arg(<final|initial>) in (-pi, pi]; e^{-i phi} acquired gives phi.
double accumulated_phase(const StateVector& initial, const StateVector& final);

// Wraps into (-2 pi, 0].
double wrap_controlled_phase(double phase);

double controlled_phase(double phi01, double phi10, double phi11);

struct ComputationalPhases {
  double phi00 = 0.0;
  double phi01 = 0.0;
  double phi10 = 0.0;
  double phi11 = 0.0;
};

Matrix4 ideal_controlled_phase(const ComputationalPhases& phases);

// Cz dressed with local phases: diag(1, e^{-i phi01}, e^{-i phi10}, e^{-i(phi01 + phi10 - pi)}).
Matrix4 cz_target(double phi01 = 0.0, double phi10 = 0.0);

// Rows and columns {00, 01, 10, 11} of a 9x9 operator.
Matrix4 computational_block(const Matrix9& actual);

// Embeds a 4x4 computational operator; the Rydberg block is the identity.
Matrix9 embed_computational(const Matrix4& op);

double gate_fidelity(const Matrix9& actual, const Matrix4& target, FidelityMode mode = FidelityMode::linear);

double state_fidelity(const DensityMatrix& final, const DensityMatrix& target);

// Phases read off the diagonal of a gate. Throws UndefinedPhase for a
// basis state that does not return.
ComputationalPhases gate_phases(const Matrix9& gate);

struct GateOutcome {
  ComputationalPhases phases;
  double delta_gamma = 0.0;
  std::array<double, 4> return_probabilities{};
  double fidelity = 0.0;
  double leakage = 0.0;  // averaged over the four computational inputs
};

// Fidelity is scored against the Cz compensated by the gate's own local phases.
GateOutcome analyze_gate(const Matrix9& gate, FidelityMode mode = FidelityMode::linear);

nlohmann::json to_json(const GateOutcome& outcome);

}  // namespace rydgate
