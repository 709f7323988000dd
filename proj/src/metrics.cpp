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

#include "rydgate/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rydgate/basis.hpp"
#include "rydgate/errors.hpp"

namespace rydgate {

double accumulated_phase(const StateVector& initial, const StateVector& final) {
  const cplx overlap = final.dot(initial);  // conjugates `final`
  if (std::abs(overlap) <= 1e-6) throw UndefinedPhase("state did not return: overlap " + std::to_string(std::abs(overlap)));
  const double phase = std::arg(overlap);
  return phase <= -kPi ? kPi : phase;
}

double wrap_controlled_phase(double phase) {
  double wrapped = std::fmod(phase, kTwoPi);
  if (wrapped > 0.0) wrapped -= kTwoPi;
  if (wrapped <= -kTwoPi) wrapped += kTwoPi;
  return wrapped;
}

double controlled_phase(double phi01, double phi10, double phi11) {
  return wrap_controlled_phase(phi11 - phi10 - phi01);
}

Matrix4 ideal_controlled_phase(const ComputationalPhases& p) {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = std::polar(1.0, -p.phi00);
  m(1, 1) = std::polar(1.0, -p.phi01);
  m(2, 2) = std::polar(1.0, -p.phi10);
  m(3, 3) = std::polar(1.0, -p.phi11);
  return m;
}

Matrix4 cz_target(double phi01, double phi10) {
  return ideal_controlled_phase({0.0, phi01, phi10, phi01 + phi10 - kPi});
}

Matrix4 computational_block(const Matrix9& actual) {
  Matrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = actual(kComputational[r], kComputational[c]);
  }
  return m;
}

Matrix9 embed_computational(const Matrix4& op) {
  Matrix9 u = Matrix9::Identity();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) u(kComputational[r], kComputational[c]) = op(r, c);
  }
  return u;
}

double gate_fidelity(const Matrix9& actual, const Matrix4& target, FidelityMode mode) {
  const double overlap = std::abs((computational_block(actual) * target.adjoint()).trace());
  return mode == FidelityMode::linear ? overlap / 4.0 : overlap * overlap / 16.0;
}

double state_fidelity(const DensityMatrix& final, const DensityMatrix& target) {
  return std::abs((final * target).trace());
}

ComputationalPhases gate_phases(const Matrix9& gate) {
  std::array<double, 4> p{};
  for (std::size_t k = 0; k < 4; ++k) {
    const int idx = kComputational[k];
    p[k] = accumulated_phase(basis_state(BasisIndex(idx)), gate.col(idx));
  }
  return {p[0], p[1], p[2], p[3]};
}

GateOutcome analyze_gate(const Matrix9& gate, FidelityMode mode) {
  GateOutcome out;
  out.phases = gate_phases(gate);
  out.delta_gamma = controlled_phase(out.phases.phi01, out.phases.phi10, out.phases.phi11);
  double retained = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const int idx = kComputational[k];
    out.return_probabilities[k] = std::norm(gate(idx, idx));
    for (int j : kComputational) retained += std::norm(gate(j, idx));
  }
  out.leakage = std::max(0.0, 1.0 - retained / 4.0);
  out.fidelity = gate_fidelity(gate, cz_target(out.phases.phi01, out.phases.phi10), mode);
  return out;
}

nlohmann::json to_json(const GateOutcome& o) {
  nlohmann::json doc;
  doc["phases"] = {{"00", o.phases.phi00}, {"01", o.phases.phi01}, {"10", o.phases.phi10}, {"11", o.phases.phi11}};
  doc["delta_gamma"] = o.delta_gamma;
  doc["return_probabilities"] = nlohmann::json::object();
  for (std::size_t k = 0; k < 4; ++k) {
    doc["return_probabilities"][std::string(kComputationalLabels[k])] = o.return_probabilities[k];
  }
  doc["fidelity"] = o.fidelity;
  doc["leakage"] = o.leakage;
  return doc;
}

}  // namespace rydgate
