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

#include "rydgate/hamiltonian.hpp"

#include <cmath>

#include "rydgate/errors.hpp"

namespace rydgate {

OperatorMatrix build_full(const DriveParameters& drive) {
  OperatorMatrix h;
  const cplx raise = 0.5 * drive.rabi * std::polar(1.0, drive.phase);
  for (int i = 0; i < kDim; ++i) {
    const BasisIndex b(i);
    // Atom 1 raised: |1 x> -> |r x>
    if (b.atom1() == Level::ground1) {
      const int j = BasisIndex(Level::rydberg, b.atom2()).value();
      h.elements(j, i) += raise;
      h.elements(i, j) += std::conj(raise);
    }
    if (b.atom2() == Level::ground1) {
      const int j = BasisIndex(b.atom1(), Level::rydberg).value();
      h.elements(j, i) += raise;
      h.elements(i, j) += std::conj(raise);
    }
    h.elements(i, i) += static_cast<double>(b.rydberg_count()) * drive.detuning;
  }
  h.elements(basis::srr.value(), basis::srr.value()) += drive.interaction;
  return h;
}

OperatorMatrix build_full(const PulseSegment& segment, double v) {
  return build_full(DriveParameters{segment.rabi, segment.detuning, segment.phase, v});
}

Subspace parse_subspace(std::string_view label) {
  if (label == "01") return Subspace::s01;
  if (label == "10") return Subspace::s10;
  if (label == "11") return Subspace::s11;
  throw InvalidParameter("unknown subspace '" + std::string(label) + "' (expected 01, 10 or 11)");
}

SubspaceHamiltonian build_subspace(Subspace which, const DriveParameters& drive) {
  const cplx phase = std::polar(1.0, drive.phase);
  if (which == Subspace::s11) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(3, 3);
    const cplx c = drive.rabi / std::sqrt(2.0) * phase;
    h(1, 0) = c;
    h(0, 1) = std::conj(c);
    h(2, 1) = c;
    h(1, 2) = std::conj(c);
    h(1, 1) = drive.detuning;
    h(2, 2) = drive.interaction + 2.0 * drive.detuning;
    return {which, h};
  }
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  const cplx c = 0.5 * drive.rabi * phase;
  h(1, 0) = c;
  h(0, 1) = std::conj(c);
  h(1, 1) = drive.detuning;
  return {which, h};
}

SubspaceHamiltonian build_subspace(Subspace which, const PulseSegment& segment, double v) {
  return build_subspace(which, DriveParameters{segment.rabi, segment.detuning, segment.phase, v});
}

Eigen::MatrixXcd subspace_embedding(Subspace which) {
  switch (which) {
    case Subspace::s01: {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(kDim, 2);
      e(basis::s01.value(), 0) = 1.0;
      e(basis::s0r.value(), 1) = 1.0;
      return e;
    }
    case Subspace::s10: {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(kDim, 2);
      e(basis::s10.value(), 0) = 1.0;
      e(basis::sr0.value(), 1) = 1.0;
      return e;
    }
    case Subspace::s11: {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(kDim, 3);
      const double s = 1.0 / std::sqrt(2.0);
      e(basis::s11.value(), 0) = 1.0;
      e(basis::s1r.value(), 1) = s;
      e(basis::sr1.value(), 1) = s;
      e(basis::srr.value(), 2) = 1.0;
      return e;
    }
  }
  throw InvalidParameter("unknown subspace");
}

OperatorMatrix apply_decay(const OperatorMatrix& h, const DecaySpec& decay) {
  if (!(decay.gamma >= 0.0)) throw InvalidParameter("decay rate must be non-negative");
  OperatorMatrix out = h;
  if (decay.gamma == 0.0) return out;
  for (int i = 0; i < kDim; ++i) {
    out.elements(i, i) -= kI * decay.gamma * static_cast<double>(BasisIndex(i).rydberg_count());
  }
  out.hermitian = false;
  return out;
}

DecaySpec DecaySpec::from_multiplier(double multiplier, double base_rate) {
  if (!(multiplier >= 0.0) || !(base_rate >= 0.0)) {
    throw InvalidParameter("decay multiplier and base rate must be non-negative");
  }
  return {multiplier * base_rate, base_rate};
}

double thermal_interaction(double t, double v, const ThermalSpec& spec) {
  if (!(spec.equilibrium_distance > 0.0)) throw InvalidParameter("equilibrium distance must be positive");
  const double d = spec.distance(t);
  if (!(d > 0.0)) throw DegenerateGeometry("interatomic distance reached " + std::to_string(d));
  const double ratio = d / spec.equilibrium_distance;
  const double r6 = std::pow(ratio, 6);
  return spec.scaling == ThermalScaling::direct ? v * r6 : v / r6;
}

DriveParameters instantaneous_drive(const Schedule& schedule, std::size_t segment, double local_time,
                                    double absolute_time) {
  const auto& seg = schedule.segments.at(segment);
  DriveParameters drive{seg.rabi, seg.detuning, seg.phase, schedule.interaction};
  if (schedule.noise) {
    drive.rabi *= schedule.noise->rabi_at(segment, local_time, seg.duration);
    drive.detuning *= schedule.noise->detuning_at(segment, local_time, seg.duration);
  }
  if (schedule.phase_drive) drive.phase += schedule.phase_drive->phase_at(absolute_time);
  if (schedule.thermal) drive.interaction = thermal_interaction(absolute_time, schedule.interaction, *schedule.thermal);
  return drive;
}

}  // namespace rydgate
