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

// Independent reference implementations used only by tests: Kronecker-built
// Hamiltonians and a Taylor scaling-and-squaring exponential.

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

// Single atom, levels (0, 1, r). The laser raises |1> to |r> with e^{i phi}.
inline Mat atom_drive(double rabi, double phase) {
  Mat h = Mat::Zero(3, 3);
  h(2, 1) = 0.5 * rabi * std::polar(1.0, phase);
  h(1, 2) = std::conj(h(2, 1));
  return h;
}

inline Mat rydberg_projector() {
  Mat n = Mat::Zero(3, 3);
  n(2, 2) = 1.0;
  return n;
}

inline Mat two_atom_hamiltonian(double rabi, double detuning, double phase, double v) {
  const Mat id = Mat::Identity(3, 3);
  const Mat single = atom_drive(rabi, phase) + detuning * rydberg_projector();
  return kron(single, id) + kron(id, single) + v * kron(rydberg_projector(), rydberg_projector());
}

// exp(a) by scaling, a degree-24 Taylor series, and squaring.
inline Mat expm(const Mat& a) {
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Mat scaled = a / std::pow(2.0, squarings);
  Mat term = Mat::Identity(a.rows(), a.cols());
  Mat sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

inline Mat propagator(const Mat& h, double t) { return expm(cplx(0.0, -t) * h); }

// Standard four-segment gate from the Kronecker Hamiltonian.
inline Mat standard_gate(double kappa, double v) {
  const double rabi = kappa * v;
  const double detuning = -v / 2.0;
  const double t = 2.0 * M_PI / std::sqrt(4.0 * rabi * rabi + v * v / 4.0);
  const Mat u0 = propagator(two_atom_hamiltonian(rabi, detuning, 0.0, v), t);
  const Mat u1 = propagator(two_atom_hamiltonian(rabi, detuning, M_PI / 2.0, v), t);
  return u1 * u0 * u1 * u0;
}

}  // namespace oracle
