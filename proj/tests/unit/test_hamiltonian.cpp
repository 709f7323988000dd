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

#include <catch_amalgamated.hpp>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "rydgate/basis.hpp"
#include "rydgate/errors.hpp"
#include "rydgate/hamiltonian.hpp"
#include "support/oracle.hpp"

using namespace rydgate;
using Catch::Matchers::WithinAbs;

namespace {

int block_of(int i) {
  if (i == 0) return 0;
  if (i == 1 || i == 2) return 1;
  if (i == 3 || i == 6) return 2;
  return 3;
}

}  // namespace

TEST_CASE("Full Hamiltonian matches the Kronecker construction", "[hamiltonian]") {
  for (double phase : {0.0, 0.3, M_PI / 2, 2.0}) {
    const DriveParameters d{1.7, -0.4, phase, 2.3};
    const auto h = build_full(d);
    REQUIRE(h.hermitian);
    REQUIRE(max_abs_diff(h.elements, oracle::two_atom_hamiltonian(d.rabi, d.detuning, d.phase, d.interaction)) < 1e-15);
    REQUIRE(max_abs_diff(h.elements, h.elements.adjoint()) == 0.0);
  }
}

TEST_CASE("Full Hamiltonian entries", "[hamiltonian]") {
  REQUIRE(build_full(DriveParameters{}).elements.isZero(0.0));

  // The laser raises |1> to |r> with e^{i phi}.
  const auto h = build_full(DriveParameters{2.0, 0.0, M_PI / 2, 0.0}).elements;
  REQUIRE_THAT(std::abs(h(basis::s0r.value(), basis::s01.value()) - kI), WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(std::abs(h(basis::s01.value(), basis::s0r.value()) + kI), WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(std::abs(h(basis::sr0.value(), basis::s10.value()) - kI), WithinAbs(0.0, 1e-15));

  const auto g = build_full(DriveParameters{1.3, -0.7, 0.4, 2.9}).elements;
  for (int i = 0; i < kDim; ++i) {
    REQUIRE(g(0, i) == cplx(0.0));
    REQUIRE(g(i, 0) == cplx(0.0));
    const int n = BasisIndex(i).rydberg_count();
    const double expected = n * -0.7 + (n == 2 ? 2.9 : 0.0);
    REQUIRE_THAT(g(i, i).real(), WithinAbs(expected, 1e-15));
    for (int j = 0; j < kDim; ++j) {
      if (block_of(i) != block_of(j)) REQUIRE(g(i, j) == cplx(0.0));
    }
  }
}

TEST_CASE("Subspace Hamiltonians", "[hamiltonian]") {
  SECTION("H10 entries") {
    const auto h = build_subspace(Subspace::s10, DriveParameters{2.0, -1.0, 0.0, 5.0}).elements;
    Eigen::Matrix2cd expected;
    expected << 0.0, 1.0, 1.0, -1.0;
    REQUIRE(max_abs_diff(h, expected) < 1e-15);
  }
  SECTION("rr corner vanishes under the standard detuning") {
    const double v = 3.1;
    const auto h = build_subspace(Subspace::s11, DriveParameters{2.0, -v / 2, 0.7, v}).elements;
    REQUIRE(h.rows() == 3);
    REQUIRE_THAT(std::abs(h(2, 2)), WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(std::abs(h(1, 0)), WithinAbs(2.0 / std::sqrt(2.0), 1e-15));
    REQUIRE_THAT(std::abs(h(2, 1)), WithinAbs(2.0 / std::sqrt(2.0), 1e-15));
  }
  SECTION("blocks are projections of the full matrix") {
    const DriveParameters d{1.1, -0.6, 1.2, 1.9};
    const Eigen::MatrixXcd full = build_full(d).elements;
    for (auto which : {Subspace::s01, Subspace::s10, Subspace::s11}) {
      const auto e = subspace_embedding(which);
      REQUIRE(max_abs_diff(Eigen::MatrixXcd(e.adjoint() * e), Eigen::MatrixXcd::Identity(e.cols(), e.cols())) < 1e-15);
      REQUIRE(max_abs_diff(Eigen::MatrixXcd(e.adjoint() * full * e), build_subspace(which, d).elements) < 1e-15);
    }
  }
  SECTION("labels") {
    REQUIRE(parse_subspace("11") == Subspace::s11);
    REQUIRE(parse_subspace("01") == Subspace::s01);
    REQUIRE_THROWS_AS(parse_subspace("00"), InvalidParameter);
  }
}

TEST_CASE("Antisymmetric single-excitation state is decoupled", "[hamiltonian]") {
  const auto h = build_full(DriveParameters{1.4, -0.5, 0.9, 1.0}).elements;
  StateVector a = StateVector::Zero();
  a(basis::s1r.value()) = 1.0 / std::sqrt(2.0);
  a(basis::sr1.value()) = -1.0 / std::sqrt(2.0);
  const StateVector ha = h * a;
  REQUIRE(std::abs(ha(basis::s11.value())) < 1e-15);
  REQUIRE(std::abs(ha(basis::srr.value())) < 1e-15);
  REQUIRE((ha - cplx(-0.5) * a).norm() < 1e-15);
}

TEST_CASE("Decay operator", "[hamiltonian]") {
  const auto h = build_full(DriveParameters{1.4, -0.5, 0.9, 1.0});
  const auto same = apply_decay(h, DecaySpec{0.0, 0.0});
  REQUIRE(max_abs_diff(same.elements, h.elements) == 0.0);

  const double gamma = 0.3;
  const auto d = apply_decay(h, DecaySpec::from_multiplier(3.0, 0.1));
  REQUIRE_FALSE(d.hermitian);
  REQUIRE_THAT(d.elements(basis::srr.value(), basis::srr.value()).imag(), WithinAbs(-2.0 * gamma, 1e-15));
  REQUIRE_THAT(d.elements(basis::s1r.value(), basis::s1r.value()).imag(), WithinAbs(-gamma, 1e-15));
  const Matrix9 diff = d.elements - h.elements;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      if (i != j) REQUIRE(diff(i, j) == cplx(0.0));
    }
    REQUIRE(diff(i, i).real() == 0.0);
  }
  Eigen::ComplexEigenSolver<Matrix9> es(d.elements);
  REQUIRE(es.eigenvalues().imag().maxCoeff() <= 1e-12);
  REQUIRE_THROWS_AS(apply_decay(h, DecaySpec{-0.1, 0.0}), InvalidParameter);
  REQUIRE_THROWS_AS(DecaySpec::from_multiplier(-1.0, 0.1), InvalidParameter);
}

TEST_CASE("Thermal interaction", "[hamiltonian]") {
  ThermalSpec spec;
  spec.vibration_rate = 7.0;
  REQUIRE(thermal_interaction(0.4, 2.0, spec) == 2.0);
  spec.temperature = 20.0;
  REQUIRE_THAT(spec.amplitude(), WithinAbs(std::sqrt(2.0), 1e-15));
  REQUIRE_THAT(thermal_interaction(0.0, 2.0, spec), WithinAbs(2.0, 1e-15));
  const double quarter = M_PI / 2 / spec.vibration_rate;
  REQUIRE_THAT(thermal_interaction(quarter, 1.0, spec), WithinAbs(std::pow(1.0 + std::sqrt(2.0) / 8.0, 6), 1e-12));
  REQUIRE_THAT(thermal_interaction(3 * quarter, 1.0, spec), WithinAbs(std::pow(1.0 - std::sqrt(2.0) / 8.0, 6), 1e-12));
  REQUIRE_THAT(std::pow(1.0 + std::sqrt(2.0) / 8.0, 6), WithinAbs(2.66, 0.01));
  REQUIRE_THAT(std::pow(1.0 - std::sqrt(2.0) / 8.0, 6), WithinAbs(0.3112, 1e-4));
  spec.scaling = ThermalScaling::physical;
  REQUIRE_THAT(thermal_interaction(quarter, 1.0, spec), WithinAbs(std::pow(1.0 + std::sqrt(2.0) / 8.0, -6), 1e-12));

  spec.equilibrium_distance = 1.0;
  REQUIRE_THROWS_AS(thermal_interaction(3 * quarter, 1.0, spec), DegenerateGeometry);
  spec.equilibrium_distance = 0.0;
  REQUIRE_THROWS_AS(thermal_interaction(0.0, 1.0, spec), InvalidParameter);
}
