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

#include <clocale>
#include <cmath>
#include <sstream>

#include "rydgate/basis.hpp"
#include "rydgate/errors.hpp"
#include "rydgate/experiments.hpp"
#include "rydgate/hamiltonian.hpp"
#include "rydgate/propagate.hpp"

using namespace rydgate;
using Catch::Matchers::WithinAbs;

namespace {

int interior_extrema(const std::vector<double>& y) {
  int n = 0;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if ((y[i] - y[i - 1]) * (y[i + 1] - y[i]) < 0.0) ++n;
  }
  return n;
}

std::vector<double> column(const ScanResult& r, const char* name) {
  std::vector<double> out;
  for (std::size_t i = 0; i < r.rows.size(); ++i) out.push_back(r.number(i, name));
  return out;
}

}  // namespace

TEST_CASE("Dynamics pipeline", "[experiments]") {
  const auto r = run_dynamics(1.65, kTwoPi, 50);
  REQUIRE(r.rows.size() == 4 * 201);
  double min11 = 1.0;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto label = std::get<std::string>(r.rows[i][0]);
    if (label == "00") REQUIRE(r.number(i, "P00") == 1.0);
    if (label == "11") min11 = std::min(min11, r.number(i, "P11"));
  }
  REQUIRE(min11 < 0.9);
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t last = (k + 1) * 201 - 1;
    REQUIRE(r.number(last, "P" + std::string(kComputationalLabels[k])) >= 0.99);
  }
  REQUIRE(r.metadata.contains("schedule"));
}

TEST_CASE("Kappa scan", "[experiments]") {
  const auto r = scan_kappa({0.5, 1.65, 50.0}, kTwoPi);
  REQUIRE(r.rows.size() == 3);
  REQUIRE_THAT(r.number(1, "delta_gamma"), WithinAbs(-M_PI, 0.05));
  REQUIRE_THAT(std::remainder(r.number(2, "delta_gamma") + 2 * M_PI, 2 * M_PI), WithinAbs(0.0, 0.1));
  REQUIRE_THROWS_AS(scan_kappa({}, kTwoPi), InvalidParameter);
}

TEST_CASE("Noise map", "[experiments]") {
  NoiseMapSpec spec;
  spec.eta_rabi = {0.0, 0.05};
  spec.eta_detuning = {0.0, 0.05};
  spec.trials = 5;
  spec.seed = 21;
  const auto a = run_noise_map(spec);
  REQUIRE(a.rows.size() == 4);
  REQUIRE(a.number(0, "std_fidelity") == 0.0);
  REQUIRE_THAT(a.number(0, "mean_fidelity"), WithinAbs(run_gate(1.65, kTwoPi).fidelity, 1e-10));
  const auto b = run_noise_map(spec);
  REQUIRE(to_json(a) == to_json(b));
  for (std::size_t i = 0; i < 4; ++i) REQUIRE(a.number(i, "mean_fidelity") >= 0.995);
  REQUIRE(a.metadata["generator"] == kGeneratorName);
}

TEST_CASE("Thermal map", "[experiments]") {
  ThermalMapSpec spec;
  spec.distances = {4.0};
  spec.temperatures = {0.0, 1.0, 5.0, 10.0, 20.0};
  spec.substeps = 2000;
  const auto r = run_thermal_map(spec);
  REQUIRE(r.rows.size() == 5);
  REQUIRE_THAT(r.number(0, "fidelity"), WithinAbs(run_gate(1.65, kTwoPi).fidelity, 1e-10));
  for (std::size_t i = 1; i < 5; ++i) REQUIRE(r.number(i, "fidelity") <= r.number(i - 1, "fidelity"));
}

TEST_CASE("Interferometer", "[experiments]") {
  SECTION("preparation operator") {
    const Matrix9 b = interferometer_preparation();
    REQUIRE(max_abs_diff(Matrix9(b.adjoint() * b), Matrix9::Identity()) < 1e-15);
    for (int a1 = 0; a1 < 3; ++a1) {
      const int r = 3 * a1 + 2;
      REQUIRE(b(r, r) == cplx(1.0));
      for (int j = 0; j < kDim; ++j) {
        if (j / 3 != a1) REQUIRE(b(r, j) == cplx(0.0));
        if (j != r) REQUIRE(b(r, j) == cplx(0.0));
      }
    }
    // Atom 2 rotation only: blocks for each atom-1 level are identical.
    REQUIRE(b.block<3, 3>(0, 0) == b.block<3, 3>(3, 3));
    REQUIRE(b.block<3, 3>(0, 3).isZero(0.0));
  }
  SECTION("identity interaction lands on |11>") {
    const auto r = interferometer_readout(PulseSegment{0.0, 0.0, 0.0, 1.0}, 0.0);
    REQUIRE_THAT(r.p11, WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(r.p10, WithinAbs(0.0, 1e-15));
  }
  SECTION("fixed duration scan oscillates") {
    const auto r = run_interferometer({});
    REQUIRE(r.rows.size() == 81);
    const auto sum = column(r, "P10_plus_P11");
    for (double s : sum) REQUIRE(s <= 1.0 + 1e-12);
    REQUIRE(*std::min_element(sum.begin(), sum.end()) < 1.0 - 1e-3);
    REQUIRE(interior_extrema(column(r, "P10")) >= 1);
    REQUIRE(interior_extrema(column(r, "P11")) >= 1);
  }
  SECTION("cyclic duration variant runs") {
    InterferometerSpec spec;
    spec.duration = DurationMode::cyclic;
    spec.kappas = linspace(1.0, 5.0, 9);
    const auto r = run_interferometer(spec);
    REQUIRE(r.metadata["duration_mode"] == "cyclic");
    REQUIRE(r.number(0, "duration") > r.number(8, "duration"));
  }
}

TEST_CASE("Decay curves", "[experiments]") {
  DecayCurveSpec spec;
  spec.multipliers = {0.0, 1.0, 5.0};
  const auto r = run_decay_curves(spec);
  REQUIRE(r.rows.size() == 12);
  // Rows: curve-major, multiplier-minor.
  for (std::size_t m = 0; m < 3; ++m) {
    REQUIRE(r.number(6 + m, "fidelity") >= r.number(3 + m, "fidelity"));
    REQUIRE(r.number(3 + m, "fidelity") >= r.number(m, "fidelity"));
  }
  for (std::size_t i = 0; i < r.rows.size(); ++i) REQUIRE(r.number(i, "trace") <= 1.0 + 1e-12);
  REQUIRE_THAT(r.number(9, "fidelity"), WithinAbs(1.0, 1e-3));
  REQUIRE(std::get<std::string>(r.rows[9][0]) == "time-optimal");
  REQUIRE_THAT(r.number(1, "gamma"), WithinAbs(2 * M_PI * 0.01, 1e-15));

  // The ideal gate reaches its own target.
  const Matrix9 u = evolution_operator(standard_schedule(1.65, kTwoPi));
  const auto phases = gate_phases(u);
  const Matrix9 uz = embed_computational(cz_target(phases.phi01, phases.phi10));
  const DensityMatrix rho = density_from_state(equal_computational_superposition());
  REQUIRE_THAT(state_fidelity(uz * rho * uz.adjoint(), uz * rho * uz.adjoint()), WithinAbs(1.0, 1e-12));

  DecayCurveSpec bare = spec;
  bare.target = StateTargetMode::initial;
  bare.compare_time_optimal = false;
  bare.rabis = {angular_mhz(5.0)};
  const auto l = run_decay_curves(bare);
  REQUIRE(l.rows.size() == 3);
  REQUIRE(l.number(0, "fidelity") < 0.9);
}

TEST_CASE("Actuating scan", "[experiments]") {
  SECTION("nominal point sits inside the fixed-omega window") {
    const double v = kTwoPi, rabi = 1.65 * kTwoPi;
    const double t = standard_segment_duration(1.65, v);
    REQUIRE(t < 8.0 * M_PI * v / (rabi * rabi));
    REQUIRE(run_gate(1.65, v).fidelity > 0.96);
    REQUIRE_THAT(4.0 * v * t, WithinAbs(2.4 * M_PI, 0.05 * 2.4 * M_PI));
  }
  SECTION("default scan grows quadratically") {
    const auto r = run_actuating_scan({});
    REQUIRE(r.table.rows.size() == 5);
    REQUIRE(r.fit.valid);
    REQUIRE(r.fit.coefficients[2] > 0.0);
    REQUIRE(r.fit.relative_residual < 0.1);
    REQUIRE(r.table.metadata["fit"]["relative_residual"] == r.fit.relative_residual);
  }
  SECTION("unreachable threshold leaves every cell empty") {
    ActuatingSpec spec;
    spec.threshold = 1.01;
    spec.phase_steps = 5;
    spec.duration_steps = 10;
    const auto r = run_actuating_scan(spec);
    REQUIRE_FALSE(r.fit.valid);
    for (const auto& row : r.table.rows) {
      REQUIRE(std::get<double>(row[3]) == 0.0);
      REQUIRE(std::get<std::string>(row[6]).empty());
    }
  }
  SECTION("fixed-kappa and independent-phase modes") {
    ActuatingSpec spec;
    spec.mode = ActuatingMode::fixed_kappa;
    spec.phase_steps = 7;
    spec.duration_steps = 40;
    const auto r = run_actuating_scan(spec);
    REQUIRE(r.table.metadata["mode"] == "fixed-kappa");
    spec.independent_phases = true;
    spec.phase_steps = 3;
    spec.duration_steps = 10;
    spec.etas = {1.0};
    REQUIRE(run_actuating_scan(spec).table.rows[0].size() == 8);
  }
}

TEST_CASE("Quadratic fit", "[experiments]") {
  const auto f = fit_quadratic({1, 2, 3, 4}, {3, 9, 19, 33});  // 1 + 0 x + 2 x^2
  REQUIRE(f.valid);
  REQUIRE_THAT(f.coefficients[0], WithinAbs(1.0, 1e-10));
  REQUIRE_THAT(f.coefficients[1], WithinAbs(0.0, 1e-10));
  REQUIRE_THAT(f.coefficients[2], WithinAbs(2.0, 1e-10));
  REQUIRE(f.relative_residual < 1e-12);
  REQUIRE_FALSE(fit_quadratic({1, 2}, {1, 2}).valid);
}

TEST_CASE("Scan tables", "[experiments]") {
  std::setlocale(LC_ALL, "de_DE.UTF-8");
  ScanResult r;
  r.name = "t";
  r.axes = {{"x", {0.5, 1.25}}};
  r.columns = {"x", "y", "note"};
  r.rows = {{0.5, 1e-20, std::string("a")}, {1.25, -3.0, std::string()}};
  r.check_complete();
  std::ostringstream out;
  write_csv(out, r);
  REQUIRE(out.str() == "x,y,note\n0.5,1e-20,a\n1.25,-3,\n");
  REQUIRE(format_double(0.1) == "0.1");
  REQUIRE(format_double(std::nan("")) == "nan");
  const auto doc = to_json(r);
  REQUIRE(doc["rows"][1][2] == "");
  r.rows.pop_back();
  REQUIRE_THROWS_AS(r.check_complete(), NumericError);
  std::setlocale(LC_ALL, "C");
}
