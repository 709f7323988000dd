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

#include "rydgate/geometry.hpp"

#include <cmath>

#include "rydgate/errors.hpp"

namespace rydgate {
namespace {

void check_positive(double kappa, double v) {
  if (!(kappa > 0.0) || !(v > 0.0) || !std::isfinite(kappa) || !std::isfinite(v)) {
    throw InvalidParameter("kappa and v must be positive");
  }
}

}  // namespace

double chi(double kappa) {
  if (!(kappa >= 0.0)) throw InvalidParameter("kappa must be non-negative");
  return kPi / std::sqrt(16.0 * kappa * kappa + 1.0);
}

Matrix2 u11_analytic(double phi, double chi_value) {
  const cplx e = std::polar(1.0, -chi_value);
  const cplx s = std::polar(1.0, -2.0 * phi);
  Matrix2 u;
  u << 1.0 + e, s * (1.0 - e), s * (1.0 - e), 1.0 + e;
  return 0.5 * u;
}

TwoLevelParams TwoLevelParams::from_drive(double rabi, double detuning, double duration, double phase) {
  TwoLevelParams p;
  p.mixing_angle = detuning == 0.0 ? kPi / 2.0 : std::atan(rabi / detuning);
  p.half_angle = std::sqrt(rabi * rabi + detuning * detuning) * duration / 2.0;
  p.phase = phase;
  return p;
}

std::array<double, 3> TwoLevelParams::axis() const {
  const double s = std::sin(mixing_angle);
  return {s * std::sin(phase), s * std::cos(phase), std::cos(mixing_angle)};
}

Matrix2 u10_analytic(const TwoLevelParams& params) {
  const auto [nx, ny, nz] = params.axis();
  Matrix2 n_sigma;
  n_sigma << nz, cplx(nx, -ny), cplx(nx, ny), -nz;
  return std::cos(params.half_angle) * Matrix2::Identity() - kI * std::sin(params.half_angle) * n_sigma;
}

Matrix2 u11_lab(double kappa, double phi) {
  const double c = chi(kappa);
  return -std::polar(1.0, c) * u11_analytic(phi, c + kPi);
}

Matrix2 u10_lab(double rabi, double detuning, double duration, double phase) {
  if (detuning > 0.0) throw InvalidParameter("u10_lab covers non-positive detuning only");
  const auto params = TwoLevelParams::from_drive(rabi, detuning, duration, -phase - kPi / 2.0);
  return std::polar(1.0, -detuning * duration / 2.0) * u10_analytic(params);
}

DressedPair dressed_states(double phi) {
  const cplx s = std::polar(1.0, -2.0 * phi) / std::sqrt(2.0);
  const double c = 1.0 / std::sqrt(2.0);
  DressedPair pair;
  pair.bright << s, c;
  pair.dark << s, -c;
  return pair;
}

Periods periods(double kappa, double v) {
  check_positive(kappa, v);
  const double rabi = kappa * v;
  const double detuning = -v / 2.0;
  return {kTwoPi / std::sqrt(4.0 * rabi * rabi + detuning * detuning),
          kTwoPi / std::sqrt(rabi * rabi + detuning * detuning)};
}

double composite_condition(double kappa) {
  // Scale free, so v = 1.
  const double t11 = periods(kappa, 1.0).t11;
  const auto p = TwoLevelParams::from_drive(kappa, -0.5, t11, 0.0);
  return std::tan(p.half_angle) * std::cos(p.mixing_angle) + 1.0;
}

double composite_cyclic_root(double lo, double hi, double tolerance) {
  double flo = composite_condition(lo);
  const double fhi = composite_condition(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi) || flo * fhi > 0.0) {
    throw RootNotFound("composite condition has no sign change on the bracket");
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = composite_condition(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double composite_return_probability(double kappa) {
  const double t11 = periods(kappa, 1.0).t11;
  const Matrix2 pair = u10_lab(kappa, -0.5, t11, kPi / 2.0) * u10_lab(kappa, -0.5, t11, 0.0);
  const Matrix2 u = pair * pair;
  return std::norm(u(0, 0));
}

}  // namespace rydgate
