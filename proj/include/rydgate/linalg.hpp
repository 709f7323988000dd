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

#include <complex>
#include <numbers>

#include <Eigen/Core>

namespace rydgate {

using cplx = std::complex<double>;

inline constexpr int kDim = 9;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

using StateVector = Eigen::Matrix<cplx, kDim, 1>;
using Matrix9 = Eigen::Matrix<cplx, kDim, kDim>;
using DensityMatrix = Matrix9;
using Matrix4 = Eigen::Matrix<cplx, 4, 4>;
using Matrix2 = Eigen::Matrix<cplx, 2, 2>;
using Vector2 = Eigen::Matrix<cplx, 2, 1>;

// Maximum elementwise modulus of a - b.
template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace rydgate
