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

#include "rydgate/basis.hpp"

#include <algorithm>

#include "rydgate/errors.hpp"

namespace rydgate {

BasisIndex BasisIndex::from_label(std::string_view label) {
  const auto it = std::find(kBasisLabels.begin(), kBasisLabels.end(), label);
  if (it == kBasisLabels.end()) {
    throw InvalidParameter("unknown basis label '" + std::string(label) + "'");
  }
  return BasisIndex(static_cast<int>(it - kBasisLabels.begin()));
}

std::string_view BasisIndex::label() const { return kBasisLabels[static_cast<std::size_t>(value_)]; }

void BasisIndex::throw_out_of_range(int value) {
  throw InvalidParameter("basis index " + std::to_string(value) + " outside 0..8");
}

StateVector basis_state(BasisIndex index) {
  StateVector psi = StateVector::Zero();
  psi(index.value()) = 1.0;
  return psi;
}

StateVector equal_computational_superposition() {
  StateVector psi = StateVector::Zero();
  for (int k : kComputational) psi(k) = 0.5;
  return psi;
}

DensityMatrix density_from_state(const StateVector& psi) { return psi * psi.adjoint(); }

}  // namespace rydgate
