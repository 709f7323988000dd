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
#include <optional>
#include <ostream>
#include <vector>

#include "rydgate/hamiltonian.hpp"
#include "rydgate/linalg.hpp"
#include "rydgate/model.hpp"

namespace rydgate {

enum class IntegratorMode {
  exact_segment,  // one eigendecomposition exponential per constant segment
  substepped,     // midpoint exponentials on equal substeps
};

struct IntegratorConfig {
  int substeps = 1000;
  double tolerance = 1e-8;
  IntegratorMode mode = IntegratorMode::exact_segment;
  int samples_per_segment = 100;
  bool record_history = true;

  static IntegratorConfig substepped_with(int substeps) {
    IntegratorConfig c;
    c.mode = IntegratorMode::substepped;
    c.substeps = substeps;
    c.record_history = false;
    return c;
  }
};

struct PopulationSample {
  double time = 0.0;
  std::array<double, kDim> populations{};
  double norm = 0.0;
};

struct PropagationResult {
  StateVector state = StateVector::Zero();
  std::vector<PopulationSample> history;
};

struct DensityPropagationResult {
  DensityMatrix rho = DensityMatrix::Zero();
  std::vector<PopulationSample> history;
};

// Exact step propagator exp(-i H dt). Hermitian generators go through a
// self-adjoint eigendecomposition, others through Pade scaling and squaring.
Matrix9 step_propagator(const OperatorMatrix& h, double dt);

PropagationResult propagate_state(const Schedule& schedule, const StateVector& initial,
                                  const IntegratorConfig& config = {});

// Column j is the propagated basis vector j.
Matrix9 evolution_operator(const Schedule& schedule, const IntegratorConfig& config = {});

// Non-unitary propagator of the effective Hamiltonian with decay.
Matrix9 evolution_operator(const Schedule& schedule, const DecaySpec& decay, const IntegratorConfig& config = {});

// rho' = -i (H_eff rho - rho H_eff^dagger), H_eff = apply_decay(H, decay).
DensityPropagationResult propagate_density(const Schedule& schedule, const DensityMatrix& initial,
                                           const DecaySpec& decay, const IntegratorConfig& config = {});

struct ConvergenceReport {
  int converged_substeps = 0;
  double final_distance = 0.0;
  std::vector<std::pair<int, double>> refinements;  // (substeps, distance to previous)
  StateVector state = StateVector::Zero();
};

// Doubles the substep count until successive final states differ by less
// than config.tolerance in norm. Gives up beyond 2^20 substeps.
ConvergenceReport convergence_check(const Schedule& schedule, const StateVector& initial,
                                    const IntegratorConfig& config);

// CSV: t,P00,...,Prr,norm
void write_history_csv(std::ostream& out, const std::vector<PopulationSample>& history);

}  // namespace rydgate
