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

#include "rydgate/propagate.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "rydgate/errors.hpp"
#include "rydgate/scan.hpp"

namespace rydgate {
namespace {

constexpr int kMaxSubsteps = 1 << 20;

void check_config(const Schedule& schedule, const IntegratorConfig& config) {
  validate(schedule);
  if (config.mode == IntegratorMode::exact_segment && schedule.time_dependent()) {
    throw ModeError("exact-segment integration requested for a time-dependent schedule");
  }
  if (config.substeps < 1) throw InvalidParameter("substeps must be at least 1");
  if (config.samples_per_segment < 1) throw InvalidParameter("samples_per_segment must be at least 1");
}

// Walks the schedule step by step. `apply(U)` advances the propagated object
// by a step propagator, `sample(t)` records history.
template <typename Apply, typename Sample>
void walk(const Schedule& schedule, const DecaySpec* decay, const IntegratorConfig& config, Apply&& apply,
          Sample&& sample) {
  const bool record = config.record_history;
  const int samples = config.samples_per_segment;
  double t0 = 0.0;
  if (record) sample(0.0);
  for (std::size_t s = 0; s < schedule.segments.size(); ++s) {
    const double duration = schedule.segments[s].duration;
    const auto hamiltonian_at = [&](double local) {
      auto h = build_full(instantaneous_drive(schedule, s, local, t0 + local));
      return decay ? apply_decay(h, *decay) : h;
    };
    if (config.mode == IntegratorMode::exact_segment) {
      const auto h = hamiltonian_at(0.0);
      if (record) {
        const double dt = duration / samples;
        const Matrix9 u = step_propagator(h, dt);
        for (int k = 1; k <= samples; ++k) {
          apply(u);
          sample(t0 + (k == samples ? duration : k * dt));
        }
      } else {
        apply(step_propagator(h, duration));
      }
    } else {
      const int n = config.substeps;
      const double dt = duration / n;
      for (int k = 0; k < n; ++k) {
        apply(step_propagator(hamiltonian_at((k + 0.5) * dt), dt));
        if (record) {
          const long long before = static_cast<long long>(k) * samples / n;
          const long long after = static_cast<long long>(k + 1) * samples / n;
          if (after > before) sample(t0 + (k + 1 == n ? duration : (k + 1) * dt));
        }
      }
    }
    t0 += duration;
  }
}

PopulationSample sample_state(double t, const StateVector& psi) {
  PopulationSample p;
  p.time = t;
  for (int i = 0; i < kDim; ++i) p.populations[static_cast<std::size_t>(i)] = std::norm(psi(i));
  p.norm = psi.squaredNorm();
  return p;
}

PopulationSample sample_density(double t, const DensityMatrix& rho) {
  PopulationSample p;
  p.time = t;
  for (int i = 0; i < kDim; ++i) p.populations[static_cast<std::size_t>(i)] = rho(i, i).real();
  p.norm = rho.trace().real();
  return p;
}

void check_density(const DensityMatrix& rho) {
  if (max_abs_diff(rho, rho.adjoint()) > 1e-12) throw InvalidParameter("density matrix is not Hermitian");
  if (rho.trace().real() > 1.0 + 1e-9) throw InvalidParameter("density matrix trace exceeds 1");
  Eigen::SelfAdjointEigenSolver<Matrix9> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) throw InvalidParameter("density matrix is not positive semidefinite");
}

}  // namespace

Matrix9 step_propagator(const OperatorMatrix& h, double dt) {
  if (h.hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix9> es(h.elements);
    if (es.info() != Eigen::Success) throw IntegratorFailure("eigendecomposition failed");
    Eigen::Matrix<cplx, kDim, 1> phases;
    for (int i = 0; i < kDim; ++i) phases(i) = std::polar(1.0, -es.eigenvalues()(i) * dt);
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  }
  const Matrix9 generator = (-kI * dt) * h.elements;
  return generator.exp();
}

PropagationResult propagate_state(const Schedule& schedule, const StateVector& initial,
                                  const IntegratorConfig& config) {
  check_config(schedule, config);
  if (std::abs(initial.norm() - 1.0) > 1e-9) throw InvalidParameter("initial state is not normalized");
  PropagationResult result;
  result.state = initial;
  walk(
      schedule, nullptr, config, [&](const Matrix9& u) { result.state = u * result.state; },
      [&](double t) { result.history.push_back(sample_state(t, result.state)); });
  return result;
}

Matrix9 evolution_operator(const Schedule& schedule, const IntegratorConfig& config) {
  check_config(schedule, config);
  IntegratorConfig quiet = config;
  quiet.record_history = false;
  Matrix9 u = Matrix9::Identity();
  walk(
      schedule, nullptr, quiet, [&](const Matrix9& step) { u = step * u; }, [](double) {});
  return u;
}

Matrix9 evolution_operator(const Schedule& schedule, const DecaySpec& decay, const IntegratorConfig& config) {
  check_config(schedule, config);
  if (!(decay.gamma >= 0.0)) throw InvalidParameter("decay rate must be non-negative");
  IntegratorConfig quiet = config;
  quiet.record_history = false;
  Matrix9 u = Matrix9::Identity();
  walk(
      schedule, &decay, quiet, [&](const Matrix9& step) { u = step * u; }, [](double) {});
  return u;
}

DensityPropagationResult propagate_density(const Schedule& schedule, const DensityMatrix& initial,
                                           const DecaySpec& decay, const IntegratorConfig& config) {
  check_config(schedule, config);
  check_density(initial);
  if (!(decay.gamma >= 0.0)) throw InvalidParameter("decay rate must be non-negative");
  DensityPropagationResult result;
  result.rho = initial;
  double trace = initial.trace().real();
  walk(
      schedule, &decay, config,
      [&](const Matrix9& u) {
        result.rho = u * result.rho * u.adjoint();
        const double next = result.rho.trace().real();
        if (next > trace + 1e-7) {
          throw IntegratorFailure("density trace increased from " + std::to_string(trace) + " to " +
                                  std::to_string(next));
        }
        trace = next;
      },
      [&](double t) { result.history.push_back(sample_density(t, result.rho)); });
  return result;
}

ConvergenceReport convergence_check(const Schedule& schedule, const StateVector& initial,
                                    const IntegratorConfig& config) {
  if (config.mode != IntegratorMode::substepped) throw ModeError("convergence check needs substepped mode");
  IntegratorConfig c = config;
  c.record_history = false;
  ConvergenceReport report;
  StateVector previous = propagate_state(schedule, initial, c).state;
  while (c.substeps < kMaxSubsteps) {
    c.substeps *= 2;
    StateVector next = propagate_state(schedule, initial, c).state;
    const double distance = (next - previous).norm();
    report.refinements.emplace_back(c.substeps, distance);
    if (distance < config.tolerance) {
      report.converged_substeps = c.substeps;
      report.final_distance = distance;
      report.state = next;
      return report;
    }
    previous = std::move(next);
  }
  throw IntegratorFailure("no convergence within " + std::to_string(kMaxSubsteps) + " substeps");
}

void write_history_csv(std::ostream& out, const std::vector<PopulationSample>& history) {
  out << "t";
  for (auto label : kBasisLabels) out << ",P" << label;
  out << ",norm\n";
  for (const auto& row : history) {
    out << format_double(row.time);
    for (double p : row.populations) out << ',' << format_double(p);
    out << ',' << format_double(row.norm) << '\n';
  }
}

}  // namespace rydgate
