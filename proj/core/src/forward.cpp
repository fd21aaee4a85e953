// Copyright 2026 The hamrec Authors
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

#include "hamrec/forward.hpp"

#include <cmath>
#include <stdexcept>

#include "json_detail.hpp"

namespace hamrec {

Trajectory integrate(const HamiltonianTrajectory& h, const DensityMatrix& rho0,
                     int substeps) {
  if (substeps < 1) throw std::invalid_argument("substeps must be >= 1");
  if (h.samples() < 2) throw std::invalid_argument("need at least 2 samples");
  if (rho0.dim() != h.dim())
    throw GridMismatch("initial state dimension differs from the hamiltonian");

  const int n = rho0.dim();
  std::vector<DensityMatrix> states;
  states.reserve(h.samples());
  states.push_back(rho0);

  ComplexMatrix rho = rho0.matrix;
  for (std::size_t j = 0; j + 1 < h.samples(); ++j) {
    const double dt = h.times[j + 1] - h.times[j];
    const double dsub = dt / substeps;
    for (int k = 0; k < substeps; ++k) {
      const double frac = (k + 0.5) / substeps;
      ComplexMatrix hmid = h.hamiltonians[j];
      hmid *= cd(1.0 - frac, 0.0);
      hmid += cd(frac, 0.0) * h.hamiltonians[j + 1];
      const ComplexMatrix prop = expm_i_hermitian(hmid, dsub / h.hbar);
      rho = prop * rho * prop.adjoint();
    }
    // Conjugation keeps Hermiticity to round-off; re-symmetrize so the
    // accumulated drift stays at machine precision.
    for (int r = 0; r < n; ++r)
      for (int c = r; c < n; ++c) {
        const cd x = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
        rho(r, c) = x;
        rho(c, r) = std::conj(x);
      }
    states.push_back(DensityMatrix{rho});
  }
  return Trajectory::create(h.times, std::move(states), h.hbar, 1e-6);
}

ResidualReport residual(const Trajectory& traj, const HamiltonianTrajectory& h,
                        int substeps) {
  if (traj.samples() != h.samples())
    throw GridMismatch("trajectory has " + std::to_string(traj.samples()) +
                       " samples, hamiltonian has " + std::to_string(h.samples()));
  for (std::size_t j = 0; j < traj.samples(); ++j)
    if (std::abs(traj.times[j] - h.times[j]) > 1e-12 * std::max(1.0, std::abs(h.times[j])))
      throw GridMismatch("time grids differ at sample " + std::to_string(j));
  if (traj.dim() != h.dim()) throw GridMismatch("dimension mismatch");

  ResidualReport report;
  for (std::size_t j = 1; j + 1 < traj.samples(); ++j) {
    const double dt = traj.times[j + 1] - traj.times[j - 1];
    const ComplexMatrix drho =
        (1.0 / dt) * (traj.states[j + 1].matrix - traj.states[j - 1].matrix);
    const ComplexMatrix comm = h.hamiltonians[j] * traj.states[j].matrix -
                               traj.states[j].matrix * h.hamiltonians[j];
    const double r = frobenius_diff(cd(0.0, traj.hbar) * drho, comm);
    report.per_sample.push_back(r);
    report.max_residual = std::max(report.max_residual, r);
  }

  const Trajectory integrated = integrate(h, traj.states.front(), substeps);
  for (std::size_t j = 0; j < traj.samples(); ++j)
    report.trajectory_distance =
        std::max(report.trajectory_distance,
                 frobenius_diff(integrated.states[j].matrix, traj.states[j].matrix));
  report.invariant_drift = integrated.spectral_drift;
  return report;
}

std::string residual_to_json(const ResidualReport& report) {
  nlohmann::ordered_json j;
  j["max_residual"] = report.max_residual;
  j["trajectory_distance"] = report.trajectory_distance;
  j["invariant_drift"] = report.invariant_drift;
  j["per_sample"] = report.per_sample;
  return j.dump();
}

}  // namespace hamrec
