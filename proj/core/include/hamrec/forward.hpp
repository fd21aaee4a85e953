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

#ifndef HAMREC_FORWARD_HPP
#define HAMREC_FORWARD_HPP

#include <string>

#include "hamrec/reconstruct.hpp"
#include "hamrec/state.hpp"

namespace hamrec {

/// Integrates i hbar d rho/dt = [H, rho] by piecewise-unitary stepping:
/// per substep the propagator exp(-i H_mid dt / hbar) is applied, with
/// H_mid the linear interpolation of the samples at the substep midpoint.
/// Conjugation preserves the trace and the whole spectrum by construction,
/// so the result stays on the orbit regardless of step size.
Trajectory integrate(const HamiltonianTrajectory& h, const DensityMatrix& rho0,
                     int substeps = 4);

struct ResidualReport {
  /// ||i hbar d rho/dt - [H, rho]||_F at interior samples, with the
  /// derivative from the same central stencil reconstruction uses.
  std::vector<double> per_sample;
  double max_residual = 0.0;
  /// Max Frobenius distance between the re-integrated and the prescribed
  /// states.
  double trajectory_distance = 0.0;
  /// Max trace-power drift of the integrated trajectory.
  double invariant_drift = 0.0;
};

/// Measures how well a candidate Hamiltonian explains a trajectory.
/// Throws GridMismatch unless the two grids agree.
ResidualReport residual(const Trajectory& traj, const HamiltonianTrajectory& h,
                        int substeps = 8);

std::string residual_to_json(const ResidualReport& report);

}  // namespace hamrec

#endif  // HAMREC_FORWARD_HPP
