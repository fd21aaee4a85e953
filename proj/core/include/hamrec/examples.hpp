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

#ifndef HAMREC_EXAMPLES_HPP
#define HAMREC_EXAMPLES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "hamrec/forward.hpp"
#include "hamrec/state.hpp"

namespace hamrec {

/// An analytic family of states with optional reference solutions, used as
/// golden data and as round-trip oracles.
struct ParametricExample {
  std::string name;
  int n = 0;
  std::map<std::string, double> parameters;
  std::function<DensityMatrix(double)> state_at;
  std::function<ComplexMatrix(double)> reference_hamiltonian_at;  // may be null
  std::function<ComplexMatrix(double)> reference_evolution_at;    // may be null
};

/// Qutrit pure state |psi> = (|1>, cos(wt)|2>, e^{i pi/6}|3>) normalized by
/// sqrt(2 + cos^2 wt), with its closed-form Hamiltonian and the explicit
/// evolution matrix transcribed verbatim as golden references.
ParametricExample qutrit_pure(double omega, double hbar = 1.0);

/// Qubit mixed state with spectrum (3/4, 1/4), rotated at rate g; the
/// references are the rotation U(t) and the constant H = i hbar g
/// [[0,1],[-1,0]].
ParametricExample qubit_mixed(double g, double hbar = 1.0);

/// Trigonometric random Hamiltonian H(t) = sum_m A_m cos(m nu t) +
/// B_m sin(m nu t) with seeded Hermitian amplitudes, applied to a seeded
/// random full-rank state; state_at integrates forward at fine substeps.
ParametricExample random_smooth_instance(int n, std::uint64_t seed, int terms,
                                         double hbar = 1.0);

/// Materializes states on a uniform grid of `samples` points spanning
/// [t0, t1]. One sequential pass, so it is much cheaper than repeated
/// state_at calls for integrated examples.
Trajectory sample_trajectory(const ParametricExample& ex, double t0, double t1,
                             int samples);

/// Reference Hamiltonian sampled on the same grid (requires the example to
/// carry one).
HamiltonianTrajectory sample_reference_hamiltonian(const ParametricExample& ex,
                                                   double t0, double t1,
                                                   int samples);

}  // namespace hamrec

#endif  // HAMREC_EXAMPLES_HPP
