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

#ifndef HAMREC_RECONSTRUCT_HPP
#define HAMREC_RECONSTRUCT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamrec/orbit.hpp"
#include "hamrec/state.hpp"
#include "hamrec/stereographic.hpp"

namespace hamrec {

enum class DiffMethod { central_difference, unitary_log };

/// How a Hamiltonian is differentiated out of an operator path.
///
/// richardson_levels = 0 keeps the plain second-order stencils (and the
/// plain O(dt^2) convergence they imply). Level L combines stencil widths
/// h, 2h, ..., 2^L h into a higher-order estimate; it requires a uniform
/// grid. periodic treats the path as a closed loop (last operator equals
/// the first), which removes one-sided boundary stencils entirely.
struct DiffOptions {
  DiffMethod method = DiffMethod::central_difference;
  int richardson_levels = 0;
  bool periodic = false;
  double log_phase_tol = 1e-6;
};

/// Special unitary operators U_j with U at the basepoint equal to the
/// identity and U_j rho(t_base) U_j^dagger = rho(t_j).
struct EvolutionPath {
  std::vector<double> times;
  std::vector<ComplexMatrix> operators;
  std::size_t basepoint_index = 0;
  double hbar = 1.0;
  /// Global U(1) phase removed per sample to land in the special unitary
  /// group; pure gauge, logged rather than discarded.
  std::vector<double> removed_phases;

  std::size_t samples() const { return times.size(); }
  int dim() const { return operators.empty() ? 0 : operators.front().dim(); }
};

struct HamiltonianTrajectory {
  std::vector<double> times;
  std::vector<ComplexMatrix> hamiltonians;  // Hermitian after projection
  DiffMethod method = DiffMethod::central_difference;
  /// Norm of the anti-Hermitian part removed from each raw sample.
  std::vector<double> hermitize_residuals;
  double hbar = 1.0;

  std::size_t samples() const { return times.size(); }
  int dim() const { return hamiltonians.empty() ? 0 : hamiltonians.front().dim(); }
  double max_hermitize_residual() const;
};

/// A path v(t) in the stabilizer of the canonical form: unitary,
/// block-diagonal with respect to the orbit's multiplicity pattern.
/// generator_at returns W(t) = v'(t) v(t)^{-1} (anti-Hermitian,
/// block-diagonal); when absent, gauge_transform falls back to finite
/// differences of v_samples.
struct GaugeElement {
  std::vector<int> block_sizes;
  std::function<ComplexMatrix(double)> v_at;
  std::function<ComplexMatrix(double)> generator_at;
  std::vector<ComplexMatrix> v_samples;
};

struct Reconstruction {
  EvolutionPath path;
  HamiltonianTrajectory hamiltonian;
  /// Orbit 'evolution' matrices u_j with u_j rho_in u_j^dagger = rho(t_j);
  /// the operators are U_j = u_j u_base^dagger.
  std::vector<ComplexMatrix> u_samples;
  OrbitDescriptor orbit;
  double max_conjugation_defect = 0.0;
  /// Chart coordinates per sample; absent where the chart is singular.
  std::vector<std::optional<ZMatrix>> z_samples;
};

/// Pure-state pipeline: per sample the dominant eigenvector gives
/// projective coordinates z_k (phase-free ratios), the closed-form chart
/// unitary u(z), and U_j = u_j u_base^dagger. Throws NotPure if any sample
/// is off the pure orbit and ChartSingularity when the leading state
/// component falls below chart_tol.
Reconstruction reconstruct_pure(const Trajectory& traj,
                                const DiffOptions& opts = {},
                                std::size_t basepoint = 0,
                                double chart_tol = 1e-8);

/// General pipeline: per-sample diagonalization, eigenvector continuity
/// (cluster-wise alignment to the previous sample), determinant phase
/// tracked continuously into the special unitary group, U_j = V_j
/// V_base^dagger. Throws EigenvalueCrossing when the cluster structure
/// changes between adjacent samples.
Reconstruction reconstruct_mixed(const Trajectory& traj,
                                 const DiffOptions& opts = {},
                                 std::size_t basepoint = 0,
                                 double cluster_tol = kClusterTol);

/// H_j = i hbar (dU/dt) U_j^dagger for the central method, or the
/// principal logarithm of single-step propagators for the log method
/// (exact for piecewise-constant generators; last sample replicated).
/// Raw samples are Hermitian-projected with the removed norm recorded.
HamiltonianTrajectory hamiltonian_from_path(const EvolutionPath& path,
                                            const DiffOptions& opts = {});

struct GaugeResult {
  EvolutionPath path;
  HamiltonianTrajectory hamiltonian;
  std::vector<ComplexMatrix> v_samples;
};

/// Right-multiplies the orbit evolution matrices by a stabilizer path:
/// U'_j = u_j v_j u_base^dagger and H_v = H + i hbar u_j W_j u_j^dagger.
/// v is normalized so v(t_base) = I (right-translation, which leaves the
/// generator untouched). The state trajectory generated by H_v is
/// identical to the one generated by H.
GaugeResult gauge_transform(const EvolutionPath& path,
                            const HamiltonianTrajectory& h,
                            const GaugeElement& v,
                            const std::vector<ComplexMatrix>& u_samples);

/// Smooth random stabilizer path: v(t) = exp(i s(t) G) with G a seeded
/// Hermitian block-diagonal generator of unit norm and s(t) =
/// smoothness * sin(kappa t). smoothness = 0 gives the identity path.
GaugeElement sample_stabilizer(const OrbitDescriptor& descriptor,
                               std::uint64_t seed, double smoothness);

/// JSON codec mirroring the trajectory format, with "hamiltonians" in
/// place of "states" plus {"method", "hermitize_residual_max"}.
std::string serialize_hamiltonian(const HamiltonianTrajectory& h);
HamiltonianTrajectory load_hamiltonian(const std::string& json_text,
                                       double tol = 1e-6);
HamiltonianTrajectory load_hamiltonian_file(const std::filesystem::path& path,
                                            double tol = 1e-6);
void save_hamiltonian_file(const HamiltonianTrajectory& h,
                           const std::filesystem::path& path);

}  // namespace hamrec

#endif  // HAMREC_RECONSTRUCT_HPP
