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

#ifndef HAMREC_STATE_HPP
#define HAMREC_STATE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "hamrec/linalg.hpp"

namespace hamrec {

inline constexpr double kStateTol = 1e-8;
inline constexpr double kIsospectralTol = 1e-8;

/// Hermitian, unit-trace, positive-semidefinite matrix. Construct through
/// validate_density so in-memory values are always valid.
struct DensityMatrix {
  ComplexMatrix matrix;
  int dim() const { return matrix.dim(); }
};

/// Density matrix shifted by -(1/n) I; lives in the traceless Hermitian
/// algebra where adjoint orbits are classified.
struct TracelessState {
  ComplexMatrix matrix;
  int dim() const { return matrix.dim(); }
};

/// Checks Hermiticity, unit trace and positive semidefiniteness, in that
/// order; throws NotHermitian / TraceNotOne / NotPositiveSemidefinite with
/// the measured defect.
DensityMatrix validate_density(const ComplexMatrix& m, double tol = kStateTol);

/// Entry k-1 holds Tr rho^k for k = 1..kmax.
std::vector<double> trace_powers(const DensityMatrix& rho, int kmax);

TracelessState to_traceless(const DensityMatrix& rho);

/// Strictly increasing time grid with one validated state per sample.
/// Construction enforces isospectrality: Tr rho^k must be constant along
/// the grid for k = 1..n, since unitary evolution preserves the spectrum.
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  double hbar = 1.0;
  double spectral_drift = 0.0;  // max |Tr rho^k(t_j) - Tr rho^k(t_0)|

  int dim() const { return states.empty() ? 0 : states.front().dim(); }
  std::size_t samples() const { return times.size(); }

  static Trajectory create(std::vector<double> times,
                           std::vector<DensityMatrix> states, double hbar,
                           double iso_tol = kIsospectralTol);
};

/// Parses and fully validates the trajectory JSON format:
///   {"n": int, "hbar": float, "times": [...], "states": [matrix...]}
/// with each matrix a row-major array of rows of [re, im] pairs.
Trajectory load_trajectory(const std::string& json_text, double tol = kStateTol,
                           double iso_tol = kIsospectralTol);
Trajectory load_trajectory_file(const std::filesystem::path& path,
                                double tol = kStateTol,
                                double iso_tol = kIsospectralTol);

/// Emits the same format with 17 significant digits per float, so a
/// write/read round trip is bit exact.
std::string serialize_trajectory(const Trajectory& traj);
void save_trajectory_file(const Trajectory& traj,
                          const std::filesystem::path& path);

}  // namespace hamrec

#endif  // HAMREC_STATE_HPP
