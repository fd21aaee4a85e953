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

#ifndef HAMREC_ORBIT_HPP
#define HAMREC_ORBIT_HPP

#include <string>
#include <vector>

#include "hamrec/state.hpp"

namespace hamrec {

inline constexpr double kClusterTol = 1e-8;

/// Where an adjoint orbit lives: the canonical (sorted) spectrum, its
/// degeneracy pattern, Weyl-chamber coordinates in the projector and dual
/// bases, and the orbit dimension.
///
/// `dimension` uses the multiplicity formula n^2 - sum(m_i^2), which is
/// authoritative. `paper_dimension` is (n-1)(m+1) with m the number of
/// nonzero projector coefficients; the two agree on generic and maximally
/// degenerate orbits but differ on some mixed degeneracy patterns, so both
/// are reported.
struct OrbitDescriptor {
  int n = 0;
  std::vector<double> canonical_spectrum;  // descending
  std::vector<int> multiplicities;         // cluster sizes, partition of n
  std::vector<double> c_coeffs;            // projector-basis coordinates
  std::vector<double> b_coeffs;            // dual-basis coordinates
  int dimension = 0;
  int paper_dimension = 0;
  bool is_pure = false;
  bool is_generic = false;
};

/// gamma^(k) = sum_{j<=k} E_jj - (k/n) I  and  pi^(k) = E_kk - (1/n) I,
/// k = 1..n-1. The pi basis shifted by (1/n) I consists of projectors.
struct WeylBasis {
  std::vector<ComplexMatrix> gammas;
  std::vector<ComplexMatrix> pis;
};

WeylBasis make_weyl_basis(int n);
ComplexMatrix weyl_gamma(int n, int k);  // 1-based k
ComplexMatrix weyl_pi(int n, int k);

/// Eigenvalue clustering is single-linkage on the sorted spectrum with an
/// absolute gap threshold; degenerate inputs produce degenerate
/// descriptors, never errors.
OrbitDescriptor classify(const DensityMatrix& rho,
                         double cluster_tol = kClusterTol);

/// c_k = mu_kk - mu_nn for a diagonal traceless canonical form.
std::vector<double> projector_coefficients(const ComplexMatrix& mu_diag,
                                           double tol = kDefaultTol);

/// b_k = mu_kk - mu_{k+1,k+1}; requires the closed positive Weyl chamber
/// (non-increasing diagonal), else NotInChamber.
std::vector<double> dual_coefficients(const ComplexMatrix& mu_diag,
                                      double tol = kDefaultTol);

/// Per-inequality slack of the positivity conditions on dual coordinates.
/// slack[j] is the j-th diagonal entry of the canonical density matrix, so
/// feasibility means every entry is >= -tol.
struct PositivityReport {
  bool feasible = false;
  std::vector<double> slacks;
};

PositivityReport positivity_feasible(const std::vector<double>& b, int n,
                                     double tol = kDefaultTol);

std::string descriptor_to_json(const OrbitDescriptor& d);

}  // namespace hamrec

#endif  // HAMREC_ORBIT_HPP
