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

#ifndef HAMREC_STEREOGRAPHIC_HPP
#define HAMREC_STEREOGRAPHIC_HPP

#include <vector>

#include "hamrec/state.hpp"

namespace hamrec {

/// Which strictly-lower positions of a coordinate matrix may be nonzero.
/// Blocks are the eigenvalue clusters of the canonical form, in descending
/// spectral order; a position (r, c) is allowed exactly when r's cluster
/// lies strictly below c's. Generic orbits allow the full lower triangle,
/// pure states only the first column.
struct ZMask {
  int n = 0;
  std::vector<int> blocks;  // cluster sizes, sum = n

  static ZMask full(int n);
  static ZMask pure(int n);
  static ZMask from_multiplicities(const std::vector<int>& multiplicities);

  bool allowed(int r, int c) const;
  int block_of(int index) const;
};

/// Unit lower triangular coordinate matrix; entries outside the mask are
/// exactly zero.
struct ZMatrix {
  ComplexMatrix matrix;
  ZMask mask;

  int dim() const { return matrix.dim(); }

  /// Clamps entries that must vanish (diagonal to 1, upper and off-mask
  /// lower to 0) and rejects inputs whose clamped part exceeds tol.
  static ZMatrix from_matrix(const ComplexMatrix& m, const ZMask& mask,
                             double tol = 1e-9);
  /// First-column chart of a pure-state orbit: entries z_2..z_n.
  static ZMatrix pure_from_vector(const std::vector<cd>& zvec);
};

/// z = u a r with u special unitary, a positive diagonal of determinant 1,
/// r unit upper triangular.
struct IwasawaFactors {
  ComplexMatrix u;
  ComplexMatrix a;
  ComplexMatrix r;
};

/// Iwasawa decomposition through the Hermitian positive-definite product
/// z* z = r* a^2 r, factored root-free with a unit-diagonal triangular
/// factor; a takes the positive square roots. Throws NumericallySingular
/// when a pivot collapses (cannot happen for exact unit-triangular input).
IwasawaFactors iwasawa(const ZMatrix& z, double tol = 1e-12);

/// Closed forms for the pure-state chart:
///   a_k^2 = 1 + sum_{j>=k} |z_j|^2,  r_1k = conj(z_k)/a_2^2,
///   r_jk = -z_j conj(z_k)/a_{j+1}^2
/// assembled into the same factor shapes as the general algorithm.
IwasawaFactors pure_state_factors(const std::vector<cd>& zvec);

struct ZExtraction {
  ZMatrix z;
  /// u(z)^dagger V; lies in the block structure implied by the mask, the
  /// stabilizer of the canonical form. Never discarded: the chart matrix
  /// is unique only modulo this factor.
  ComplexMatrix residual_factor;
};

/// Recovers chart coordinates from a unitary V: take the unit lower Gauss
/// factor of V and strip its within-block part. Throws
/// ChartSingularity(k) when a leading principal minor of V vanishes.
ZExtraction extract_z(const ComplexMatrix& v, const ZMask& mask,
                      double tol = kDefaultTol);

enum class Branch { plus, minus };

/// The 2x2 chart coordinate z = 2 conj(rho_12) / (rho_11 - rho_22 +- disc)
/// with disc = sqrt((rho_11-rho_22)^2 + 4 |rho_12|^2). Branch minus pairs
/// with the ascending canonical form diag(lambda_min, lambda_max), branch
/// plus with the descending one.
cd z_from_density_2x2(const DensityMatrix& rho, Branch branch,
                      double tol = kDefaultTol);

/// Canonical form matching the branch convention of z_from_density_2x2.
ComplexMatrix canonical_2x2(const DensityMatrix& rho, Branch branch);

/// The 2x2 chart unitary (1/sqrt(1+|z|^2)) [[1, -conj(z)], [z, 1]].
ComplexMatrix chart_unitary_2x2(cd z);

}  // namespace hamrec

#endif  // HAMREC_STEREOGRAPHIC_HPP
