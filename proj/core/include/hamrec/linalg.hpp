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

#ifndef HAMREC_LINALG_HPP
#define HAMREC_LINALG_HPP

#include <complex>
#include <vector>

#include "hamrec/errors.hpp"

namespace hamrec {

using cd = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

/// Dense square complex matrix, row-major, value semantics. All hamrec
/// matrices are small (n up to ~16), so no effort is spent on blocking.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(const std::vector<double>& d);
  static ComplexMatrix diagonal(const std::vector<cd>& d);

  int dim() const { return n_; }

  cd& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  const cd& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * n_ + c];
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cd s);

  ComplexMatrix adjoint() const;
  cd trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

 private:
  int n_ = 0;
  std::vector<cd> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cd s, ComplexMatrix a);

/// Entrywise max |a - b|; the matrices must have equal dimension.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||M - M^dagger||_F
double hermitian_defect(const ComplexMatrix& m);
/// ||M^dagger M - I||_F
double unitarity_defect(const ComplexMatrix& m);

std::vector<cd> column(const ComplexMatrix& m, int c);
std::vector<cd> matvec(const ComplexMatrix& m, const std::vector<cd>& v);
/// v v^dagger for a (not necessarily normalized) vector v.
ComplexMatrix outer_projector(const std::vector<cd>& v);

/// Determinant by LU with partial pivoting.
cd determinant(const ComplexMatrix& m);

/// Eigenvalues sorted descending (ties keep diagonal order); columns of
/// `vectors` are the matching orthonormal eigenvectors. Each column is
/// scaled so its largest-magnitude component (lowest row index on ties)
/// is real positive.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Deterministic:
/// identical input bytes give identical output.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol);

/// exp(-i s H) for Hermitian H, computed through hermitian_eig so the
/// result is unitary to round-off.
ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double s,
                               double tol = kDefaultTol);

struct GaussFactors {
  ComplexMatrix lower;  // unit lower triangular
  ComplexMatrix upper;  // upper triangular
};

/// M = L R with L unit lower triangular, no pivoting. Throws
/// SingularMinor(k) when the k-th leading principal minor magnitude
/// falls at or below tol; pivoting would silently change the
/// parametrization chart, so singularity is reported instead.
GaussFactors gauss_unit_lower(const ComplexMatrix& m, double tol = kDefaultTol);

/// Principal logarithm of a unitary matrix via the Cayley transform
/// A = i(I - W)(I + W)^{-1}, which is Hermitian with eigenvalues
/// tan(theta/2). Returns the anti-Hermitian log. Throws
/// StepTooLarge(0) when an eigenphase lies within phase_tol of +-pi.
ComplexMatrix unitary_log(const ComplexMatrix& w, double phase_tol = 1e-6);

}  // namespace hamrec

#endif  // HAMREC_LINALG_HPP
