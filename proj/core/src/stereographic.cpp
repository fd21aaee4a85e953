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

#include "hamrec/stereographic.hpp"

#include <cmath>

namespace hamrec {

ZMask ZMask::full(int n) {
  ZMask m;
  m.n = n;
  m.blocks.assign(static_cast<std::size_t>(n), 1);
  return m;
}

ZMask ZMask::pure(int n) {
  ZMask m;
  m.n = n;
  m.blocks = {1, n - 1};
  if (n == 1) m.blocks = {1};
  return m;
}

ZMask ZMask::from_multiplicities(const std::vector<int>& multiplicities) {
  ZMask m;
  m.blocks = multiplicities;
  m.n = 0;
  for (int b : multiplicities) {
    if (b < 1) throw Error("multiplicities must be positive");
    m.n += b;
  }
  return m;
}

int ZMask::block_of(int index) const {
  int acc = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    acc += blocks[b];
    if (index < acc) return static_cast<int>(b);
  }
  throw Error("index out of range");
}

bool ZMask::allowed(int r, int c) const {
  return r > c && block_of(r) > block_of(c);
}

ZMatrix ZMatrix::from_matrix(const ComplexMatrix& m, const ZMask& mask,
                             double tol) {
  if (m.dim() != mask.n) throw Error("mask dimension mismatch");
  ComplexMatrix z = ComplexMatrix::identity(m.dim());
  double clamped = 0.0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      if (r == c) {
        clamped = std::max(clamped, std::abs(m(r, c) - cd(1.0)));
      } else if (mask.allowed(r, c)) {
        z(r, c) = m(r, c);
      } else {
        clamped = std::max(clamped, std::abs(m(r, c)));
      }
    }
  if (clamped > tol)
    throw Error("matrix is not unit lower triangular on the mask (defect " +
                std::to_string(clamped) + ")");
  return ZMatrix{z, mask};
}

ZMatrix ZMatrix::pure_from_vector(const std::vector<cd>& zvec) {
  const int n = static_cast<int>(zvec.size()) + 1;
  ComplexMatrix m = ComplexMatrix::identity(n);
  for (int r = 1; r < n; ++r) m(r, 0) = zvec[static_cast<std::size_t>(r - 1)];
  return ZMatrix{m, ZMask::pure(n)};
}

namespace {

// X R = B for unit upper triangular R, columnwise forward substitution.
ComplexMatrix solve_right_unit_upper(const ComplexMatrix& b,
                                     const ComplexMatrix& r) {
  const int n = b.dim();
  ComplexMatrix x(n);
  for (int c = 0; c < n; ++c)
    for (int row = 0; row < n; ++row) {
      cd s = b(row, c);
      for (int j = 0; j < c; ++j) s -= x(row, j) * r(j, c);
      x(row, c) = s;
    }
  return x;
}

// Z L = B for unit lower triangular L, solved column by column from the
// right.
ComplexMatrix solve_right_unit_lower(const ComplexMatrix& b,
                                     const ComplexMatrix& l) {
  const int n = b.dim();
  ComplexMatrix z(n);
  for (int c = n - 1; c >= 0; --c)
    for (int row = 0; row < n; ++row) {
      cd s = b(row, c);
      for (int j = c + 1; j < n; ++j) s -= z(row, j) * l(j, c);
      z(row, c) = s;
    }
  return z;
}

}  // namespace

IwasawaFactors iwasawa(const ZMatrix& z, double tol) {
  const int n = z.dim();
  const ComplexMatrix gram = z.matrix.adjoint() * z.matrix;

  // Root-free factorization gram = L D L* with L unit lower; then
  // r = L*, a = sqrt(D).
  ComplexMatrix l = ComplexMatrix::identity(n);
  std::vector<double> d(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double dk = gram(k, k).real();
    for (int j = 0; j < k; ++j) dk -= std::norm(l(k, j)) * d[static_cast<std::size_t>(j)];
    if (!(dk > tol)) throw NumericallySingular(k + 1, dk);
    d[static_cast<std::size_t>(k)] = dk;
    for (int r = k + 1; r < n; ++r) {
      cd s = gram(r, k);
      for (int j = 0; j < k; ++j)
        s -= l(r, j) * d[static_cast<std::size_t>(j)] * std::conj(l(k, j));
      l(r, k) = s / dk;
    }
  }

  IwasawaFactors f;
  f.r = l.adjoint();
  std::vector<double> a_diag(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) a_diag[static_cast<std::size_t>(k)] = std::sqrt(d[static_cast<std::size_t>(k)]);
  f.a = ComplexMatrix::diagonal(a_diag);

  // u = z r^{-1} a^{-1}
  ComplexMatrix u = solve_right_unit_upper(z.matrix, f.r);
  for (int c = 0; c < n; ++c)
    for (int row = 0; row < n; ++row) u(row, c) /= a_diag[static_cast<std::size_t>(c)];
  f.u = u;
  return f;
}

IwasawaFactors pure_state_factors(const std::vector<cd>& zvec) {
  const int n = static_cast<int>(zvec.size()) + 1;
  // asq[k] = a_k^2 = 1 + sum_{j=k}^{n} |z_j|^2, 1-based, a_1 = a_{n+1} = 1.
  std::vector<double> asq(static_cast<std::size_t>(n) + 2, 1.0);
  for (int k = n; k >= 2; --k)
    asq[static_cast<std::size_t>(k)] = asq[static_cast<std::size_t>(k) + 1] +
                                       std::norm(zvec[static_cast<std::size_t>(k - 2)]);

  IwasawaFactors f;
  f.r = ComplexMatrix::identity(n);
  for (int k = 2; k <= n; ++k)
    f.r(0, k - 1) = std::conj(zvec[static_cast<std::size_t>(k - 2)]) / asq[2];
  for (int j = 2; j < n; ++j)
    for (int k = j + 1; k <= n; ++k)
      f.r(j - 1, k - 1) = -zvec[static_cast<std::size_t>(j - 2)] *
                          std::conj(zvec[static_cast<std::size_t>(k - 2)]) /
                          asq[static_cast<std::size_t>(j + 1)];

  std::vector<double> a_diag(static_cast<std::size_t>(n));
  // diag(a_2, a_3/a_2, ..., a_{k+1}/a_k, ..., 1/a_n) with a_1 = a_{n+1} = 1.
  for (int k = 1; k <= n; ++k) {
    const double num = (k + 1 <= n) ? std::sqrt(asq[static_cast<std::size_t>(k + 1)]) : 1.0;
    const double den = (k >= 2) ? std::sqrt(asq[static_cast<std::size_t>(k)]) : 1.0;
    a_diag[static_cast<std::size_t>(k - 1)] = num / den;
  }
  f.a = ComplexMatrix::diagonal(a_diag);

  const ZMatrix z = ZMatrix::pure_from_vector(zvec);
  ComplexMatrix u = solve_right_unit_upper(z.matrix, f.r);
  for (int c = 0; c < n; ++c)
    for (int row = 0; row < n; ++row) u(row, c) /= a_diag[static_cast<std::size_t>(c)];
  f.u = u;
  return f;
}

ZExtraction extract_z(const ComplexMatrix& v, const ZMask& mask, double tol) {
  if (v.dim() != mask.n) throw Error("mask dimension mismatch");
  GaussFactors gauss;
  try {
    gauss = gauss_unit_lower(v, tol);
  } catch (const SingularMinor& e) {
    throw ChartSingularity(static_cast<std::size_t>(e.k));
  }

  // The Gauss factor is z times a within-block unit lower factor; strip the
  // latter to land exactly on the masked chart.
  const int n = v.dim();
  ComplexMatrix within = ComplexMatrix::identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < r; ++c)
      if (mask.block_of(r) == mask.block_of(c)) within(r, c) = gauss.lower(r, c);
  const ComplexMatrix z_raw = solve_right_unit_lower(gauss.lower, within);

  ZExtraction out;
  out.z = ZMatrix::from_matrix(z_raw, mask, 1e-8);
  out.residual_factor = iwasawa(out.z).u.adjoint() * v;
  return out;
}

ComplexMatrix chart_unitary_2x2(cd z) {
  const double norm = std::sqrt(1.0 + std::norm(z));
  ComplexMatrix u(2);
  u(0, 0) = 1.0 / norm;
  u(0, 1) = -std::conj(z) / norm;
  u(1, 0) = z / norm;
  u(1, 1) = 1.0 / norm;
  return u;
}

namespace {

double branch_denominator(const DensityMatrix& rho, Branch branch) {
  const double delta = rho.matrix(0, 0).real() - rho.matrix(1, 1).real();
  const double disc =
      std::sqrt(delta * delta + 4.0 * std::norm(rho.matrix(0, 1)));
  return branch == Branch::plus ? delta + disc : delta - disc;
}

}  // namespace

cd z_from_density_2x2(const DensityMatrix& rho, Branch branch, double tol) {
  if (rho.dim() != 2) throw Error("z_from_density_2x2 requires n = 2");
  const double den = branch_denominator(rho, branch);
  if (std::abs(den) <= tol) throw DegenerateDenominator(std::abs(den));
  return 2.0 * std::conj(rho.matrix(0, 1)) / den;
}

ComplexMatrix canonical_2x2(const DensityMatrix& rho, Branch branch) {
  if (rho.dim() != 2) throw Error("canonical_2x2 requires n = 2");
  const double tr = rho.matrix.trace().real();
  const double delta = rho.matrix(0, 0).real() - rho.matrix(1, 1).real();
  const double disc =
      std::sqrt(delta * delta + 4.0 * std::norm(rho.matrix(0, 1)));
  const double hi = 0.5 * (tr + disc);
  const double lo = 0.5 * (tr - disc);
  // Branch minus conjugates from the ascending form, branch plus from the
  // descending one.
  return branch == Branch::minus
             ? ComplexMatrix::diagonal(std::vector<double>{lo, hi})
             : ComplexMatrix::diagonal(std::vector<double>{hi, lo});
}

}  // namespace hamrec
