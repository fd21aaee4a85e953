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

#include "hamrec/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace hamrec {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cd>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cd s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

cd ComplexMatrix::trace() const {
  cd t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& x : data_)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  assert(a.dim() == b.dim());
  const int n = a.dim();
  ComplexMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cd aik = a(i, k);
      if (aik == cd(0.0)) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix operator*(cd s, ComplexMatrix a) { return a *= s; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  assert(a.dim() == b.dim());
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

double frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  assert(a.dim() == b.dim());
  double s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) s += std::norm(a(r, c) - b(r, c));
  return std::sqrt(s);
}

double hermitian_defect(const ComplexMatrix& m) {
  double s = 0.0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) s += std::norm(m(r, c) - std::conj(m(c, r)));
  return std::sqrt(s);
}

double unitarity_defect(const ComplexMatrix& m) {
  return frobenius_diff(m.adjoint() * m, ComplexMatrix::identity(m.dim()));
}

std::vector<cd> column(const ComplexMatrix& m, int c) {
  std::vector<cd> v(static_cast<std::size_t>(m.dim()));
  for (int r = 0; r < m.dim(); ++r) v[static_cast<std::size_t>(r)] = m(r, c);
  return v;
}

std::vector<cd> matvec(const ComplexMatrix& m, const std::vector<cd>& v) {
  std::vector<cd> out(static_cast<std::size_t>(m.dim()));
  for (int r = 0; r < m.dim(); ++r) {
    cd s = 0.0;
    for (int c = 0; c < m.dim(); ++c) s += m(r, c) * v[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

ComplexMatrix outer_projector(const std::vector<cd>& v) {
  const int n = static_cast<int>(v.size());
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = v[static_cast<std::size_t>(r)] * std::conj(v[static_cast<std::size_t>(c)]);
  return m;
}

cd determinant(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix a = m;
  cd det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > best) {
        best = std::abs(a(r, k));
        piv = r;
      }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      det = -det;
    }
    det *= a(k, k);
    for (int r = k + 1; r < n; ++r) {
      const cd f = a(r, k) / a(k, k);
      for (int c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

namespace {

// One complex Jacobi rotation annihilating A(p,q); A stays Hermitian,
// V accumulates the similarity.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const cd apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const cd phase = apq / r;  // a(p,q) = r * phase
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const int n = a.dim();

  // Columns: right-multiply by G with G(p,p)=c, G(p,q)=-s,
  // G(q,p)=s*conj(phase), G(q,q)=c*conj(phase).
  for (int k = 0; k < n; ++k) {
    const cd akp = a(k, p);
    const cd akq = a(k, q);
    a(k, p) = c * akp + s * std::conj(phase) * akq;
    a(k, q) = -s * akp + c * std::conj(phase) * akq;
  }
  // Rows: left-multiply by G^dagger.
  for (int k = 0; k < n; ++k) {
    const cd apk = a(p, k);
    const cd aqk = a(q, k);
    a(p, k) = c * apk + s * phase * aqk;
    a(q, k) = -s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = cd(a(p, p).real(), 0.0);
  a(q, q) = cd(a(q, q).real(), 0.0);

  for (int k = 0; k < n; ++k) {
    const cd vkp = v(k, p);
    const cd vkq = v(k, q);
    v(k, p) = c * vkp + s * std::conj(phase) * vkq;
    v(k, q) = -s * vkp + c * std::conj(phase) * vkq;
  }
}

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Largest-magnitude component real positive; ties go to the lowest row.
void fix_column_phases(ComplexMatrix& v) {
  const int n = v.dim();
  for (int c = 0; c < n; ++c) {
    int best = 0;
    double mag = std::abs(v(0, c));
    for (int r = 1; r < n; ++r)
      if (std::abs(v(r, c)) > mag) {
        mag = std::abs(v(r, c));
        best = r;
      }
    if (mag == 0.0) continue;
    const cd phase = v(best, c) / mag;
    const cd f = std::conj(phase);
    for (int r = 0; r < n; ++r) v(r, c) *= f;
    v(best, c) = cd(v(best, c).real(), 0.0);
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol) {
  const int n = m.dim();
  const double defect = hermitian_defect(m);
  if (defect > tol) throw NotHermitian(defect);

  ComplexMatrix a(n);
  for (int r = 0; r < n; ++r) {
    a(r, r) = cd(m(r, r).real(), 0.0);
    for (int c = r + 1; c < n; ++c) {
      const cd x = 0.5 * (m(r, c) + std::conj(m(c, r)));
      a(r, c) = x;
      a(c, r) = std::conj(x);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = 1e-15 * (1.0 + a.frobenius_norm());
  constexpr int kMaxSweeps = 60;
  int sweep = 0;
  while (offdiag_norm(a) > stop) {
    if (++sweep > kMaxSweeps) throw NoConvergence(kMaxSweeps);
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigenDecomposition out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = ComplexMatrix(n);
  for (int c = 0; c < n; ++c) {
    const int src = order[static_cast<std::size_t>(c)];
    out.values[static_cast<std::size_t>(c)] = a(src, src).real();
    for (int r = 0; r < n; ++r) out.vectors(r, c) = v(r, src);
  }
  fix_column_phases(out.vectors);
  return out;
}

ComplexMatrix expm_i_hermitian(const ComplexMatrix& h, double s, double tol) {
  const EigenDecomposition eig = hermitian_eig(h, tol);
  const int n = h.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cd sum = 0.0;
      for (int k = 0; k < n; ++k) {
        const cd phase = std::exp(cd(0.0, -s * eig.values[static_cast<std::size_t>(k)]));
        sum += eig.vectors(r, k) * phase * std::conj(eig.vectors(c, k));
      }
      out(r, c) = sum;
    }
  return out;
}

GaussFactors gauss_unit_lower(const ComplexMatrix& m, double tol) {
  const int n = m.dim();
  ComplexMatrix lower = ComplexMatrix::identity(n);
  ComplexMatrix upper = m;
  cd minor = 1.0;
  for (int k = 0; k < n; ++k) {
    minor *= upper(k, k);
    if (std::abs(minor) <= tol) throw SingularMinor(k + 1, std::abs(minor));
    for (int r = k + 1; r < n; ++r) {
      const cd f = upper(r, k) / upper(k, k);
      lower(r, k) = f;
      upper(r, k) = 0.0;
      for (int c = k + 1; c < n; ++c) upper(r, c) -= f * upper(k, c);
    }
  }
  return {lower, upper};
}

namespace {

// Solve A X = B by LU with partial pivoting. A is destroyed.
ComplexMatrix solve_general(ComplexMatrix a, ComplexMatrix b, double pivot_tol) {
  const int n = a.dim();
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > best) {
        best = std::abs(a(r, k));
        piv = r;
      }
    if (best <= pivot_tol) throw StepTooLarge(0);
    if (piv != k)
      for (int c = 0; c < n; ++c) {
        std::swap(a(k, c), a(piv, c));
        std::swap(b(k, c), b(piv, c));
      }
    for (int r = k + 1; r < n; ++r) {
      const cd f = a(r, k) / a(k, k);
      for (int c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      for (int c = 0; c < n; ++c) b(r, c) -= f * b(k, c);
    }
  }
  ComplexMatrix x(n);
  for (int c = 0; c < n; ++c)
    for (int r = n - 1; r >= 0; --r) {
      cd s = b(r, c);
      for (int k = r + 1; k < n; ++k) s -= a(r, k) * x(k, c);
      x(r, c) = s / a(r, r);
    }
  return x;
}

}  // namespace

ComplexMatrix unitary_log(const ComplexMatrix& w, double phase_tol) {
  const int n = w.dim();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  // A = i (I - W)(I + W)^{-1}; both factors commute, so solve on the left.
  ComplexMatrix a = solve_general(eye + w, cd(0.0, 1.0) * (eye - w), 1e-14);
  // Hermitian up to round-off; symmetrize before diagonalizing.
  ComplexMatrix h(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) h(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
  const EigenDecomposition eig = hermitian_eig(h);

  ComplexMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::atan(eig.values[static_cast<std::size_t>(k)]);
    if (std::abs(theta) >= M_PI - phase_tol) throw StepTooLarge(0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out(r, c) += eig.vectors(r, k) * cd(0.0, theta) * std::conj(eig.vectors(c, k));
  }
  return out;
}

}  // namespace hamrec
