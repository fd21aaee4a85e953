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

#include "hamrec/orbit.hpp"

#include <cmath>

#include "json_detail.hpp"

namespace hamrec {

ComplexMatrix weyl_gamma(int n, int k) {
  ComplexMatrix m(n);
  for (int j = 0; j < k; ++j) m(j, j) = 1.0;
  const cd shift = cd(static_cast<double>(k) / n, 0.0);
  for (int j = 0; j < n; ++j) m(j, j) -= shift;
  return m;
}

ComplexMatrix weyl_pi(int n, int k) {
  ComplexMatrix m(n);
  m(k - 1, k - 1) = 1.0;
  const cd shift = cd(1.0 / n, 0.0);
  for (int j = 0; j < n; ++j) m(j, j) -= shift;
  return m;
}

WeylBasis make_weyl_basis(int n) {
  WeylBasis basis;
  for (int k = 1; k < n; ++k) {
    basis.gammas.push_back(weyl_gamma(n, k));
    basis.pis.push_back(weyl_pi(n, k));
  }
  return basis;
}

namespace {

double offdiagonal_frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

}  // namespace

OrbitDescriptor classify(const DensityMatrix& rho, double cluster_tol) {
  OrbitDescriptor d;
  d.n = rho.dim();
  d.canonical_spectrum = hermitian_eig(rho.matrix, 1e-6).values;

  // Single-linkage: a new cluster starts where the gap exceeds the
  // threshold.
  d.multiplicities.push_back(1);
  for (int i = 1; i < d.n; ++i) {
    const double gap = d.canonical_spectrum[static_cast<std::size_t>(i - 1)] -
                       d.canonical_spectrum[static_cast<std::size_t>(i)];
    if (gap <= cluster_tol)
      ++d.multiplicities.back();
    else
      d.multiplicities.push_back(1);
  }

  int sq = 0;
  for (int m : d.multiplicities) sq += m * m;
  d.dimension = d.n * d.n - sq;

  const double last = d.canonical_spectrum.back();
  int nonzero_c = 0;
  for (int k = 0; k + 1 < d.n; ++k) {
    const double c = d.canonical_spectrum[static_cast<std::size_t>(k)] - last;
    d.c_coeffs.push_back(c);
    if (c > cluster_tol) ++nonzero_c;
  }
  for (int k = 0; k + 1 < d.n; ++k)
    d.b_coeffs.push_back(d.canonical_spectrum[static_cast<std::size_t>(k)] -
                         d.canonical_spectrum[static_cast<std::size_t>(k + 1)]);

  d.paper_dimension = (d.n - 1) * (nonzero_c + 1);

  d.is_pure = std::abs(d.canonical_spectrum.front() - 1.0) <= cluster_tol;
  for (std::size_t i = 1; i < d.canonical_spectrum.size() && d.is_pure; ++i)
    if (std::abs(d.canonical_spectrum[i]) > cluster_tol) d.is_pure = false;
  d.is_generic = static_cast<int>(d.multiplicities.size()) == d.n;
  return d;
}

std::vector<double> projector_coefficients(const ComplexMatrix& mu_diag,
                                           double tol) {
  const double off = offdiagonal_frobenius(mu_diag);
  if (off > tol) throw NotDiagonal(off);
  const int n = mu_diag.dim();
  std::vector<double> c;
  const double last = mu_diag(n - 1, n - 1).real();
  for (int k = 0; k + 1 < n; ++k) c.push_back(mu_diag(k, k).real() - last);
  return c;
}

std::vector<double> dual_coefficients(const ComplexMatrix& mu_diag,
                                      double tol) {
  const double off = offdiagonal_frobenius(mu_diag);
  if (off > tol) throw NotDiagonal(off);
  const int n = mu_diag.dim();
  std::vector<double> b;
  for (int k = 0; k + 1 < n; ++k) {
    const double bk = mu_diag(k, k).real() - mu_diag(k + 1, k + 1).real();
    if (bk < -tol) throw NotInChamber(k + 1, bk);
    b.push_back(bk);
  }
  return b;
}

PositivityReport positivity_feasible(const std::vector<double>& b, int n,
                                     double tol) {
  if (static_cast<int>(b.size()) != n - 1)
    throw Error("expected " + std::to_string(n - 1) + " dual coefficients");
  double weighted = 0.0;  // sum_k k b_k, 1-based k
  for (int k = 0; k < n - 1; ++k) weighted += (k + 1) * b[static_cast<std::size_t>(k)];

  PositivityReport report;
  report.feasible = true;
  // slack_j = (n sum_{k>=j} b_k - sum_k k b_k + 1) / n: the j-th diagonal
  // entry of the canonical density matrix built from b.
  double tail = 0.0;
  for (int k = 0; k < n - 1; ++k) tail += b[static_cast<std::size_t>(k)];
  for (int j = 1; j <= n; ++j) {
    const double slack = (static_cast<double>(n) * tail - weighted + 1.0) / n;
    report.slacks.push_back(slack);
    if (slack < -tol) report.feasible = false;
    if (j <= n - 1) tail -= b[static_cast<std::size_t>(j - 1)];
  }
  return report;
}

std::string descriptor_to_json(const OrbitDescriptor& d) {
  nlohmann::ordered_json j;
  j["spectrum"] = d.canonical_spectrum;
  j["multiplicities"] = d.multiplicities;
  j["c"] = d.c_coeffs;
  j["b"] = d.b_coeffs;
  j["dimension"] = d.dimension;
  j["paper_dimension"] = d.paper_dimension;
  j["pure"] = d.is_pure;
  return j.dump();
}

}  // namespace hamrec
