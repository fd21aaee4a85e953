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

#include "hamrec/rng.hpp"

#include <cmath>

namespace hamrec {

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
  // Box-Muller, one value per call; no cached spare.
  double u1 = uniform_unit(rng);
  while (u1 == 0.0) u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

cd complex_gaussian(std::mt19937_64& rng) {
  const double re = gaussian(rng);
  const double im = gaussian(rng);
  return cd(re, im);
}

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng, double scale) {
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r) {
    m(r, r) = scale * gaussian(rng);
    for (int c = r + 1; c < n; ++c) {
      const cd x = scale * complex_gaussian(rng) / std::sqrt(2.0);
      m(r, c) = x;
      m(c, r) = std::conj(x);
    }
  }
  return m;
}

ComplexMatrix random_complex(int n, std::mt19937_64& rng) {
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = complex_gaussian(rng);
  return m;
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
  ComplexMatrix g = random_complex(n, rng);
  // Modified Gram-Schmidt on columns; normalize so the implicit R has a
  // positive real diagonal, which makes the distribution Haar.
  for (int c = 0; c < n; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      cd proj = 0.0;
      for (int r = 0; r < n; ++r) proj += std::conj(g(r, prev)) * g(r, c);
      for (int r = 0; r < n; ++r) g(r, c) -= proj * g(r, prev);
    }
    double norm = 0.0;
    for (int r = 0; r < n; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    for (int r = 0; r < n; ++r) g(r, c) /= norm;
  }
  return g;
}

}  // namespace hamrec
