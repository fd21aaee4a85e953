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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hamrec/linalg.hpp"
#include "hamrec/rng.hpp"
#include "support/test_util.hpp"

using namespace hamrec;
using testutil::from_rows;

TEST_CASE("hermitian_eig on a diagonal matrix keeps it") {
  const auto m = ComplexMatrix::diagonal(std::vector<double>{0.75, 0.25});
  const auto eig = hermitian_eig(m);
  CHECK(eig.values[0] == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(eig.values[1] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(max_abs_diff(eig.vectors, ComplexMatrix::identity(2)) < 1e-14);
}

TEST_CASE("hermitian_eig of pauli-x has the textbook spectrum") {
  const auto eig = hermitian_eig(testutil::pauli_x());
  CHECK(eig.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(eig.vectors(0, 0) - cd(s)) < 1e-12);
  CHECK(std::abs(eig.vectors(1, 0) - cd(s)) < 1e-12);
  CHECK(std::abs(eig.vectors(0, 1) - cd(s)) < 1e-12);
  CHECK(std::abs(eig.vectors(1, 1) - cd(-s)) < 1e-12);
}

TEST_CASE("hermitian_eig residual on seeded 4x4") {
  std::mt19937_64 rng(7);
  const ComplexMatrix m = random_hermitian(4, rng);
  const auto eig = hermitian_eig(m);
  const ComplexMatrix lambda = ComplexMatrix::diagonal(eig.values);
  CHECK(frobenius_diff(m * eig.vectors, eig.vectors * lambda) < 1e-12);
  CHECK(unitarity_defect(eig.vectors) < 1e-13);
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = 2 + static_cast<int>(seed % 7);
    const ComplexMatrix m = random_hermitian(n, rng);
    const auto eig = hermitian_eig(m);
    const ComplexMatrix rebuilt =
        eig.vectors * ComplexMatrix::diagonal(eig.values) * eig.vectors.adjoint();
    CHECK(frobenius_diff(rebuilt, m) <= 1e-11 * (1.0 + m.frobenius_norm()));
  }
}

TEST_CASE("hermitian_eig is deterministic") {
  std::mt19937_64 rng(42);
  const ComplexMatrix m = random_hermitian(5, rng);
  const auto a = hermitian_eig(m);
  const auto b = hermitian_eig(m);
  CHECK(a.values == b.values);
  CHECK(max_abs_diff(a.vectors, b.vectors) == 0.0);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  auto m = testutil::pauli_x();
  m(0, 1) += cd(0.0, 0.5);
  CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("expm_i_hermitian basics") {
  CHECK(max_abs_diff(expm_i_hermitian(ComplexMatrix(3), 1.7),
                     ComplexMatrix::identity(3)) < 1e-15);

  const auto diag = ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0});
  const auto rotated = expm_i_hermitian(diag, M_PI);
  CHECK(max_abs_diff(rotated, ComplexMatrix::diagonal(std::vector<double>{-1.0, -1.0})) <
        1e-12);
}

TEST_CASE("expm_i_hermitian of the qubit generator is a rotation") {
  // H = i g [[0,1],[-1,0]] exponentiates to the plane rotation by g t.
  const auto h = from_rows({{0.0, cd(0.0, 1.0)}, {cd(0.0, -1.0), 0.0}});
  for (double t : {0.3, 1.1, 2.9}) {
    const auto u = expm_i_hermitian(h, t);
    CHECK(max_abs_diff(u, testutil::rotation2(t)) < 1e-13);
    CHECK(unitarity_defect(u) < 1e-12);
  }
}

TEST_CASE("expm inverse property") {
  std::mt19937_64 rng(3);
  const ComplexMatrix h = random_hermitian(4, rng);
  const auto forward = expm_i_hermitian(h, 0.8);
  const auto backward = expm_i_hermitian(h, -0.8);
  CHECK(frobenius_diff(forward * backward, ComplexMatrix::identity(4)) < 1e-12);
}

TEST_CASE("gauss_unit_lower identity and lower-triangular fixed points") {
  const auto id = ComplexMatrix::identity(3);
  const auto f = gauss_unit_lower(id);
  CHECK(max_abs_diff(f.lower, id) == 0.0);
  CHECK(max_abs_diff(f.upper, id) == 0.0);

  const auto z = from_rows({{1.0, 0.0}, {cd(2.0, 1.0), 1.0}});
  const auto fz = gauss_unit_lower(z);
  CHECK(max_abs_diff(fz.lower, z) < 1e-15);
  CHECK(max_abs_diff(fz.upper, ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("gauss_unit_lower of a rotation matches the closed form") {
  const double t = 0.3;
  const auto f = gauss_unit_lower(testutil::rotation2(t));
  CHECK(std::abs(f.lower(1, 0) - cd(-std::tan(t))) < 1e-14);
  CHECK(std::abs(f.upper(0, 0) - cd(std::cos(t))) < 1e-14);
  CHECK(std::abs(f.upper(0, 1) - cd(std::sin(t))) < 1e-14);
  CHECK(std::abs(f.upper(1, 1) - cd(1.0 / std::cos(t))) < 1e-14);
}

TEST_CASE("gauss_unit_lower round trip on seeded matrices") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = 2 + static_cast<int>(seed % 5);
    const ComplexMatrix m = random_complex(n, rng);
    GaussFactors f;
    try {
      f = gauss_unit_lower(m);
    } catch (const SingularMinor&) {
      continue;  // fine for random input, just not this seed
    }
    CHECK(frobenius_diff(f.lower * f.upper, m) <= 1e-12 * m.frobenius_norm());
    for (int r = 0; r < n; ++r) {
      CHECK(f.lower(r, r) == cd(1.0));
      for (int c = r + 1; c < n; ++c) CHECK(f.lower(r, c) == cd(0.0));
      for (int c = 0; c < r; ++c) CHECK(f.upper(r, c) == cd(0.0));
    }
  }
}

TEST_CASE("gauss_unit_lower reports the singular minor") {
  const auto m = from_rows({{0.0, 1.0}, {1.0, 0.0}});
  CHECK_THROWS_AS(gauss_unit_lower(m), SingularMinor);
  try {
    gauss_unit_lower(m);
  } catch (const SingularMinor& e) {
    CHECK(e.k == 1);
  }
}

TEST_CASE("unitarity_defect values") {
  CHECK(unitarity_defect(ComplexMatrix::identity(4)) == 0.0);
  auto twice = ComplexMatrix::identity(2);
  twice *= 2.0;
  CHECK(unitarity_defect(twice) == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("unitary_log recovers the generator of a rotation") {
  const double t = 0.7;
  const auto log = unitary_log(testutil::rotation2(t));
  const auto expected = from_rows({{0.0, t}, {-t, 0.0}});
  CHECK(max_abs_diff(log, expected) < 1e-13);
}

TEST_CASE("unitary_log round trips against expm on seeded Hermitian generators") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = 2 + static_cast<int>(seed % 4);
    ComplexMatrix h = random_hermitian(n, rng);
    h *= cd(0.4 / h.frobenius_norm(), 0.0);
    const ComplexMatrix w = expm_i_hermitian(h, 1.0);
    const ComplexMatrix log = unitary_log(w);
    // log = -i h up to round-off
    CHECK(max_abs_diff(log, cd(0.0, -1.0) * h) < 1e-12);
  }
}

TEST_CASE("unitary_log rejects eigenphases at pi") {
  const auto w = ComplexMatrix::diagonal(std::vector<double>{-1.0, 1.0});
  CHECK_THROWS_AS(unitary_log(w), StepTooLarge);
}

TEST_CASE("determinant of known matrices") {
  CHECK(std::abs(determinant(ComplexMatrix::identity(3)) - cd(1.0)) < 1e-15);
  CHECK(std::abs(determinant(testutil::rotation2(0.9)) - cd(1.0)) < 1e-14);
  const auto swap = from_rows({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(std::abs(determinant(swap) - cd(-1.0)) < 1e-15);
}

TEST_CASE("random_unitary is Haar-ish unitary") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3, 5}) {
    const ComplexMatrix u = random_unitary(n, rng);
    CHECK(unitarity_defect(u) < 1e-12);
  }
}
