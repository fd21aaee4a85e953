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

#ifndef HAMREC_TESTS_SUPPORT_TEST_UTIL_HPP
#define HAMREC_TESTS_SUPPORT_TEST_UTIL_HPP

#include <vector>

#include "hamrec/linalg.hpp"

namespace hamrec::testutil {

inline ComplexMatrix from_rows(const std::vector<std::vector<cd>>& rows) {
  ComplexMatrix m(static_cast<int>(rows.size()));
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

inline ComplexMatrix pauli_x() {
  return from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

inline ComplexMatrix pauli_z() {
  return from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

inline ComplexMatrix rotation2(double t) {
  return from_rows({{std::cos(t), std::sin(t)}, {-std::sin(t), std::cos(t)}});
}

}  // namespace hamrec::testutil

#endif  // HAMREC_TESTS_SUPPORT_TEST_UTIL_HPP
