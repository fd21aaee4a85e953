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

#ifndef HAMREC_RNG_HPP
#define HAMREC_RNG_HPP

#include <cstdint>
#include <random>

#include "hamrec/linalg.hpp"

namespace hamrec {

// Samplers are written out explicitly (rather than via std::*_distribution)
// so seeded streams are identical across standard library implementations.

double uniform_unit(std::mt19937_64& rng);
double gaussian(std::mt19937_64& rng);
cd complex_gaussian(std::mt19937_64& rng);

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng, double scale = 1.0);
ComplexMatrix random_complex(int n, std::mt19937_64& rng);
/// Haar-distributed unitary: Gram-Schmidt of a complex Gaussian matrix
/// with the R-diagonal phases absorbed.
ComplexMatrix random_unitary(int n, std::mt19937_64& rng);

}  // namespace hamrec

#endif  // HAMREC_RNG_HPP
