// Copyright 2026 The vlimits Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense exact linear algebra over Z and Q for small matrices.

#ifndef VLIMITS_LATTICE_HPP_
#define VLIMITS_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "vlimits/arith.hpp"

namespace vlimits {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& x);

// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
// all d_i >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank = 0;

  std::int64_t diagonal(std::size_t i) const { return d[i][i]; }
};

SmithForm smith_normal_form(const IntMatrix& a);

// Nonzero diagonal entries of the Smith form.
IntVector invariant_factors(const IntMatrix& a);

// Fraction-free Gaussian elimination; square input.
std::int64_t bareiss_determinant(IntMatrix a);

// Some integer x with A x = b, or nullopt when b is outside the integer
// column span of A.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

std::size_t rank_over_q(RatMatrix a);
std::size_t rank_over_q(const IntMatrix& a);

// Unique solution of the square nonsingular system A x = b.
RatVector solve_rational(RatMatrix a, RatVector b);

// Inverse of a square nonsingular matrix.
RatMatrix inverse(RatMatrix a);

}  // namespace vlimits

#endif  // VLIMITS_LATTICE_HPP_
