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

#include <gtest/gtest.h>

#include "vlimits/lattice.hpp"
#include "vlimits/verify.hpp"

namespace vlimits {
namespace {

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  IntMatrix a(rows, IntVector(cols));
  for (auto& row : a) {
    for (auto& x : row) x = rng.uniform(-4, 4);
  }
  return a;
}

TEST(Smith, ReconstructsDiagonal) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 5));
    const IntMatrix a = random_matrix(rng, rows, cols);
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(multiply(multiply(s.u, a), s.v), s.d);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (i != j) EXPECT_EQ(s.d[i][j], 0);
      }
    }
    for (std::size_t i = 0; i + 1 < s.rank; ++i) {
      EXPECT_GT(s.diagonal(i), 0);
      EXPECT_EQ(s.diagonal(i + 1) % s.diagonal(i), 0);
    }
    EXPECT_EQ(s.rank, rank_over_q(a));
    for (std::size_t i = s.rank; i < std::min(rows, cols); ++i) {
      EXPECT_EQ(s.diagonal(i), 0);
    }
  }
}

TEST(Smith, KnownInvariantFactors) {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  EXPECT_EQ(invariant_factors(a), (IntVector{2, 6, 12}));
}

TEST(Determinant, MatchesCofactorExpansion) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = random_matrix(rng, 3, 3);
    const std::int64_t cof =
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
        a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
        a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    EXPECT_EQ(bareiss_determinant(a), cof);
  }
}

TEST(SolveInteger, FindsSolutionsAndRejectsFractions) {
  const IntMatrix a{{2, 0}, {0, 3}};
  EXPECT_EQ(solve_integer(a, {4, 9}), (IntVector{2, 3}));
  EXPECT_FALSE(solve_integer(a, {1, 3}).has_value());
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix m = random_matrix(rng, 3, 4);
    const IntVector x{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3),
                      rng.uniform(-3, 3)};
    const IntVector b = multiply(m, x);
    const auto y = solve_integer(m, b);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(multiply(m, *y), b);
  }
}

TEST(Rational, InverseAndSolve) {
  RatMatrix a{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  const RatMatrix inv = inverse(a);
  EXPECT_EQ(inv[0][0], Rational(1));
  EXPECT_EQ(inv[0][1], Rational(-1));
  EXPECT_EQ(inv[1][1], Rational(2));
  const RatVector x = solve_rational(a, {Rational(3), Rational(2)});
  EXPECT_EQ(x, (RatVector{Rational(1), Rational(1)}));
}

}  // namespace
}  // namespace vlimits
