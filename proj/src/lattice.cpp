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

#include "vlimits/lattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace vlimits {
namespace {

std::size_t rows(const IntMatrix& a) { return a.size(); }
std::size_t cols(const IntMatrix& a) { return a.empty() ? 0 : a[0].size(); }

// row_i += k * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m[i].size(); ++c) {
    m[i][c] = checked_add(m[i][c], checked_mul(k, m[j][c]));
  }
}

// col_i += k * col_j
void add_col(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  for (auto& row : m) row[i] = checked_add(row[i], checked_mul(k, row[j]));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (auto& row : m) std::swap(row[i], row[j]);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (auto& x : m[i]) x = checked_mul(x, -1);
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(cols(a), IntVector(rows(a), 0));
  for (std::size_t i = 0; i < rows(a); ++i) {
    for (std::size_t j = 0; j < cols(a); ++j) t[j][i] = a[i][j];
  }
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (cols(a) != rows(b)) throw std::invalid_argument("shape mismatch");
  IntMatrix c(rows(a), IntVector(cols(b), 0));
  for (std::size_t i = 0; i < rows(a); ++i) {
    for (std::size_t k = 0; k < cols(a); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols(b); ++j) {
        c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
      }
    }
  }
  return c;
}

IntVector multiply(const IntMatrix& a, const IntVector& x) {
  if (cols(a) != x.size() && !(rows(a) == 0)) {
    throw std::invalid_argument("shape mismatch");
  }
  IntVector y(rows(a), 0);
  for (std::size_t i = 0; i < rows(a); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      y[i] = checked_add(y[i], checked_mul(a[i][j], x[j]));
    }
  }
  return y;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = rows(a);
  const std::size_t n = cols(a);
  SmithForm s{identity_matrix(m), a, identity_matrix(n), 0};
  IntMatrix& d = s.d;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d[i][j] != 0 &&
              (pi == m || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) return s;  // trailing block is zero

      std::swap(d[t], d[pi]);
      std::swap(s.u[t], s.u[pi]);
      swap_cols(d, t, pj);
      swap_cols(s.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        std::int64_t q = d[i][t] / d[t][t];
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        std::int64_t q = d[t][j] / d[t][t];
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block; if some entry
      // resists, fold its row into the pivot row and go again.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      add_row(d, t, bad, 1);
      add_row(s.u, t, bad, 1);
    }
    if (d[t][t] < 0) {
      negate_row(d, t);
      negate_row(s.u, t);
    }
    ++s.rank;
  }
  return s;
}

IntVector invariant_factors(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  IntVector out;
  for (std::size_t i = 0; i < s.rank; ++i) out.push_back(s.diagonal(i));
  return out;
}

std::int64_t bareiss_determinant(IntMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("not square");
  }
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(a[i][j]) * a[k][k] -
                     static_cast<__int128>(a[i][k]) * a[k][j];
        v /= prev;  // exact by Sylvester's identity
        if (v > INT64_MAX || v < INT64_MIN) {
          throw ArithmeticOverflow("bareiss overflow");
        }
        a[i][j] = static_cast<std::int64_t>(v);
      }
    }
    prev = a[k][k];
  }
  return checked_mul(sign, a[n - 1][n - 1]);
}

std::optional<IntVector> solve_integer(const IntMatrix& a,
                                       const IntVector& b) {
  if (rows(a) != b.size()) throw std::invalid_argument("shape mismatch");
  const std::size_t n = cols(a);
  SmithForm s = smith_normal_form(a);
  // A = U^-1 D V^-1, so A x = b  <=>  D y = U b with x = V y.
  IntVector ub = multiply(s.u, b);
  IntVector y(n, 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.diagonal(i) != 0) return std::nullopt;
      y[i] = ub[i] / s.diagonal(i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return multiply(s.v, y);
}

std::size_t rank_over_q(RatMatrix a) {
  std::size_t rank = 0;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t p = rank;
    while (p < m && a[p][c] == Rational(0)) ++p;
    if (p == m) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (a[i][c] == Rational(0)) continue;
      Rational factor = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_over_q(const IntMatrix& a) {
  RatMatrix r(rows(a), RatVector(cols(a)));
  for (std::size_t i = 0; i < rows(a); ++i) {
    for (std::size_t j = 0; j < cols(a); ++j) r[i][j] = a[i][j];
  }
  return rank_over_q(std::move(r));
}

RatVector solve_rational(RatMatrix a, RatVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == Rational(0)) ++p;
    if (p == n) throw std::domain_error("singular system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == Rational(0)) continue;
      Rational factor = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= factor * a[c][j];
      b[i] -= factor * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

RatMatrix inverse(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, RatVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == Rational(0)) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational pivot = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= pivot;
      inv[c][j] /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == Rational(0)) continue;
      Rational factor = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= factor * a[c][j];
        inv[i][j] -= factor * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace vlimits
