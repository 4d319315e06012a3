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

#include "support/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vlimits::oracle {
namespace {

std::size_t root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x];
  return x;
}

BigRational ipow(const BigRational& x, std::int64_t k) {
  BigRational out = 1;
  const BigRational base = k < 0 ? BigRational(1) / x : x;
  for (std::int64_t i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

// g with Lg = eta and g(v0) = 0, by elimination on the rows v != v0.
std::vector<Rational> potential(const Graph& g, const RatCochain0& eta) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = n - 1;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (Edge e : g.edges()) {
    const std::size_t t = g.tail(e).index, h = g.head(e).index;
    if (t > 0) a[t - 1][t - 1] = a[t - 1][t - 1] + Rational(1);
    if (h > 0) a[h - 1][h - 1] = a[h - 1][h - 1] + Rational(1);
    if (t > 0 && h > 0) {
      a[t - 1][h - 1] = a[t - 1][h - 1] - Rational(1);
      a[h - 1][t - 1] = a[h - 1][t - 1] - Rational(1);
    }
  }
  for (std::size_t i = 0; i < m; ++i) a[i][m] = eta.values()[i + 1];
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == Rational(0)) ++piv;
    std::swap(a[piv], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x = x * inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      const Rational k = a[r][col];
      for (std::size_t c = 0; c <= m; ++c) a[r][c] = a[r][c] - k * a[col][c];
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < m; ++i) out[i + 1] = a[i][m];
  return out;
}

}  // namespace

std::int64_t tree_count(const Graph& g) {
  const std::size_t ne = g.edge_count();
  const std::size_t need = g.vertex_count() - 1;
  if (ne > 20) throw std::invalid_argument("tree_count: too many edges");
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != need) continue;
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    bool forest = true;
    for (std::size_t i = 0; i < ne && forest; ++i) {
      if (!(mask & (1u << i))) continue;
      const std::size_t x = root(parent, g.tail(Edge{i}).index);
      const std::size_t y = root(parent, g.head(Edge{i}).index);
      if (x == y) forest = false;
      parent[x] = y;
    }
    if (forest) ++count;
  }
  return count;
}

IntCochain0 laplacian(const Graph& g, const IntCochain0& f) {
  IntCochain0 out(g.vertex_count());
  for (Edge e : g.edges()) {
    const Vertex t = g.tail(e), h = g.head(e);
    out[t] += f[t] - f[h];
    out[h] += f[h] - f[t];
  }
  return out;
}

std::vector<std::vector<std::int64_t>> chain_extensions(
    std::int64_t n_segments, const std::vector<std::int64_t>& charge,
    std::int64_t a, std::int64_t b) {
  const std::int64_t inner = n_segments - 1;
  // Slopes along an admissible filling change by at most one in total, so
  // every value lies within |b - a| + 2N of a; one unit of slack on top.
  const std::int64_t k = std::abs(b - a) + 2 * n_segments + 1;
  const std::int64_t lo = std::min(a, b) - k, hi = std::max(a, b) + k;

  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> g(static_cast<std::size_t>(n_segments + 1));
  g.front() = a;
  g.back() = b;
  std::function<void(std::int64_t)> fill = [&](std::int64_t i) {
    if (i > inner) {
      int ones = 0;
      for (std::int64_t j = 1; j <= inner; ++j) {
        const std::int64_t c = charge[static_cast<std::size_t>(j - 1)] +
                               g[j - 1] + g[j + 1] - 2 * g[j];
        if (c != 0 && c != 1) return;
        ones += static_cast<int>(c);
      }
      if (ones <= 1) found.emplace_back(g.begin() + 1, g.end() - 1);
      return;
    }
    for (std::int64_t x = lo; x <= hi; ++x) {
      g[static_cast<std::size_t>(i)] = x;
      // Prune on the node before, whose neighbours are now both known.
      if (i >= 2) {
        const std::int64_t c = charge[static_cast<std::size_t>(i - 2)] +
                               g[i - 2] + g[i] - 2 * g[i - 1];
        if (c != 0 && c != 1) continue;
      }
      fill(i + 1);
    }
  };
  fill(1);
  return found;
}

IntCochain0 principal_on_base(const ExtendedFunction& f) {
  const Subdivision& sub = f.subdivision();
  const Graph& g = sub.graph();
  IntCochain0 out(g.vertex_count());
  for (Edge e : g.edges()) {
    const std::int64_t n = sub.segments(e);
    const Vertex t = g.tail(e), h = g.head(e);
    // With one segment the chain neighbours are the far endpoints.
    const std::int64_t near_tail = n == 1 ? f.at(h) : f[sub.node(e, 1)];
    const std::int64_t near_head = n == 1 ? f.at(t) : f[sub.node(e, n - 1)];
    out[t] += near_tail - f.at(t);
    out[h] += near_head - f.at(h);
  }
  return out;
}

Rational q(const Graph& g, const RatCochain0& eta) {
  const std::vector<Rational> pot = potential(g, eta);
  Rational s(0);
  for (std::size_t i = 0; i < pot.size(); ++i) s = s + pot[i] * eta.values()[i];
  return s;
}

Placement voronoi(const Graph& g, const RatCochain0& mu, std::int64_t box) {
  const Rational base = q(g, mu);
  const std::size_t n = g.vertex_count();
  IntCochain0 k(n);
  for (std::size_t i = 1; i < n; ++i) k[Vertex{i}] = -box;
  bool tie = false;
  for (bool more = n > 1; more;) {
    bool zero = std::all_of(k.values().begin(), k.values().end(),
                            [](std::int64_t x) { return x == 0; });
    if (!zero) {
      const IntCochain0 lk = laplacian(g, k);
      RatCochain0 shifted = mu;
      for (Vertex v : g.vertices()) shifted[v] = shifted[v] - Rational(lk[v]);
      const Rational other = q(g, shifted);
      if (other < base) return Placement::kOutside;
      if (other == base) tie = true;
    }
    more = false;
    for (std::size_t i = n; i > 1 && !more;) {
      --i;
      if (k[Vertex{i}] < box) {
        ++k[Vertex{i}];
        more = true;
      } else {
        k[Vertex{i}] = -box;
      }
    }
  }
  return tie ? Placement::kBoundary : Placement::kInterior;
}

bool in_h1(const Graph& g, const HalfCochain1& gamma) {
  IntCochain0 boundary(g.vertex_count());
  for (Edge e : g.edges()) {
    if (!gamma[e].is_integer()) return false;
    boundary[g.head(e)] += gamma[e].floor();
    boundary[g.tail(e)] -= gamma[e].floor();
  }
  return std::all_of(boundary.values().begin(), boundary.values().end(),
                     [](std::int64_t x) { return x == 0; });
}

HalfCochain1 dslope(const Graph& g, const std::vector<std::int64_t>& lengths,
                    const std::vector<std::int64_t>& scaled_twist,
                    std::int64_t n, const IntCochain0& f) {
  auto floor_by_search = [](std::int64_t x, std::int64_t big_n) {
    std::int64_t q = 0;
    while (big_n * q > x) --q;
    while (big_n * (q + 1) <= x) ++q;
    return q;
  };
  HalfCochain1 out(g.edge_count());
  for (Edge e : g.edges()) {
    const std::int64_t big_n = n * lengths[e.index];
    const std::int64_t x = f[g.head(e)] - f[g.tail(e)] + scaled_twist[e.index];
    const std::int64_t fwd = floor_by_search(x, big_n);
    const std::int64_t back = floor_by_search(-x, big_n);
    out[e] = HalfInt::from_twice(fwd - back);
  }
  return out;
}

BigRational b_of_cycle(const Graph& g, const std::vector<BigRational>& b,
                       const IntCochain1& gamma) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  BigRational out = 1;
  std::size_t chord = 0;
  for (Edge e : g.edges()) {
    const std::size_t x = root(parent, g.tail(e).index);
    const std::size_t y = root(parent, g.head(e).index);
    if (x != y) {
      parent[x] = y;
      continue;
    }
    out *= ipow(b.at(chord), gamma[e]);
    ++chord;
  }
  return out;
}

std::vector<IntCochain1> small_cycles(const Graph& g,
                                      const std::vector<bool>& mask) {
  std::vector<Edge> support;
  for (Edge e : g.edges()) {
    if (mask[e.index]) support.push_back(e);
  }
  std::vector<IntCochain1> out;
  std::vector<std::int64_t> digits(support.size(), -1);
  for (bool more = !support.empty(); more;) {
    IntCochain1 gamma(g.edge_count());
    for (std::size_t i = 0; i < support.size(); ++i) gamma[support[i]] = digits[i];
    IntCochain0 boundary(g.vertex_count());
    bool nonzero = false;
    for (Edge e : g.edges()) {
      boundary[g.head(e)] += gamma[e];
      boundary[g.tail(e)] -= gamma[e];
      nonzero = nonzero || gamma[e] != 0;
    }
    if (nonzero && std::all_of(boundary.values().begin(), boundary.values().end(),
                               [](std::int64_t x) { return x == 0; })) {
      out.push_back(gamma);
    }
    more = false;
    for (std::size_t i = 0; i < digits.size() && !more; ++i) {
      if (digits[i] < 1) {
        ++digits[i];
        more = true;
      } else {
        digits[i] = -1;
      }
    }
  }
  return out;
}

bool cycle_equation_holds(const Graph& g, const CharacterPair& ch,
                          const OrbitPoint& p, const IntCochain1& gamma) {
  BigRational lhs = 1;
  BigRational rhs = b_of_cycle(g, ch.b, gamma);
  for (Edge e : g.edges()) {
    const std::int64_t k = gamma[e];
    if (k == 0) continue;
    if (!p.coords[e.index]) throw std::invalid_argument("edge not in the cycle support");
    const BigRational& x = p.coords[e.index]->x;
    const BigRational& y = p.coords[e.index]->y;
    rhs *= ipow(ipow(ch.a[e.index], p.cell[e].floor()), k);
    if (k > 0) {
      lhs *= ipow(x, k);
      rhs *= ipow(y, k);
    } else {
      lhs *= ipow(y, -k);
      rhs *= ipow(x, -k);
    }
  }
  return lhs == rhs;
}

}  // namespace vlimits::oracle
