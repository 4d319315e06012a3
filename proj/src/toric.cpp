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

#include "vlimits/toric.hpp"

#include <map>
#include <utility>

#include "vlimits/errors.hpp"
#include "vlimits/union_find.hpp"

namespace vlimits {

std::size_t cell_dimension(const CellIndex& alpha) {
  std::size_t dim = 0;
  for (const HalfInt& x : alpha.values()) dim += x.is_integer() ? 1 : 0;
  return dim;
}

bool cell_contains(const CellIndex& alpha, const CellIndex& beta) {
  if (alpha.size() != beta.size()) {
    throw std::invalid_argument("cells of different graphs");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const HalfInt& a = alpha.values()[i];
    const HalfInt& b = beta.values()[i];
    const std::int64_t gap = b.twice() - a.twice();
    if (gap > 1 || gap < -1) return false;
    if (b.is_integer() && gap != 0) return false;
  }
  return true;
}

std::string cell_string(const CellIndex& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0) s += ',';
    s += alpha.values()[i].to_string();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

CharacterPair CharacterPair::trivial(const Graph& g) {
  return CharacterPair{std::vector<BigRational>(g.edge_count(), 1),
                       std::vector<BigRational>(g.genus(), 1)};
}

void CharacterPair::validate(const Graph& g) const {
  if (a.size() != g.edge_count()) {
    throw DomainError("character a needs " + std::to_string(g.edge_count()) +
                      " values, got " + std::to_string(a.size()));
  }
  if (b.size() != g.genus()) {
    throw DomainError("character b needs " + std::to_string(g.genus()) +
                      " values, got " + std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      throw DomainError("character a is zero on edge '" +
                        g.edge_id(Edge{i}) + "'");
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) {
      throw DomainError("character b is zero on cycle " + std::to_string(i));
    }
  }
}

BigRational evaluate_on_edges(const std::vector<BigRational>& values,
                              const IntCochain1& gamma) {
  BigRational out = 1;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma.values()[i] != 0) out *= power(values[i], gamma.values()[i]);
  }
  return out;
}

BigRational evaluate_b(const CycleBasis& basis,
                       const std::vector<BigRational>& b,
                       const IntCochain1& gamma) {
  auto coords = basis.coordinates(gamma);
  if (!coords) throw DomainError("not an integer cycle");
  BigRational out = 1;
  for (std::size_t i = 0; i < coords->size(); ++i) {
    if ((*coords)[i] != 0) out *= power(b[i], (*coords)[i]);
  }
  return out;
}

std::vector<BigRational> b_edge_values(const Graph& g, const CharacterPair& ch,
                                       const CycleBasis& gauge) {
  const CycleBasis reference = cycle_basis(g);
  std::vector<BigRational> values(g.edge_count(), 1);
  for (std::size_t i = 0; i < gauge.size(); ++i) {
    values[gauge.chords[i].index] = evaluate_b(reference, ch.b, gauge.cycles[i]);
  }
  return values;
}

std::vector<BigRational> b_edge_values(const Graph& g,
                                       const CharacterPair& ch) {
  return b_edge_values(g, ch, cycle_basis(g));
}

// ---------------------------------------------------------------------------
// Orbit points
// ---------------------------------------------------------------------------

ProjectivePoint ProjectivePoint::normalized(BigRational x, BigRational y) {
  if (y != 0) return ProjectivePoint{x / y, 1};
  if (x == 0) throw DomainError("(0 : 0) is not a projective point");
  return ProjectivePoint{1, 0};
}

OrbitPoint orbit_point_of_cell(const std::vector<BigRational>& a,
                               const std::vector<BigRational>& b_edges,
                               const CellIndex& alpha) {
  OrbitPoint p{alpha, std::vector<std::optional<ProjectivePoint>>(alpha.size())};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const HalfInt& x = alpha.values()[i];
    if (!x.is_integer()) continue;
    p.coords[i] = ProjectivePoint{b_edges[i] * power(a[i], x.floor()), 1};
  }
  return p;
}

OrbitPoint orbit_point(const SlopeContext& ctx, const CharacterPair& ch,
                       const IntCochain0& f) {
  ch.validate(ctx.graph());
  return orbit_point_of_cell(ch.a, b_edge_values(ctx.graph(), ch),
                             dslope(ctx, f));
}

std::vector<IntCochain1> cycles_in_integral_subgraph(const Graph& g,
                                                     const CellIndex& alpha,
                                                     std::int64_t bound) {
  const std::vector<bool> mask = integral_mask(alpha);
  std::vector<Edge> parent;
  for (Edge e : g.edges()) {
    if (mask[e.index]) parent.push_back(e);
  }
  const CycleBasis sub = cycle_basis(g.spanning_subgraph(mask));

  std::vector<IntCochain1> generators;
  for (const IntCochain1& c : sub.cycles) {
    IntCochain1 lifted(g.edge_count());
    for (std::size_t i = 0; i < c.size(); ++i) {
      lifted[parent[i]] = c.values()[i];
    }
    generators.push_back(std::move(lifted));
  }

  std::vector<IntCochain1> out;
  const std::size_t k = generators.size();
  if (k == 0) return out;
  std::vector<std::int64_t> coef(k, -bound);
  for (bool more = true; more;) {
    IntCochain1 gamma(g.edge_count());
    bool zero = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (coef[i] == 0) continue;
      zero = false;
      gamma += coef[i] * generators[i];
    }
    if (!zero) out.push_back(std::move(gamma));
    more = false;
    for (std::size_t i = k; i > 0 && !more;) {
      --i;
      if (coef[i] < bound) {
        ++coef[i];
        more = true;
      } else {
        coef[i] = -bound;
      }
    }
  }
  return out;
}

bool check_cycle_equations(const Graph& g, const CharacterPair& ch,
                           const OrbitPoint& point, std::int64_t bound) {
  ch.validate(g);
  const CycleBasis reference = cycle_basis(g);
  for (const IntCochain1& gamma :
       cycles_in_integral_subgraph(g, point.cell, bound)) {
    BigRational lhs = 1;
    BigRational rhs = evaluate_b(reference, ch.b, gamma);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const std::int64_t k = gamma.values()[i];
      if (k == 0) continue;
      const auto& xy = point.coords[i];
      if (!xy) throw DomainError("orbit point lacks a coordinate on a cycle");
      const std::int64_t alpha = point.cell.values()[i].floor();
      rhs *= power(power(ch.a[i], alpha), k);
      if (k > 0) {
        lhs *= power(xy->x, k);
        rhs *= power(xy->y, k);
      } else {
        lhs *= power(xy->y, -k);
        rhs *= power(xy->x, -k);
      }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_cycle_equations(const SlopeContext& ctx, const CharacterPair& ch,
                           const IntCochain0& f, const OrbitPoint& point,
                           std::int64_t bound) {
  if (!(point.cell == dslope(ctx, f))) return false;
  return check_cycle_equations(ctx.graph(), ch, point, bound);
}

OrbitPoint torus_act(const Graph& g, const std::vector<BigRational>& z,
                     const OrbitPoint& point) {
  if (z.size() != g.vertex_count()) throw std::invalid_argument("torus size");
  for (const BigRational& x : z) {
    if (x == 0) throw DomainError("torus element has a zero entry");
  }
  OrbitPoint out = point;
  for (Edge e : g.edges()) {
    auto& xy = out.coords[e.index];
    if (!xy) continue;
    xy = ProjectivePoint::normalized(z[g.head(e).index] * xy->x,
                                     z[g.tail(e).index] * xy->y);
  }
  return out;
}

std::size_t stabilizer_dimension(const Graph& g, const OrbitPoint& point) {
  IntMatrix constraints;
  for (Edge e : g.edges()) {
    const auto& xy = point.coords[e.index];
    if (!xy || xy->x == 0 || xy->y == 0) continue;
    IntVector row(g.vertex_count(), 0);
    row[g.head(e).index] += 1;
    row[g.tail(e).index] -= 1;
    constraints.push_back(std::move(row));
  }
  return g.vertex_count() - rank_over_q(constraints);
}

std::size_t orbit_dimension(const Graph& g, const OrbitPoint& point) {
  return g.vertex_count() - stabilizer_dimension(g, point);
}

// ---------------------------------------------------------------------------
// H^1 translations
// ---------------------------------------------------------------------------

CellIndex translate_cell(const Graph& g, const CellIndex& alpha,
                         const IntCochain1& gamma) {
  for (std::int64_t x : d_star(g, gamma).values()) {
    if (x != 0) throw DomainError("translation is not a cycle");
  }
  CellIndex out = alpha;
  for (Edge e : g.edges()) out[e] += HalfInt(gamma[e]);
  return out;
}

std::vector<std::size_t> dedup_mod_h1(const Graph& g,
                                      const std::vector<CellIndex>& cells) {
  // A difference in H^1 forces equal d* and equal parity pattern, so only
  // cells sharing both are compared; the cycle-basis solve decides.
  using Key = std::pair<std::vector<std::int64_t>, std::vector<bool>>;
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Key key;
    for (const HalfInt& x : d_star(g, cells[i]).values()) {
      key.first.push_back(x.twice());
    }
    key.second = integral_mask(cells[i]);
    groups[key].push_back(i);
  }

  const CycleBasis basis = cycle_basis(g);
  UnionFind uf(cells.size());
  for (const auto& [key, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (in_h1(g, basis, cells[members[j]] - cells[members[i]])) {
          uf.unite(members[i], members[j]);
        }
      }
    }
  }

  std::map<std::size_t, std::size_t> ids;
  std::vector<std::size_t> out(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out[i] = ids.try_emplace(uf.find(i), ids.size()).first->second;
  }
  return out;
}

std::vector<std::optional<BigRational>> twister_gluing(
    const SlopeContext& ctx, const std::vector<BigRational>& a,
    const IntCochain0& f) {
  const Graph& g = ctx.graph();
  for (Edge e : g.edges()) {
    if (ctx.twist()[e] != Rational(0)) {
      throw DomainError("twister gluing needs zero twist");
    }
  }
  std::vector<std::optional<BigRational>> out(g.edge_count());
  for (Edge e : g.edges()) {
    const std::int64_t diff = checked_sub(f[g.head(e)], f[g.tail(e)]);
    const std::int64_t n = ctx.segments(e);
    if (diff % n == 0) out[e.index] = power(a[e.index], diff / n);
  }
  return out;
}

}  // namespace vlimits
