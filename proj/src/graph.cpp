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

#include "vlimits/graph.hpp"

#include <numeric>
#include <queue>
#include <utility>

#include "vlimits/union_find.hpp"

namespace vlimits {

Graph::Graph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges)
    : vertex_ids_(std::move(vertex_ids)) {
  for (std::size_t i = 0; i < vertex_ids_.size(); ++i) {
    if (vertex_ids_[i].empty()) throw GraphError("empty vertex id");
    if (!vertex_lookup_.emplace(vertex_ids_[i], i).second) {
      throw GraphError("duplicate vertex id '" + vertex_ids_[i] + "'");
    }
  }
  out_arcs_.resize(vertex_ids_.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& spec = edges[i];
    if (spec.id.empty()) throw GraphError("empty edge id");
    if (!edge_lookup_.emplace(spec.id, i).second) {
      throw GraphError("duplicate edge id '" + spec.id + "'");
    }
    auto t = find_vertex(spec.tail);
    auto h = find_vertex(spec.head);
    if (!t) {
      throw GraphError("edge '" + spec.id + "': unknown tail '" + spec.tail +
                       "'");
    }
    if (!h) {
      throw GraphError("edge '" + spec.id + "': unknown head '" + spec.head +
                       "'");
    }
    if (*t == *h) {
      throw GraphError("edge '" + spec.id + "' is a loop at '" + spec.tail +
                       "'; loops are not supported");
    }
    edge_ids_.push_back(spec.id);
    tails_.push_back(*t);
    heads_.push_back(*h);
    out_arcs_[t->index].push_back(Arc{Edge{i}, false});
    out_arcs_[h->index].push_back(Arc{Edge{i}, true});
  }
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out(vertex_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Vertex{i};
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out(edge_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Edge{i};
  return out;
}

std::optional<Vertex> Graph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return Vertex{it->second};
}

std::optional<Edge> Graph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return Edge{it->second};
}

std::size_t Graph::component_count() const {
  UnionFind uf(vertex_count());
  for (Edge e : edges()) uf.unite(tail(e).index, head(e).index);
  return uf.set_count();
}

void Graph::require_connected() const {
  if (vertex_count() == 0) throw GraphError("graph has no vertices");
  if (!is_connected()) throw GraphError("graph is not connected");
}

std::size_t Graph::genus() const {
  return edge_count() + component_count() - vertex_count();
}

Graph Graph::spanning_subgraph(const std::vector<bool>& keep) const {
  if (keep.size() != edge_count()) {
    throw std::invalid_argument("spanning_subgraph: mask size");
  }
  std::vector<EdgeSpec> kept;
  for (Edge e : edges()) {
    if (keep[e.index]) {
      kept.push_back({edge_id(e), vertex_id(tail(e)), vertex_id(head(e))});
    }
  }
  return Graph(vertex_ids_, std::move(kept));
}

RatCochain0 to_rational(const IntCochain0& f) {
  std::vector<Rational> v(f.values().begin(), f.values().end());
  return RatCochain0(std::move(v));
}

RatCochain1 to_rational(const IntCochain1& h) {
  std::vector<Rational> v(h.values().begin(), h.values().end());
  return RatCochain1(std::move(v));
}

RatCochain1 to_rational(const HalfCochain1& h) {
  std::vector<Rational> v;
  v.reserve(h.size());
  for (const HalfInt& x : h.values()) v.push_back(x.to_rational());
  return RatCochain1(std::move(v));
}

std::optional<IntCochain1> to_integer(const HalfCochain1& h) {
  std::vector<std::int64_t> v;
  v.reserve(h.size());
  for (const HalfInt& x : h.values()) {
    if (!x.is_integer()) return std::nullopt;
    v.push_back(x.twice() / 2);
  }
  return IntCochain1(std::move(v));
}

// ---------------------------------------------------------------------------
// Laplacian and lattice data
// ---------------------------------------------------------------------------

IntMatrix laplacian_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix l(n, IntVector(n, 0));
  for (Edge e : g.edges()) {
    std::size_t t = g.tail(e).index;
    std::size_t h = g.head(e).index;
    ++l[t][t];
    ++l[h][h];
    --l[t][h];
    --l[h][t];
  }
  return l;
}

namespace {

// Drop the row and column of the first vertex.
IntMatrix reduced(const IntMatrix& l) {
  IntMatrix r;
  for (std::size_t i = 1; i < l.size(); ++i) {
    r.emplace_back(l[i].begin() + 1, l[i].end());
  }
  return r;
}

// Coordinates of the degree-zero cochains in the basis chi_v - chi_v0,
// v != v0, are just the entries at v != v0: drop the first row.
IntMatrix drop_first_row(const IntMatrix& m) {
  return IntMatrix(m.begin() + 1, m.end());
}

std::int64_t index_from_factors(const IntMatrix& generators,
                                std::size_t full_rank) {
  SmithForm s = smith_normal_form(generators);
  if (s.rank != full_rank) return 0;  // infinite index
  std::int64_t index = 1;
  for (std::size_t i = 0; i < s.rank; ++i) {
    index = checked_mul(index, s.diagonal(i));
  }
  return index;
}

}  // namespace

std::int64_t spanning_tree_count(const Graph& g) {
  g.require_connected();
  return bareiss_determinant(reduced(laplacian_matrix(g)));
}

std::int64_t lattice_index(const Graph& g) {
  g.require_connected();
  // Columns are the images of chi_w for every vertex w.
  return index_from_factors(drop_first_row(laplacian_matrix(g)),
                            g.vertex_count() - 1);
}

std::int64_t dstar_image_index(const Graph& g) {
  g.require_connected();
  IntMatrix incidence(g.vertex_count(), IntVector(g.edge_count(), 0));
  for (Edge e : g.edges()) {
    incidence[g.head(e).index][e.index] += 1;
    incidence[g.tail(e).index][e.index] -= 1;
  }
  return index_from_factors(drop_first_row(incidence), g.vertex_count() - 1);
}

IntVector jacobian_invariant_factors(const Graph& g) {
  g.require_connected();
  IntVector out;
  for (std::int64_t x : invariant_factors(reduced(laplacian_matrix(g)))) {
    if (x > 1) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cycle space
// ---------------------------------------------------------------------------

CycleBasis cycle_basis(const Graph& g) { return cycle_basis(g, g.edges()); }

CycleBasis cycle_basis(const Graph& g, const std::vector<Edge>& edge_order) {
  if (edge_order.size() != g.edge_count()) {
    throw std::invalid_argument("cycle_basis: edge order must list every edge");
  }
  CycleBasis basis;
  basis.in_tree.assign(g.edge_count(), false);
  UnionFind uf(g.vertex_count());
  for (Edge e : edge_order) {
    if (uf.unite(g.tail(e).index, g.head(e).index)) basis.in_tree[e.index] = true;
  }

  // Tree adjacency for path recovery.
  std::vector<std::vector<Arc>> tree_arcs(g.vertex_count());
  for (Vertex v : g.vertices()) {
    for (Arc a : g.arcs_from(v)) {
      if (basis.in_tree[a.edge.index]) tree_arcs[v.index].push_back(a);
    }
  }

  for (Edge e : g.edges()) {
    if (basis.in_tree[e.index]) continue;
    // Walk from head(e) back to tail(e) inside the tree.
    const std::size_t start = g.head(e).index;
    const std::size_t goal = g.tail(e).index;
    std::vector<std::optional<Arc>> via(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<std::size_t> q;
    q.push(start);
    seen[start] = true;
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      if (x == goal) break;
      for (Arc a : tree_arcs[x]) {
        std::size_t y = g.head(a).index;
        if (seen[y]) continue;
        seen[y] = true;
        via[y] = a;
        q.push(y);
      }
    }
    IntCochain1 cycle(g.edge_count());
    cycle[e] = 1;
    for (std::size_t x = goal; x != start;) {
      Arc a = *via[x];
      cycle[a.edge] += a.reversed ? -1 : 1;
      x = g.tail(a).index;
    }
    basis.cycles.push_back(std::move(cycle));
    basis.chords.push_back(e);
  }
  return basis;
}

namespace {

IntMatrix basis_matrix(const CycleBasis& basis, std::size_t edge_count) {
  IntMatrix m(edge_count, IntVector(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < edge_count; ++i) {
      m[i][j] = basis.cycles[j].values()[i];
    }
  }
  return m;
}

}  // namespace

std::optional<IntVector> CycleBasis::coordinates(
    const IntCochain1& gamma) const {
  return solve_integer(basis_matrix(*this, gamma.size()), gamma.values());
}

bool CycleBasis::is_saturated() const {
  if (cycles.empty()) return true;
  for (std::int64_t x :
       invariant_factors(basis_matrix(*this, cycles[0].size()))) {
    if (x != 1) return false;
  }
  return true;
}

bool in_h1(const Graph& g, const CycleBasis& basis,
           const HalfCochain1& gamma) {
  auto integral = to_integer(gamma);
  if (!integral) return false;
  auto coords = basis.coordinates(*integral);
  if (!coords) return false;
  // The solve is the certificate; d* = 0 is a consistency check on it.
  IntCochain0 boundary = d_star(g, *integral);
  for (std::int64_t x : boundary.values()) {
    if (x != 0) throw std::logic_error("cycle-basis solve accepted a non-cycle");
  }
  return true;
}

}  // namespace vlimits
