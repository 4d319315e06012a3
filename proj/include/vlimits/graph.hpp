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

// Oriented multigraphs, their 0- and 1-cochains, the coboundary d, its
// adjoint d*, the Laplacian, and the lattice data attached to them.

#ifndef VLIMITS_GRAPH_HPP_
#define VLIMITS_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vlimits/arith.hpp"
#include "vlimits/lattice.hpp"

namespace vlimits {

struct Vertex {
  std::size_t index = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::size_t index = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An oriented edge: the stored orientation, or its reverse.
struct Arc {
  Edge edge;
  bool reversed = false;

  Arc reverse() const { return Arc{edge, !reversed}; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
};

// Loopless multigraph with a fixed orientation per edge. Vertices and
// edges keep their input order. Connectivity is not enforced here because
// spanning subgraphs may be disconnected; see require_connected().
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return tails_.size(); }

  std::vector<Vertex> vertices() const;
  std::vector<Edge> edges() const;

  const std::string& vertex_id(Vertex v) const { return vertex_ids_[v.index]; }
  const std::string& edge_id(Edge e) const { return edge_ids_[e.index]; }
  std::optional<Vertex> find_vertex(std::string_view id) const;
  std::optional<Edge> find_edge(std::string_view id) const;

  Vertex tail(Edge e) const { return tails_[e.index]; }
  Vertex head(Edge e) const { return heads_[e.index]; }
  Vertex tail(Arc a) const { return a.reversed ? head(a.edge) : tail(a.edge); }
  Vertex head(Arc a) const { return a.reversed ? tail(a.edge) : head(a.edge); }

  // Arcs whose tail is v, one per incident edge.
  const std::vector<Arc>& arcs_from(Vertex v) const {
    return out_arcs_[v.index];
  }

  std::size_t component_count() const;
  bool is_connected() const { return component_count() == 1; }
  // Throws GraphError when the graph is not connected.
  void require_connected() const;

  // |E| - |V| + #components.
  std::size_t genus() const;

  // Same vertices, the edges with keep[e] set, in their original order.
  Graph spanning_subgraph(const std::vector<bool>& keep) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<Vertex> tails_;
  std::vector<Vertex> heads_;
  std::vector<std::vector<Arc>> out_arcs_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
};

// ---------------------------------------------------------------------------
// Cochains
// ---------------------------------------------------------------------------

// A function on vertices.
template <class T>
class Cochain0 {
 public:
  Cochain0() = default;
  explicit Cochain0(std::size_t size, T fill = T(0)) : values_(size, fill) {}
  explicit Cochain0(std::vector<T> values) : values_(std::move(values)) {}

  static Cochain0 indicator(std::size_t size, Vertex v) {
    Cochain0 c(size);
    c[v] = T(1);
    return c;
  }

  std::size_t size() const { return values_.size(); }
  T& operator[](Vertex v) { return values_[v.index]; }
  const T& operator[](Vertex v) const { return values_[v.index]; }
  const std::vector<T>& values() const& { return values_; }
  // By value on temporaries, so range-for over f(x).values() is safe.
  std::vector<T> values() && { return std::move(values_); }

  Cochain0& operator+=(const Cochain0& o) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  Cochain0& operator-=(const Cochain0& o) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  friend Cochain0 operator+(Cochain0 a, const Cochain0& b) { return a += b; }
  friend Cochain0 operator-(Cochain0 a, const Cochain0& b) { return a -= b; }
  friend Cochain0 operator*(const T& k, Cochain0 a) {
    for (auto& x : a.values_) x = k * x;
    return a;
  }
  friend bool operator==(const Cochain0&, const Cochain0&) = default;

 private:
  std::vector<T> values_;
};

// An antisymmetric function on oriented edges. Only the stored orientation
// is kept; the value on a reversed arc is the negation.
template <class T>
class Cochain1 {
 public:
  Cochain1() = default;
  explicit Cochain1(std::size_t size, T fill = T(0)) : values_(size, fill) {}
  explicit Cochain1(std::vector<T> values) : values_(std::move(values)) {}

  // chi_e - chi_ebar for the stored orientation of e.
  static Cochain1 basis(std::size_t size, Edge e) {
    Cochain1 c(size);
    c[e] = T(1);
    return c;
  }

  std::size_t size() const { return values_.size(); }
  T& operator[](Edge e) { return values_[e.index]; }
  const T& operator[](Edge e) const { return values_[e.index]; }
  T at(Arc a) const {
    return a.reversed ? -values_[a.edge.index] : values_[a.edge.index];
  }
  const std::vector<T>& values() const& { return values_; }
  // By value on temporaries, so range-for over f(x).values() is safe.
  std::vector<T> values() && { return std::move(values_); }

  Cochain1& operator+=(const Cochain1& o) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  Cochain1& operator-=(const Cochain1& o) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  friend Cochain1 operator+(Cochain1 a, const Cochain1& b) { return a += b; }
  friend Cochain1 operator-(Cochain1 a, const Cochain1& b) { return a -= b; }
  friend Cochain1 operator*(const T& k, Cochain1 a) {
    for (auto& x : a.values_) x = k * x;
    return a;
  }
  friend bool operator==(const Cochain1&, const Cochain1&) = default;
  friend auto operator<=>(const Cochain1& a, const Cochain1& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<T> values_;
};

using IntCochain0 = Cochain0<std::int64_t>;
using IntCochain1 = Cochain1<std::int64_t>;
using RatCochain0 = Cochain0<Rational>;
using RatCochain1 = Cochain1<Rational>;
using HalfCochain1 = Cochain1<HalfInt>;

template <class T>
Cochain1<T> d(const Graph& g, const Cochain0<T>& f) {
  Cochain1<T> out(g.edge_count());
  for (Edge e : g.edges()) out[e] = f[g.head(e)] - f[g.tail(e)];
  return out;
}

template <class T>
Cochain0<T> d_star(const Graph& g, const Cochain1<T>& h) {
  Cochain0<T> out(g.vertex_count());
  for (Edge e : g.edges()) {
    out[g.head(e)] += h[e];
    out[g.tail(e)] -= h[e];
  }
  return out;
}

template <class T>
Cochain0<T> laplacian(const Graph& g, const Cochain0<T>& f) {
  return d_star(g, d(g, f));
}

template <class T>
T pairing(const Cochain0<T>& a, const Cochain0<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a.values()[i] * b.values()[i];
  return s;
}

// The basis chi_e - chi_ebar is orthonormal.
template <class T>
T pairing(const Cochain1<T>& a, const Cochain1<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a.values()[i] * b.values()[i];
  return s;
}

template <class T>
T degree(const Cochain0<T>& f) {
  T s(0);
  for (const T& x : f.values()) s += x;
  return s;
}

RatCochain0 to_rational(const IntCochain0& f);
RatCochain1 to_rational(const IntCochain1& h);
RatCochain1 to_rational(const HalfCochain1& h);
// Integer cochain when every value is integral.
std::optional<IntCochain1> to_integer(const HalfCochain1& h);

// ---------------------------------------------------------------------------
// Laplacian and lattice data
// ---------------------------------------------------------------------------

// L[v][v] = degree of v, L[u][v] = -(number of edges between u and v).
IntMatrix laplacian_matrix(const Graph& g);

// Kirchhoff: a cofactor of the Laplacian matrix.
std::int64_t spanning_tree_count(const Graph& g);

// Index of the image of the Laplacian in the degree-zero integer cochains.
std::int64_t lattice_index(const Graph& g);

// Index of d*(C^1(G,Z)) in the degree-zero integer cochains. This is 1 for
// every connected graph; reported next to lattice_index for comparison.
std::int64_t dstar_image_index(const Graph& g);

// Invariant factors > 1 of the Laplacian on degree-zero cochains, i.e. the
// structure of the Jacobian group.
IntVector jacobian_invariant_factors(const Graph& g);

// ---------------------------------------------------------------------------
// Cycle space
// ---------------------------------------------------------------------------

// Fundamental cycles of a spanning forest. Cycle i is attached to the
// non-tree edge chord[i] and has coefficient +1 there.
struct CycleBasis {
  std::vector<IntCochain1> cycles;
  std::vector<Edge> chords;
  std::vector<bool> in_tree;  // per edge

  std::size_t size() const { return cycles.size(); }

  // Coordinates of an integer cocycle in this basis, solved through the
  // Smith form of the basis matrix; nullopt when gamma is not in the
  // integer span.
  std::optional<IntVector> coordinates(const IntCochain1& gamma) const;

  // The integer span is saturated (equals ker d* on C^1(G,Z)) iff every
  // invariant factor of the basis matrix is 1.
  bool is_saturated() const;
};

// Spanning forest picked greedily in the given edge order, then the
// fundamental cycles of the remaining edges.
CycleBasis cycle_basis(const Graph& g);
CycleBasis cycle_basis(const Graph& g, const std::vector<Edge>& edge_order);

// gamma in H^1(G, Z): integral and killed by d*, confirmed by solving in the
// cycle basis.
bool in_h1(const Graph& g, const CycleBasis& basis, const HalfCochain1& gamma);

}  // namespace vlimits

#endif  // VLIMITS_GRAPH_HPP_
