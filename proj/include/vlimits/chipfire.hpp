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

// Subdivided graphs H^n, divisors on them, admissibility, canonical
// extensions and admissible chip-firing.

#ifndef VLIMITS_CHIPFIRE_HPP_
#define VLIMITS_CHIPFIRE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vlimits/graph.hpp"

namespace vlimits {

// H^n: every edge e = uv replaced by a chain u = z^e_0, ..., z^e_N = v with
// N = n * length(e). Nodes are numbered V(G) first, then the interior of
// each chain in edge order.
class Subdivision {
 public:
  Subdivision(std::shared_ptr<const Graph> graph,
              std::vector<std::int64_t> lengths, std::int64_t scale);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const std::vector<std::int64_t>& lengths() const { return lengths_; }
  std::int64_t length(Edge e) const { return lengths_[e.index]; }
  std::int64_t scale() const { return scale_; }
  // N = n * length(e), the number of unit segments on the chain of e.
  std::int64_t segments(Edge e) const { return scale_ * lengths_[e.index]; }

  std::size_t node_count() const { return node_count_; }
  std::size_t node(Vertex v) const { return v.index; }
  // z^e_i on the stored orientation, 0 <= i <= N.
  std::size_t node(Edge e, std::int64_t i) const;
  // z^a_i; on a reversed arc this is z^e_{N-i}.
  std::size_t node(Arc a, std::int64_t i) const;

  bool is_base_vertex(std::size_t k) const { return k < graph_->vertex_count(); }
  // For an interior node: its edge and stored-orientation index.
  std::pair<Edge, std::int64_t> interior_position(std::size_t k) const;

  // "u" for vertices, "z:<edge>:<i>" for interior nodes.
  std::string node_name(std::size_t k) const;
  std::optional<std::size_t> find_node(std::string_view name) const;

  // Neighbors with multiplicity (parallel length-1 edges repeat).
  const std::vector<std::size_t>& neighbors(std::size_t k) const {
    return adjacency_[k];
  }

  // Same graph and lengths at another scale.
  std::shared_ptr<const Subdivision> rescaled(std::int64_t scale) const;

  bool same_as(const Subdivision& o) const {
    return graph_ == o.graph_ && lengths_ == o.lengths_ && scale_ == o.scale_;
  }

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<std::int64_t> lengths_;
  std::int64_t scale_;
  std::vector<std::size_t> chain_offset_;  // node id of z^e_1
  std::size_t node_count_ = 0;
  std::vector<std::vector<std::size_t>> adjacency_;
};

using SubdivisionPtr = std::shared_ptr<const Subdivision>;

SubdivisionPtr make_subdivision(const Graph& g,
                                std::vector<std::int64_t> lengths,
                                std::int64_t scale);

// Integer values on the nodes of a Subdivision. Divisor and
// ExtendedFunction share this layout but are kept apart as types.
template <class Tag>
class NodeValues {
 public:
  NodeValues() = default;
  explicit NodeValues(SubdivisionPtr sub)
      : sub_(std::move(sub)), values_(sub_->node_count(), 0) {}
  NodeValues(SubdivisionPtr sub, std::vector<std::int64_t> values)
      : sub_(std::move(sub)), values_(std::move(values)) {
    if (values_.size() != sub_->node_count()) {
      throw std::invalid_argument("node vector size mismatch");
    }
  }

  const Subdivision& subdivision() const { return *sub_; }
  const SubdivisionPtr& subdivision_ptr() const { return sub_; }
  std::int64_t& operator[](std::size_t k) { return values_[k]; }
  std::int64_t operator[](std::size_t k) const { return values_[k]; }
  std::int64_t at(Vertex v) const { return values_[sub_->node(v)]; }
  std::int64_t at(Arc a, std::int64_t i) const {
    return values_[sub_->node(a, i)];
  }
  const std::vector<std::int64_t>& values() const& { return values_; }
  // By value on temporaries, so range-for over f(x).values() is safe.
  std::vector<std::int64_t> values() && { return std::move(values_); }

  NodeValues& operator+=(const NodeValues& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      values_[i] = checked_add(values_[i], o.values_[i]);
    }
    return *this;
  }
  NodeValues& operator-=(const NodeValues& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      values_[i] = checked_sub(values_[i], o.values_[i]);
    }
    return *this;
  }
  friend NodeValues operator+(NodeValues a, const NodeValues& b) {
    return a += b;
  }
  friend NodeValues operator-(NodeValues a, const NodeValues& b) {
    return a -= b;
  }
  friend bool operator==(const NodeValues& a, const NodeValues& b) {
    return a.sub_->same_as(*b.sub_) && a.values_ == b.values_;
  }

 private:
  void check_same(const NodeValues& o) const {
    if (!sub_->same_as(*o.sub_)) {
      throw std::invalid_argument("values live on different subdivisions");
    }
  }

  SubdivisionPtr sub_;
  std::vector<std::int64_t> values_;
};

struct DivisorTag {};
struct FunctionTag {};
using Divisor = NodeValues<DivisorTag>;
using ExtendedFunction = NodeValues<FunctionTag>;

std::int64_t total_degree(const Divisor& d);

// Coefficient at w: sum over neighbors x of f(x) - f(w).
Divisor principal_divisor(const ExtendedFunction& f);

bool is_admissible(const Divisor& d);
void require_admissible(const Divisor& d);

// t^D_a = sum_{j=1}^{N} (N - j) D(z^a_j).
std::int64_t t_of(const Divisor& d, Arc a);

// Stored-orientation index of the charged interior node of e, if any.
// Meaningful for admissible divisors.
std::optional<std::int64_t> chip_index(const Divisor& d, Edge e);

// f_{D,v}: 1 on z^a_i for every arc a with head v and every
// i = N - t^D_a, ..., N; 0 elsewhere.
ExtendedFunction single_vertex_extension(const Divisor& d, Vertex v);

Divisor fire(const Divisor& d, Vertex v);

// The unique extension of f to H^n keeping D + div(extension) admissible.
ExtendedFunction canonical_extension(const IntCochain0& f, const Divisor& d);

// Interior chips at z^{e,m}_k move to z^{e,n}_{k n/m}; values on V(G) are
// kept. Requires m | n.
Divisor pullback(const Divisor& d, std::int64_t n);

}  // namespace vlimits

#endif  // VLIMITS_CHIPFIRE_HPP_
