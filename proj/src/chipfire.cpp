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

#include "vlimits/chipfire.hpp"

#include <algorithm>
#include <charconv>

#include "vlimits/errors.hpp"

namespace vlimits {

// ---------------------------------------------------------------------------
// Subdivision
// ---------------------------------------------------------------------------

Subdivision::Subdivision(std::shared_ptr<const Graph> graph,
                         std::vector<std::int64_t> lengths,
                         std::int64_t scale)
    : graph_(std::move(graph)), lengths_(std::move(lengths)), scale_(scale) {
  if (!graph_) throw std::invalid_argument("null graph");
  if (lengths_.size() != graph_->edge_count()) {
    throw DomainError("need one length per edge");
  }
  if (scale_ < 1) throw DomainError("scale must be positive");
  for (std::int64_t l : lengths_) {
    if (l < 1) throw DomainError("edge lengths must be positive");
  }

  node_count_ = graph_->vertex_count();
  for (Edge e : graph_->edges()) {
    chain_offset_.push_back(node_count_);
    node_count_ += static_cast<std::size_t>(segments(e) - 1);
  }

  adjacency_.assign(node_count_, {});
  for (Edge e : graph_->edges()) {
    for (std::int64_t i = 0; i < segments(e); ++i) {
      std::size_t a = node(e, i);
      std::size_t b = node(e, i + 1);
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
  }
}

std::size_t Subdivision::node(Edge e, std::int64_t i) const {
  const std::int64_t n = segments(e);
  if (i < 0 || i > n) throw std::out_of_range("chain index out of range");
  if (i == 0) return graph_->tail(e).index;
  if (i == n) return graph_->head(e).index;
  return chain_offset_[e.index] + static_cast<std::size_t>(i - 1);
}

std::size_t Subdivision::node(Arc a, std::int64_t i) const {
  return a.reversed ? node(a.edge, segments(a.edge) - i) : node(a.edge, i);
}

std::pair<Edge, std::int64_t> Subdivision::interior_position(
    std::size_t k) const {
  if (is_base_vertex(k) || k >= node_count_) {
    throw std::out_of_range("not an interior node");
  }
  auto it = std::upper_bound(chain_offset_.begin(), chain_offset_.end(), k);
  // Chains of length-1 edges are empty and share offsets with their
  // successor, so step back to the last chain that actually contains k.
  std::size_t e = static_cast<std::size_t>(it - chain_offset_.begin()) - 1;
  return {Edge{e}, static_cast<std::int64_t>(k - chain_offset_[e]) + 1};
}

std::string Subdivision::node_name(std::size_t k) const {
  if (is_base_vertex(k)) return graph_->vertex_id(Vertex{k});
  auto [e, i] = interior_position(k);
  return "z:" + graph_->edge_id(e) + ":" + std::to_string(i);
}

std::optional<std::size_t> Subdivision::find_node(std::string_view name) const {
  if (auto v = graph_->find_vertex(name)) return node(*v);
  if (name.size() < 4 || name.substr(0, 2) != "z:") return std::nullopt;
  auto colon = name.rfind(':');
  if (colon <= 2) return std::nullopt;
  auto e = graph_->find_edge(name.substr(2, colon - 2));
  if (!e) return std::nullopt;
  std::string_view digits = name.substr(colon + 1);
  std::int64_t i = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), i);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  if (i < 1 || i >= segments(*e)) return std::nullopt;
  return node(*e, i);
}

std::shared_ptr<const Subdivision> Subdivision::rescaled(
    std::int64_t scale) const {
  return std::make_shared<const Subdivision>(graph_, lengths_, scale);
}

SubdivisionPtr make_subdivision(const Graph& g,
                                std::vector<std::int64_t> lengths,
                                std::int64_t scale) {
  return std::make_shared<const Subdivision>(std::make_shared<const Graph>(g),
                                             std::move(lengths), scale);
}

// ---------------------------------------------------------------------------
// Divisors
// ---------------------------------------------------------------------------

std::int64_t total_degree(const Divisor& d) {
  std::int64_t s = 0;
  for (std::int64_t x : d.values()) s = checked_add(s, x);
  return s;
}

Divisor principal_divisor(const ExtendedFunction& f) {
  const Subdivision& sub = f.subdivision();
  Divisor out(f.subdivision_ptr());
  for (std::size_t w = 0; w < sub.node_count(); ++w) {
    std::int64_t c = 0;
    for (std::size_t x : sub.neighbors(w)) {
      c = checked_add(c, checked_sub(f[x], f[w]));
    }
    out[w] = c;
  }
  return out;
}

bool is_admissible(const Divisor& d) {
  const Subdivision& sub = d.subdivision();
  for (Edge e : sub.graph().edges()) {
    int charged = 0;
    for (std::int64_t i = 1; i < sub.segments(e); ++i) {
      std::int64_t c = d[sub.node(e, i)];
      if (c == 0) continue;
      if (c != 1 || ++charged > 1) return false;
    }
  }
  return true;
}

void require_admissible(const Divisor& d) {
  if (!is_admissible(d)) throw DomainError("divisor is not admissible");
}

std::int64_t t_of(const Divisor& d, Arc a) {
  const std::int64_t n = d.subdivision().segments(a.edge);
  std::int64_t t = 0;
  for (std::int64_t j = 1; j < n; ++j) {
    t = checked_add(t, checked_mul(n - j, d.at(a, j)));
  }
  return t;
}

std::optional<std::int64_t> chip_index(const Divisor& d, Edge e) {
  const Subdivision& sub = d.subdivision();
  for (std::int64_t i = 1; i < sub.segments(e); ++i) {
    if (d[sub.node(e, i)] != 0) return i;
  }
  return std::nullopt;
}

ExtendedFunction single_vertex_extension(const Divisor& d, Vertex v) {
  const Subdivision& sub = d.subdivision();
  ExtendedFunction f(d.subdivision_ptr());
  f[sub.node(v)] = 1;
  for (Arc out : sub.graph().arcs_from(v)) {
    Arc in = out.reverse();  // head(in) == v
    const std::int64_t n = sub.segments(in.edge);
    for (std::int64_t i = n - t_of(d, in); i <= n; ++i) f[sub.node(in, i)] = 1;
  }
  return f;
}

Divisor fire(const Divisor& d, Vertex v) {
  require_admissible(d);
  return d + principal_divisor(single_vertex_extension(d, v));
}

ExtendedFunction canonical_extension(const IntCochain0& f, const Divisor& d) {
  require_admissible(d);
  const Subdivision& sub = d.subdivision();
  if (f.size() != sub.graph().vertex_count()) {
    throw std::invalid_argument("canonical_extension: cochain size");
  }
  ExtendedFunction out(d.subdivision_ptr());
  if (f.size() == 0) return out;

  // Shift to f >= 0; constants extend as constants.
  const std::int64_t shift =
      -*std::min_element(f.values().begin(), f.values().end());
  std::vector<std::int64_t> remaining(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    remaining[i] = checked_add(f.values()[i], shift);
  }

  Divisor current = d;
  for (Vertex v : sub.graph().vertices()) {
    for (std::int64_t k = 0; k < remaining[v.index]; ++k) {
      ExtendedFunction step = single_vertex_extension(current, v);
      current += principal_divisor(step);
      out += step;
    }
  }
  for (std::size_t k = 0; k < sub.node_count(); ++k) {
    out[k] = checked_sub(out[k], shift);
  }
  return out;
}

Divisor pullback(const Divisor& d, std::int64_t n) {
  const Subdivision& from = d.subdivision();
  const std::int64_t m = from.scale();
  if (n < 1 || n % m != 0) {
    throw DomainError("pullback: scale " + std::to_string(m) +
                      " does not divide " + std::to_string(n));
  }
  const std::int64_t factor = n / m;
  SubdivisionPtr to = from.rescaled(n);
  Divisor out(to);
  for (Vertex v : from.graph().vertices()) out[to->node(v)] = d.at(v);
  for (Edge e : from.graph().edges()) {
    for (std::int64_t k = 1; k < from.segments(e); ++k) {
      out[to->node(e, k * factor)] = d[from.node(e, k)];
    }
  }
  return out;
}

}  // namespace vlimits
