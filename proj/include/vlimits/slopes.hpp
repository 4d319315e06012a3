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

// Floor slopes delta, the half-integer slope cochain, and the subgraph of
// edges where the slope is integral.

#ifndef VLIMITS_SLOPES_HPP_
#define VLIMITS_SLOPES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vlimits/graph.hpp"

namespace vlimits {

// Graph, edge lengths, twisting m (rational) and scale n with n*m integral.
class SlopeContext {
 public:
  SlopeContext(std::shared_ptr<const Graph> graph,
               std::vector<std::int64_t> lengths, RatCochain1 twist,
               std::int64_t scale);
  // Convenience: copies the graph; zero twist.
  static SlopeContext untwisted(const Graph& g,
                                std::vector<std::int64_t> lengths,
                                std::int64_t scale = 1);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const std::vector<std::int64_t>& lengths() const { return lengths_; }
  std::int64_t length(Edge e) const { return lengths_[e.index]; }
  const RatCochain1& twist() const { return twist_; }
  std::int64_t scale() const { return scale_; }

  // n * length(e).
  std::int64_t segments(Edge e) const { return scale_ * lengths_[e.index]; }
  // n * m_a as an integer.
  std::int64_t scaled_twist(Arc a) const;

  SlopeContext with_scale(std::int64_t scale) const;
  SlopeContext with_twist(RatCochain1 twist) const;
  // Lengths times m, twist times m, scale divided by m; requires m | n
  // and m * twist integral.
  SlopeContext rescaled_lengths(std::int64_t m) const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<std::int64_t> lengths_;
  RatCochain1 twist_;
  std::int64_t scale_;
};

// floor((f(head) - f(tail) + n m_a) / (n l_a)).
std::int64_t delta(const SlopeContext& ctx, const IntCochain0& f, Arc a);

// (delta_e - delta_ebar) / 2 on each stored edge.
HalfCochain1 dslope(const SlopeContext& ctx, const IntCochain0& f);

// The unique i in (0, N] with f(head) - f(tail) + n m_a = N delta_a + N - i.
std::int64_t i_index(const SlopeContext& ctx, const IntCochain0& f, Arc a);

// Mask of edges with integral slope.
std::vector<bool> integral_mask(const HalfCochain1& slope);
Graph integral_subgraph(const SlopeContext& ctx, const IntCochain0& f);

// Enumeration window for (n, f): 1 <= n <= n_max, f(v0) = 0 and the other
// values in [-f_radius, f_radius].
struct SlopeWindow {
  std::int64_t n_max = 1;
  std::int64_t f_radius = 0;
};

// Visits every (n, f) of the window in a fixed order: n ascending, then f
// in lexicographic order.
template <class Visit>
void for_each_in_window(const Graph& g, const SlopeWindow& w, Visit&& visit) {
  const std::size_t nv = g.vertex_count();
  for (std::int64_t n = 1; n <= w.n_max; ++n) {
    IntCochain0 f(nv);
    for (std::size_t i = 1; i < nv; ++i) f[Vertex{i}] = -w.f_radius;
    for (bool more = true; more;) {
      visit(n, static_cast<const IntCochain0&>(f));
      more = false;
      for (std::size_t k = nv; k > 1 && !more;) {
        --k;
        if (f[Vertex{k}] < w.f_radius) {
          ++f[Vertex{k}];
          more = true;
        } else {
          f[Vertex{k}] = -w.f_radius;
        }
      }
    }
  }
}

struct SeparationReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::size_t distinct_slopes = 0;
  // First offending pair, when one exists.
  std::optional<HalfCochain1> first;
  std::optional<HalfCochain1> second;
};

// Checks that two distinct slope cochains from the window never differ by
// a nonzero element of H^1(G, Z).
SeparationReport h1_separation_check(const SlopeContext& ctx,
                                     const SlopeWindow& window);

}  // namespace vlimits

#endif  // VLIMITS_SLOPES_HPP_
