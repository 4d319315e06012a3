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

#include "support/fixtures.hpp"

#include <string>

namespace vlimits::testing {
namespace {

GraphPtr make(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  return std::make_shared<const Graph>(std::move(vertices), std::move(edges));
}

}  // namespace

GraphPtr k2() { return make({"u", "v"}, {{"e", "u", "v"}}); }

GraphPtr b2() {
  return make({"u", "v"}, {{"e1", "u", "v"}, {"e2", "u", "v"}});
}

GraphPtr theta() {
  return make({"u", "v"},
              {{"e1", "u", "v"}, {"e2", "u", "v"}, {"e3", "u", "v"}});
}

GraphPtr triangle() {
  return make({"a", "b", "c"},
              {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ac", "a", "c"}});
}

GraphPtr p3() {
  return make({"a", "b", "c"}, {{"ab", "a", "b"}, {"bc", "b", "c"}});
}

GraphPtr k4() {
  return make({"p", "q", "r", "s"},
              {{"pq", "p", "q"},
               {"pr", "p", "r"},
               {"ps", "p", "s"},
               {"qr", "q", "r"},
               {"qs", "q", "s"},
               {"rs", "r", "s"}});
}

GraphPtr random_multigraph(Rng& rng, std::size_t max_vertices,
                           std::size_t max_extra_edges) {
  const auto nv = static_cast<std::size_t>(
      rng.uniform(2, static_cast<std::int64_t>(max_vertices)));
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  auto add = [&](std::size_t x, std::size_t y) {
    if (rng.coin()) std::swap(x, y);
    edges.push_back({"e" + std::to_string(edges.size()), vertices[x], vertices[y]});
  };
  for (std::size_t i = 1; i < nv; ++i) {
    add(i, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1)));
  }
  const auto extra = rng.uniform(0, static_cast<std::int64_t>(max_extra_edges));
  for (std::int64_t k = 0; k < extra; ++k) {
    const auto x = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nv) - 1));
    auto y = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nv) - 2));
    if (y >= x) ++y;
    add(x, y);
  }
  return make(std::move(vertices), std::move(edges));
}

std::vector<std::int64_t> random_lengths(const Graph& g, Rng& rng,
                                         std::int64_t max_length) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    out.push_back(rng.uniform(1, max_length));
  }
  return out;
}

RatCochain1 random_twist(const Graph& g, Rng& rng, std::int64_t r) {
  RatCochain1 m(g.edge_count());
  for (Edge e : g.edges()) m[e] = Rational(rng.uniform(-r, r));
  return m;
}

SlopeContext context(const GraphPtr& g, std::vector<std::int64_t> lengths,
                     std::int64_t scale) {
  return SlopeContext(g, std::move(lengths), RatCochain1(g->edge_count()),
                      scale);
}

IntCochain0 cochain(std::vector<std::int64_t> values) {
  return IntCochain0(std::move(values));
}

}  // namespace vlimits::testing
