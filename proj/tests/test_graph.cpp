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

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "vlimits/graph.hpp"

namespace vlimits {
namespace {

using testing::cochain;

TEST(GraphConstruction, RejectsBadInput) {
  EXPECT_THROW(Graph({"u"}, {{"e", "u", "u"}}), GraphError);
  EXPECT_THROW(Graph({"u", "u"}, {}), GraphError);
  EXPECT_THROW(Graph({"u", "v"}, {{"e", "u", "w"}}), GraphError);
  EXPECT_THROW(Graph({"u", "v"}, {{"e", "u", "v"}, {"e", "v", "u"}}),
               GraphError);
  const Graph split({"u", "v"}, {});
  EXPECT_FALSE(split.is_connected());
  EXPECT_THROW(split.require_connected(), GraphError);
}

TEST(GraphConstruction, Lookup) {
  auto g = testing::triangle();
  EXPECT_EQ(g->find_vertex("b")->index, 1u);
  EXPECT_FALSE(g->find_vertex("z").has_value());
  EXPECT_EQ(g->edge_id(*g->find_edge("ac")), "ac");
  EXPECT_EQ(g->genus(), 1u);
  EXPECT_EQ(testing::k4()->genus(), 3u);
  EXPECT_EQ(testing::k2()->genus(), 0u);
}

TEST(Coboundary, Examples) {
  auto b2 = testing::b2();
  EXPECT_EQ(d(*b2, cochain({0, 1})), IntCochain1(std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(d(*b2, cochain({4, 4})), IntCochain1(2));
  auto tri = testing::triangle();
  EXPECT_EQ(d(*tri, cochain({0, 0, 1})),
            IntCochain1(std::vector<std::int64_t>{0, 1, 1}));
}

TEST(Coboundary, AdjointExamples) {
  auto b2 = testing::b2();
  EXPECT_EQ(d_star(*b2, IntCochain1(std::vector<std::int64_t>{1, 0})),
            cochain({-1, 1}));
  EXPECT_EQ(d_star(*b2, IntCochain1(std::vector<std::int64_t>{1, 1})),
            cochain({-2, 2}));
  for (const IntCochain1& c : cycle_basis(*b2).cycles) {
    EXPECT_EQ(d_star(*b2, c), cochain({0, 0}));
  }
}

TEST(Laplacian, Examples) {
  EXPECT_EQ(laplacian(*testing::b2(), cochain({0, 1})), cochain({-2, 2}));
  EXPECT_EQ(laplacian(*testing::b2(), cochain({3, 3})), cochain({0, 0}));
  EXPECT_EQ(laplacian(*testing::triangle(), cochain({1, 0, 0})),
            cochain({2, -1, -1}));
}

TEST(Laplacian, MatchesIncidenceOracle) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    auto g = testing::random_multigraph(rng, 6);
    IntCochain0 f(g->vertex_count());
    for (Vertex v : g->vertices()) f[v] = rng.uniform(-9, 9);
    EXPECT_EQ(laplacian(*g, f), oracle::laplacian(*g, f));
    const IntMatrix l = laplacian_matrix(*g);
    const IntVector lf = multiply(l, f.values());
    EXPECT_EQ(lf, oracle::laplacian(*g, f).values());
  }
}

TEST(SpanningTrees, Examples) {
  EXPECT_EQ(spanning_tree_count(*testing::k2()), 1);
  EXPECT_EQ(spanning_tree_count(*testing::b2()), 2);
  EXPECT_EQ(spanning_tree_count(*testing::triangle()), 3);
  EXPECT_EQ(spanning_tree_count(*testing::theta()), 3);
  EXPECT_EQ(spanning_tree_count(*testing::k4()), 16);
}

TEST(LatticeIndex, Examples) {
  EXPECT_EQ(lattice_index(*testing::b2()), 2);
  EXPECT_EQ(lattice_index(*testing::triangle()), 3);
  EXPECT_EQ(lattice_index(*testing::k2()), 1);
  EXPECT_EQ(jacobian_invariant_factors(*testing::k4()), (IntVector{4, 4}));
  EXPECT_EQ(jacobian_invariant_factors(*testing::b2()), (IntVector{2}));
  // The image of d* on integer 1-cochains is all of the degree-0 lattice.
  EXPECT_EQ(dstar_image_index(*testing::k4()), 1);
}

TEST(LatticeIndex, EqualsSubsetTreeCount) {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    auto g = testing::random_multigraph(rng, 6, 5);
    const std::int64_t trees = oracle::tree_count(*g);
    EXPECT_EQ(spanning_tree_count(*g), trees);
    EXPECT_EQ(lattice_index(*g), trees);
  }
}

TEST(CycleBasis, Examples) {
  EXPECT_EQ(cycle_basis(*testing::k2()).size(), 0u);
  const CycleBasis b2 = cycle_basis(*testing::b2());
  ASSERT_EQ(b2.size(), 1u);
  const IntCochain1 expected(std::vector<std::int64_t>{1, -1});
  EXPECT_TRUE(b2.cycles[0] == expected || b2.cycles[0] == -1 * expected);
  EXPECT_EQ(b2.chords[0].index, 1u);

  const CycleBasis th = cycle_basis(*testing::theta());
  ASSERT_EQ(th.size(), 2u);
  EXPECT_EQ(th.cycles[0], IntCochain1(std::vector<std::int64_t>{-1, 1, 0}));
  EXPECT_EQ(th.cycles[1], IntCochain1(std::vector<std::int64_t>{-1, 0, 1}));
  EXPECT_TRUE(th.is_saturated());
}

TEST(CycleBasis, GenusManyClosedCycles) {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    auto g = testing::random_multigraph(rng, 6, 5);
    const CycleBasis basis = cycle_basis(*g);
    EXPECT_EQ(basis.size(), g->genus());
    EXPECT_TRUE(basis.is_saturated());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      EXPECT_EQ(d_star(*g, basis.cycles[i]), IntCochain0(g->vertex_count()));
      EXPECT_EQ(basis.cycles[i][basis.chords[i]], 1);
    }
  }
}

TEST(CycleBasis, MembershipMatchesKernelOracle) {
  Rng rng(29);
  for (int t = 0; t < 60; ++t) {
    auto g = testing::random_multigraph(rng, 5, 4);
    const CycleBasis basis = cycle_basis(*g);
    for (int k = 0; k < 20; ++k) {
      HalfCochain1 gamma(g->edge_count());
      for (Edge e : g->edges()) gamma[e] = HalfInt::from_twice(rng.uniform(-2, 2) * 2);
      if (rng.uniform(0, 3) == 0) {
        gamma[Edge{0}] = HalfInt::from_twice(1);
      }
      EXPECT_EQ(in_h1(*g, basis, gamma), oracle::in_h1(*g, gamma));
      // Combinations of basis cycles always belong.
      IntCochain1 c(g->edge_count());
      for (const IntCochain1& b : basis.cycles) c += rng.uniform(-3, 3) * b;
      HalfCochain1 h(g->edge_count());
      for (Edge e : g->edges()) h[e] = HalfInt(c[e]);
      EXPECT_TRUE(in_h1(*g, basis, h));
    }
  }
}

}  // namespace
}  // namespace vlimits
