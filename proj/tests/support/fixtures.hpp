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

// Small graphs shared by the unit tests and the acceptance runner.

#ifndef VLIMITS_TESTS_FIXTURES_HPP_
#define VLIMITS_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "vlimits/graph.hpp"
#include "vlimits/slopes.hpp"
#include "vlimits/verify.hpp"

namespace vlimits::testing {

using GraphPtr = std::shared_ptr<const Graph>;

GraphPtr k2();        // u -> v
GraphPtr b2();        // u -> v twice
GraphPtr theta();     // u -> v three times
GraphPtr triangle();  // a -> b, b -> c, a -> c
GraphPtr p3();        // a -> b -> c
GraphPtr k4();

// Connected multigraph without loops, 2 <= |V| <= max_vertices.
GraphPtr random_multigraph(Rng& rng, std::size_t max_vertices,
                           std::size_t max_extra_edges = 4);

std::vector<std::int64_t> random_lengths(const Graph& g, Rng& rng,
                                         std::int64_t max_length);

// Integral twist with values in [-r, r].
RatCochain1 random_twist(const Graph& g, Rng& rng, std::int64_t r);

SlopeContext context(const GraphPtr& g, std::vector<std::int64_t> lengths,
                     std::int64_t scale = 1);

IntCochain0 cochain(std::vector<std::int64_t> values);

}  // namespace vlimits::testing

#endif  // VLIMITS_TESTS_FIXTURES_HPP_
