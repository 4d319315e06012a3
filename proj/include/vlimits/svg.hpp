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

// Pictures of the mixed tiling of H_0(G, R) for graphs with at most three
// vertices. Membership is decided exactly on a rational grid; decimals only
// appear in the SVG coordinates.

#ifndef VLIMITS_SVG_HPP_
#define VLIMITS_SVG_HPP_

#include <cstdint>
#include <string>

#include "vlimits/io.hpp"
#include "vlimits/slopes.hpp"

namespace vlimits {

struct FigureOptions {
  std::int64_t f_radius = 2;       // tiles drawn for f in this box
  std::int64_t extent = 2;         // sampled coordinates lie in [-extent, extent]
  std::int64_t denominator = 4;    // grid step 1/denominator
};

struct TilingFigure {
  std::string svg;
  Json centers;  // exact centers, for the JSON sidecar
};

// Throws DomainError when the graph has more than three vertices.
TilingFigure tiling_figure(const SlopeContext& ctx, const FigureOptions& opt);

}  // namespace vlimits

#endif  // VLIMITS_SVG_HPP_
