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

// Windowed census of the limit descriptors (n, f) -> (cell, degrees,
// orbit point), with the containment poset between them.

#ifndef VLIMITS_CENSUS_HPP_
#define VLIMITS_CENSUS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vlimits/slopes.hpp"
#include "vlimits/toric.hpp"

namespace vlimits {

struct TruncationWindow {
  std::int64_t n_max = 1;
  std::int64_t f_radius = 1;
  std::int64_t cell_radius = 1;
  // Scales visited are n_step, 2 n_step, ..., n_max n_step. A twist with
  // denominator q needs q | n_step.
  std::int64_t n_step = 1;

  void validate() const;
};

struct LimitDescriptor {
  std::int64_t n = 1;
  IntCochain0 f;  // f(v0) = 0
  CellIndex cell;
  IntCochain0 degrees;
  OrbitPoint point;
  std::size_t orbit_dim = 0;
  std::size_t h1_class = 0;

  // Everything that must agree between two keys naming the same cell.
  bool same_shadow(const LimitDescriptor& o) const {
    return cell == o.cell && degrees == o.degrees && point == o.point;
  }
};

// (upper, lower): P_upper strictly contains P_lower with nothing from the
// census in between. Indices refer to Census::cells.
using HasseEdge = std::pair<std::size_t, std::size_t>;

struct CensusDiagnostics {
  // Some f on the boundary of the f-box produced a cell inside the cell
  // window, so the window may be missing cells.
  bool window_too_small = false;
  std::vector<std::string> messages;
  // Connectivity of the containment graph; only meaningful (and only
  // computed) when the window is not too small.
  bool connectivity_checked = false;
  bool connected = false;           // all census cells
  bool interior_connected = false;  // cells strictly inside the window
};

struct Census {
  std::vector<LimitDescriptor> cells;  // sorted by cell
  std::vector<HasseEdge> hasse;        // sorted
  CensusDiagnostics diagnostics;
};

// deg_v = b_v + sum over arcs a leaving v of floor(slope(a)).
IntCochain0 descriptor_degrees(const Graph& g, const IntCochain0& bdeg,
                               const CellIndex& cell);

// One raw (n, f) sample before merging; the regeneration census builds
// these by chip-firing instead of floors.
struct CensusSample {
  std::int64_t n = 1;
  IntCochain0 f;
  CellIndex cell;
  IntCochain0 degrees;
};

// Merges samples (first key wins; duplicates must agree), attaches orbit
// points, H^1 classes, the Hasse diagram and the diagnostics. Samples must
// arrive in window order.
Census assemble_census(const Graph& g, const CharacterPair& ch,
                       const TruncationWindow& window,
                       const std::vector<CensusSample>& samples);

// Enumerates the window through the slope cochains.
Census y_census(const SlopeContext& ctx, const CharacterPair& ch,
                const IntCochain0& bdeg, const TruncationWindow& window);

// desc1 is a flat degeneration of desc2: cell_contains(cell2, cell1).
bool degenerates(const LimitDescriptor& desc1, const LimitDescriptor& desc2);

}  // namespace vlimits

#endif  // VLIMITS_CENSUS_HPP_
