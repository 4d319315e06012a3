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

// The quadratic form q on degree-zero cochains, Voronoi cells of the
// Laplacian lattice, and the twisted mixed Voronoi tiles.

#ifndef VLIMITS_TILINGS_HPP_
#define VLIMITS_TILINGS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "vlimits/graph.hpp"
#include "vlimits/slopes.hpp"

namespace vlimits {

// q(eta) = <g, eta> where Laplacian(g) = eta. Requires a connected graph.
class QuadraticForm {
 public:
  explicit QuadraticForm(const Graph& g);

  const Graph& graph() const { return graph_; }
  const IntMatrix& laplacian() const { return laplacian_; }

  // g with Laplacian(g) = eta and g(v0) = 0. Rejects deg(eta) != 0.
  RatCochain0 potential(const RatCochain0& eta) const;
  Rational operator()(const RatCochain0& eta) const;
  Rational bilinear(const RatCochain0& a, const RatCochain0& b) const;

  // eta in Laplacian(C^0(G, Z)).
  bool in_lattice(const RatCochain0& eta) const;
  // k^T L k for an integer cochain k, i.e. q(Laplacian(k)).
  Rational lattice_norm(const IntCochain0& k) const;

  // Edge distance from v0, used to bound lattice coordinates.
  const std::vector<std::int64_t>& distances() const { return distances_; }

 private:
  Graph graph_;
  IntMatrix laplacian_;
  RatMatrix reduced_inverse_;
  std::vector<std::int64_t> distances_;
};

void require_degree_zero(const RatCochain0& eta);

enum class Placement { kInterior, kBoundary, kOutside };

const char* to_string(Placement p);

// Placement of mu relative to the Voronoi cell of the origin: mu is in the
// cell iff 2<mu, k> <= k^T L k for every integer k. Candidates k are
// enumerated in a box large enough that every k outside it has
// q(Laplacian(k)) > 4 q(mu), so the answer is exact.
Placement voronoi_placement(const QuadraticForm& qf, const RatCochain0& mu);

// q(eta - beta) <= q(eta - lambda) for every lattice point lambda. Throws
// DomainError when beta is not a lattice point.
bool vor_member(const QuadraticForm& qf, const RatCochain0& eta,
                const RatCochain0& beta);

struct Tile {
  enum class Kind { kStandard, kMixed };
  Kind kind = Kind::kMixed;
  RatCochain0 center;
  // Mixed tiles only.
  IntCochain0 f;
  HalfCochain1 slope;
  std::vector<bool> subgraph_mask;
};

// The tile d*(slope_f) + Vor_{G_f}(O), or nullopt when G_f is disconnected.
// Needs scale 1.
std::optional<Tile> mixed_tile(const SlopeContext& ctx, const IntCochain0& f);

struct TileHit {
  Tile tile;
  Placement placement = Placement::kOutside;
};

struct TileSearch {
  std::vector<TileHit> hits;  // sorted by f
  IntCochain0 estimate;       // the starting point f0
  std::int64_t radius = 0;    // final search radius around f0
  std::size_t disconnected_skipped = 0;
};

// Every mixed tile containing eta. The search starts at a rounded solution
// of the length-weighted Laplacian system and doubles its radius; once a
// tile is found it doubles once more and reports every containing tile.
// Throws SearchExhausted when max_radius is reached with no hit.
TileSearch mixed_tile_of(const SlopeContext& ctx, const RatCochain0& eta,
                         std::int64_t max_radius = 64);

// Tile centers d*(slope_f) over the window's f with connected G_f, sorted.
std::vector<RatCochain0> tile_centers(const SlopeContext& ctx,
                                      std::int64_t f_radius);

// Sampling certificate for the tiling property.
struct TilingCertificate {
  std::size_t samples = 0;
  std::size_t uncovered = 0;
  std::size_t boundary_only = 0;    // in exactly one tile, on its boundary
  std::size_t double_interior = 0;  // strictly inside two tiles
  std::size_t boundary_points = 0;  // in two or more tiles
  bool ok() const {
    return uncovered == 0 && boundary_only == 0 && double_interior == 0;
  }
};

TilingCertificate certify_tiling(const SlopeContext& ctx,
                                 const std::vector<RatCochain0>& samples);

}  // namespace vlimits

#endif  // VLIMITS_TILINGS_HPP_
