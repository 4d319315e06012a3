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

#include "vlimits/tilings.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "vlimits/errors.hpp"
#include "vlimits/union_find.hpp"

namespace vlimits {
namespace {

std::int64_t isqrt(std::int64_t x) {
  if (x <= 0) return 0;
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t round_nearest(const Rational& x) {
  return (x + Rational(1, 2)).floor();
}

bool values_less(const RatCochain0& a, const RatCochain0& b) {
  return a.values() < b.values();
}

// Calls visit(k) for every integer k with k(v0) = 0 and |k(v)| <= radius[v]
// for v != v0, except k = 0. Stops early when visit returns false.
template <class Visit>
void for_each_box_point(const std::vector<std::int64_t>& radius,
                        Visit&& visit) {
  const std::size_t n = radius.size();
  IntCochain0 k(n);
  for (std::size_t i = 1; i < n; ++i) k[Vertex{i}] = -radius[i];
  for (bool more = n > 1; more;) {
    bool zero = true;
    for (std::int64_t x : k.values()) zero = zero && x == 0;
    if (!zero && !visit(static_cast<const IntCochain0&>(k))) return;
    more = false;
    for (std::size_t i = n; i > 1 && !more;) {
      --i;
      if (k[Vertex{i}] < radius[i]) {
        ++k[Vertex{i}];
        more = true;
      } else {
        k[Vertex{i}] = -radius[i];
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// QuadraticForm
// ---------------------------------------------------------------------------

QuadraticForm::QuadraticForm(const Graph& g)
    : graph_(g), laplacian_(laplacian_matrix(g)) {
  g.require_connected();
  const std::size_t n = g.vertex_count();
  RatMatrix reduced(n - 1, RatVector(n - 1));
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) reduced[i - 1][j - 1] = laplacian_[i][j];
  }
  reduced_inverse_ = inverse(std::move(reduced));

  distances_.assign(n, -1);
  distances_[0] = 0;
  std::queue<std::size_t> q;
  q.push(0);
  while (!q.empty()) {
    std::size_t x = q.front();
    q.pop();
    for (Arc a : g.arcs_from(Vertex{x})) {
      std::size_t y = g.head(a).index;
      if (distances_[y] >= 0) continue;
      distances_[y] = distances_[x] + 1;
      q.push(y);
    }
  }
}

void require_degree_zero(const RatCochain0& eta) {
  if (degree(eta) != Rational(0)) {
    throw DomainError("cochain has degree " + degree(eta).to_string() +
                      ", expected 0");
  }
}

RatCochain0 QuadraticForm::potential(const RatCochain0& eta) const {
  const std::size_t n = graph_.vertex_count();
  if (eta.size() != n) throw std::invalid_argument("potential: size");
  require_degree_zero(eta);
  RatCochain0 g(n);
  for (std::size_t i = 1; i < n; ++i) {
    Rational s(0);
    for (std::size_t j = 1; j < n; ++j) {
      s += reduced_inverse_[i - 1][j - 1] * eta[Vertex{j}];
    }
    g[Vertex{i}] = s;
  }
  return g;
}

Rational QuadraticForm::operator()(const RatCochain0& eta) const {
  return pairing(potential(eta), eta);
}

Rational QuadraticForm::bilinear(const RatCochain0& a,
                                 const RatCochain0& b) const {
  return pairing(potential(a), b);
}

bool QuadraticForm::in_lattice(const RatCochain0& eta) const {
  for (const Rational& x : potential(eta).values()) {
    if (!x.is_integer()) return false;
  }
  return true;
}

Rational QuadraticForm::lattice_norm(const IntCochain0& k) const {
  std::int64_t s = 0;
  for (Edge e : graph_.edges()) {
    std::int64_t diff = checked_sub(k[graph_.head(e)], k[graph_.tail(e)]);
    s = checked_add(s, checked_mul(diff, diff));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Voronoi cells
// ---------------------------------------------------------------------------

const char* to_string(Placement p) {
  switch (p) {
    case Placement::kInterior:
      return "interior";
    case Placement::kBoundary:
      return "boundary";
    case Placement::kOutside:
      return "outside";
  }
  return "?";
}

Placement voronoi_placement(const QuadraticForm& qf, const RatCochain0& mu) {
  const std::size_t n = qf.graph().vertex_count();
  const Rational q_mu = qf(mu);  // also checks the degree
  if (q_mu == Rational(0)) return Placement::kInterior;

  bool boundary = false;
  bool outside = false;
  auto test = [&](const IntCochain0& k) {
    const Rational lhs = Rational(2) * pairing(mu, to_rational(k));
    const Rational rhs = qf.lattice_norm(k);
    if (lhs > rhs) {
      outside = true;
      return false;
    }
    if (lhs == rhs) boundary = true;
    return true;
  };

  // Cheap pass over {-1, 0, 1} coordinates, which contain the cut vectors.
  for_each_box_point(std::vector<std::int64_t>(n, 1), test);
  if (outside) return Placement::kOutside;

  // Exact pass: q(mu - lambda) > q(mu) once q(lambda) > 4 q(mu), and
  // |k(v)|^2 <= dist(v0, v) * q(lambda) along a shortest path.
  const Rational bound = Rational(4) * q_mu;
  std::vector<std::int64_t> radius(n, 0);
  for (std::size_t v = 1; v < n; ++v) {
    radius[v] = isqrt((Rational(qf.distances()[v]) * bound).floor());
  }
  boundary = false;
  for_each_box_point(radius, [&](const IntCochain0& k) {
    if (qf.lattice_norm(k) > bound) return true;
    return test(k);
  });
  if (outside) return Placement::kOutside;
  return boundary ? Placement::kBoundary : Placement::kInterior;
}

bool vor_member(const QuadraticForm& qf, const RatCochain0& eta,
                const RatCochain0& beta) {
  if (!qf.in_lattice(beta)) {
    throw DomainError("center is not a point of the Laplacian lattice");
  }
  return voronoi_placement(qf, eta - beta) != Placement::kOutside;
}

// ---------------------------------------------------------------------------
// Mixed tiles
// ---------------------------------------------------------------------------

std::optional<Tile> mixed_tile(const SlopeContext& ctx, const IntCochain0& f) {
  if (ctx.scale() != 1) throw DomainError("mixed tiles need scale 1");
  const Graph& g = ctx.graph();
  Tile t;
  t.kind = Tile::Kind::kMixed;
  t.f = f;
  t.slope = dslope(ctx, f);
  t.subgraph_mask = integral_mask(t.slope);
  UnionFind uf(g.vertex_count());
  for (Edge e : g.edges()) {
    if (t.subgraph_mask[e.index]) uf.unite(g.tail(e).index, g.head(e).index);
  }
  if (uf.set_count() != 1) return std::nullopt;
  t.center = d_star(g, to_rational(t.slope));
  return t;
}

namespace {

class TileOracle {
 public:
  explicit TileOracle(const SlopeContext& ctx) : ctx_(ctx) {}

  // nullopt when G_f is disconnected or eta is outside the tile.
  std::optional<TileHit> test(const IntCochain0& f, const RatCochain0& eta) {
    auto tile = mixed_tile(ctx_, f);
    if (!tile) {
      ++disconnected_;
      return std::nullopt;
    }
    const QuadraticForm& qf = form(tile->subgraph_mask);
    Placement p = voronoi_placement(qf, eta - tile->center);
    if (p == Placement::kOutside) return std::nullopt;
    return TileHit{std::move(*tile), p};
  }

  std::size_t disconnected() const { return disconnected_; }

 private:
  const QuadraticForm& form(const std::vector<bool>& mask) {
    auto it = forms_.find(mask);
    if (it == forms_.end()) {
      it = forms_
               .emplace(mask, std::make_unique<QuadraticForm>(
                                  ctx_.graph().spanning_subgraph(mask)))
               .first;
    }
    return *it->second;
  }

  const SlopeContext& ctx_;
  std::map<std::vector<bool>, std::unique_ptr<QuadraticForm>> forms_;
  std::size_t disconnected_ = 0;
};

IntCochain0 estimate_f(const SlopeContext& ctx, const RatCochain0& eta) {
  // Solve the 1/l-weighted Laplacian against eta - d*(m / l).
  const Graph& g = ctx.graph();
  const std::size_t n = g.vertex_count();
  RatMatrix lw(n, RatVector(n, Rational(0)));
  RatCochain1 m_over_l(g.edge_count());
  for (Edge e : g.edges()) {
    Rational w(1, ctx.length(e));
    std::size_t t = g.tail(e).index;
    std::size_t h = g.head(e).index;
    lw[t][t] += w;
    lw[h][h] += w;
    lw[t][h] -= w;
    lw[h][t] -= w;
    m_over_l[e] = ctx.twist()[e] * w;
  }
  RatCochain0 rhs = eta - d_star(g, m_over_l);
  RatMatrix reduced(n - 1, RatVector(n - 1));
  RatVector b(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) reduced[i - 1][j - 1] = lw[i][j];
    b[i - 1] = rhs[Vertex{i}];
  }
  RatVector phi = solve_rational(std::move(reduced), std::move(b));
  IntCochain0 f(n);
  for (std::size_t i = 1; i < n; ++i) f[Vertex{i}] = round_nearest(phi[i - 1]);
  return f;
}

}  // namespace

TileSearch mixed_tile_of(const SlopeContext& ctx, const RatCochain0& eta,
                         std::int64_t max_radius) {
  const Graph& g = ctx.graph();
  g.require_connected();
  if (eta.size() != g.vertex_count()) {
    throw std::invalid_argument("mixed_tile_of: size");
  }
  require_degree_zero(eta);

  TileSearch search;
  search.estimate = estimate_f(ctx, eta);
  TileOracle oracle(ctx);
  std::map<std::vector<std::int64_t>, std::optional<TileHit>> memo;

  auto scan = [&](std::int64_t radius) {
    std::vector<std::int64_t> box(g.vertex_count(), radius);
    auto visit = [&](const IntCochain0& offset) {
      IntCochain0 f = search.estimate + offset;
      auto [it, fresh] = memo.try_emplace(f.values());
      if (fresh) it->second = oracle.test(f, eta);
      return true;
    };
    visit(IntCochain0(g.vertex_count()));  // the box walk skips 0
    for_each_box_point(box, visit);
    bool found = false;
    for (const auto& [key, hit] : memo) found = found || hit.has_value();
    return found;
  };

  std::int64_t radius = 1;
  while (!scan(radius)) {
    if (radius >= max_radius) {
      throw SearchExhausted(
          "no mixed tile contains the point within radius " +
          std::to_string(radius) + " of the estimate (" +
          std::to_string(oracle.disconnected()) +
          " candidates skipped for a disconnected subgraph)");
    }
    radius *= 2;
  }
  radius *= 2;
  scan(radius);

  search.radius = radius;
  search.disconnected_skipped = oracle.disconnected();
  for (auto& [key, hit] : memo) {
    if (hit) search.hits.push_back(*hit);
  }
  return search;
}

std::vector<RatCochain0> tile_centers(const SlopeContext& ctx,
                                      std::int64_t f_radius) {
  std::vector<RatCochain0> centers;
  for_each_in_window(ctx.graph(), SlopeWindow{1, f_radius},
                     [&](std::int64_t, const IntCochain0& f) {
                       if (auto t = mixed_tile(ctx, f)) {
                         centers.push_back(t->center);
                       }
                     });
  std::sort(centers.begin(), centers.end(), values_less);
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  return centers;
}

TilingCertificate certify_tiling(const SlopeContext& ctx,
                                 const std::vector<RatCochain0>& samples) {
  TilingCertificate cert;
  for (const RatCochain0& eta : samples) {
    ++cert.samples;
    TileSearch s;
    try {
      s = mixed_tile_of(ctx, eta);
    } catch (const SearchExhausted&) {
      ++cert.uncovered;
      continue;
    }
    std::size_t interior = 0;
    for (const TileHit& h : s.hits) {
      if (h.placement == Placement::kInterior) ++interior;
    }
    if (s.hits.size() == 1 && interior == 0) ++cert.boundary_only;
    if (s.hits.size() > 1) ++cert.boundary_points;
    // Strictly inside one tile yet also in another means overlapping
    // interiors.
    if (s.hits.size() > 1 && interior > 0) ++cert.double_interior;
  }
  return cert;
}

}  // namespace vlimits
