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

#include "vlimits/verify.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "vlimits/census.hpp"
#include "vlimits/errors.hpp"
#include "vlimits/regen.hpp"
#include "vlimits/tilings.hpp"
#include "vlimits/toric.hpp"

namespace vlimits {
namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) {
      ++r_.failures;
      if (r_.messages.size() < 20) r_.messages.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { r_.messages.push_back(what); }

 private:
  SuiteResult& r_;
};

// Smallest scale n with n * twist integral.
std::int64_t base_scale(const RatCochain1& twist) {
  std::int64_t n = 1;
  for (const Rational& m : twist.values()) n = std::lcm(n, m.den());
  return n;
}

bool integral_twist(const GraphDocument& doc) {
  return base_scale(doc.twist) == 1;
}

// Largest f-box radius whose box has at most `budget` points.
std::int64_t radius_for(const Graph& g, std::int64_t budget,
                        std::int64_t cap) {
  std::int64_t r = 1;
  while (r < cap) {
    std::int64_t points = 1;
    for (std::size_t i = 1; i < g.vertex_count(); ++i) points *= 2 * r + 3;
    if (points > budget) break;
    ++r;
  }
  return r;
}

IntCochain0 bdeg_of(const GraphDocument& doc) {
  return doc.bdeg ? *doc.bdeg : IntCochain0(doc.graph->vertex_count());
}

CharacterPair characters_of(const GraphDocument& doc) {
  CharacterPair ch = CharacterPair::trivial(*doc.graph);
  if (doc.a) ch.a = *doc.a;
  if (doc.b) ch.b = *doc.b;
  return ch;
}

BigRational random_unit(Rng& rng) {
  std::int64_t p = rng.uniform(1, 9);
  if (rng.coin()) p = -p;
  return BigRational(p) / BigRational(rng.uniform(1, 9));
}

CharacterPair random_characters(const Graph& g, Rng& rng) {
  CharacterPair ch = CharacterPair::trivial(g);
  for (auto& x : ch.a) x = random_unit(rng);
  for (auto& x : ch.b) x = random_unit(rng);
  return ch;
}

void graph_suite(const GraphDocument& doc, Rng& rng, Recorder& rec) {
  const Graph& g = *doc.graph;
  const std::int64_t trees = spanning_tree_count(g);
  rec.check(lattice_index(g) == trees, "lattice index equals tree count");
  std::int64_t product = 1;
  for (std::int64_t x : jacobian_invariant_factors(g)) product *= x;
  rec.check(product == trees, "Jacobian order equals tree count");

  const CycleBasis basis = cycle_basis(g);
  rec.check(basis.size() == g.genus(), "cycle basis has genus many cycles");
  rec.check(basis.is_saturated(), "cycle basis spans H1 over Z");
  for (const IntCochain1& c : basis.cycles) {
    rec.check(d_star(g, c) == IntCochain0(g.vertex_count()),
              "basis cycle is closed");
  }
  for (int t = 0; t < 25; ++t) {
    IntCochain0 f(g.vertex_count());
    IntCochain1 h(g.edge_count());
    for (Vertex v : g.vertices()) f[v] = rng.uniform(-5, 5);
    for (Edge e : g.edges()) h[e] = rng.uniform(-5, 5);
    rec.check(pairing(d(g, f), h) == pairing(f, d_star(g, h)),
              "d and d* are adjoint");
    rec.check(degree(laplacian(g, f)) == 0, "Laplacian has degree zero");
  }
}

void chipfire_suite(const GraphDocument& doc, Rng& rng, Recorder& rec) {
  const Graph& g = *doc.graph;
  for (std::int64_t n = 1; n <= 2; ++n) {
    auto sub = std::make_shared<const Subdivision>(doc.graph, doc.lengths, n);
    for (int t = 0; t < 40; ++t) {
      const Divisor dv = random_admissible(sub, rng);
      const IntCochain0 f = random_cochain(g, rng, 3);
      const Divisor moved = dv + principal_divisor(canonical_extension(f, dv));
      rec.check(is_admissible(moved), "canonical extension keeps admissibility");
      rec.check(total_degree(moved) == total_degree(dv),
                "principal divisors have degree zero");

      const Vertex u{static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(g.vertex_count()) - 1))};
      const Vertex w{static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(g.vertex_count()) - 1))};
      rec.check(fire(fire(dv, u), w) == fire(fire(dv, w), u),
                "chip-firing moves commute");
      Divisor all = dv;
      for (Vertex v : g.vertices()) all = fire(all, v);
      rec.check(all == dv, "firing every vertex is the identity");
    }
  }
}

void slopes_suite(const GraphDocument& doc, Rng& rng, Recorder& rec) {
  const Graph& g = *doc.graph;
  const std::int64_t n0 = base_scale(doc.twist);
  for (int t = 0; t < 60; ++t) {
    const std::int64_t n = n0 * rng.uniform(1, 3);
    const SlopeContext ctx = doc.slope_context(n);
    const IntCochain0 f = random_cochain(g, rng, 5);
    const HalfCochain1 s = dslope(ctx, f);
    for (Edge e : g.edges()) {
      for (Arc a : {Arc{e, false}, Arc{e, true}}) {
        const std::int64_t i = i_index(ctx, f, a);
        const std::int64_t big_n = ctx.segments(e);
        rec.check(i > 0 && i <= big_n, "i_index lies in (0, N]");
        rec.check(s.at(a).is_integer() == (i == big_n),
                  "slope is integral exactly when i = N");
        const std::int64_t x = f[g.head(a)] - f[g.tail(a)] + ctx.scaled_twist(a);
        rec.check(x == big_n * delta(ctx, f, a) + big_n - i,
                  "i_index decomposes the scaled difference");
      }
      rec.check(s[e].twice() ==
                    delta(ctx, f, Arc{e, false}) - delta(ctx, f, Arc{e, true}),
                "slope is the half difference of floor slopes");
    }
    rec.check(dslope(ctx.with_scale(2 * n), 2 * f) == s,
              "slopes are invariant under (n, f) -> (2n, 2f)");
  }
  if (n0 != 1) {
    rec.note("separation check skipped: twist is not integral");
    return;
  }
  const SlopeWindow w{3, radius_for(g, 150, 4)};
  const SeparationReport rep = h1_separation_check(doc.slope_context(1), w);
  rec.check(rep.passed, "distinct slopes never differ by a nonzero cycle");
}

void tilings_suite(const GraphDocument& doc, Rng& rng, Recorder& rec) {
  const Graph& g = *doc.graph;
  if (!integral_twist(doc)) {
    rec.note("skipped: tilings need an integral twist");
    return;
  }
  if (g.vertex_count() > 4) {
    rec.note("skipped: tiling certificate limited to 4 vertices");
    return;
  }
  if (g.vertex_count() < 2) {
    rec.note("skipped: H_0 is zero-dimensional");
    return;
  }
  const SlopeContext ctx = doc.slope_context(1);
  std::vector<RatCochain0> samples;
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> v(g.vertex_count());
    Rational sum(0);
    for (std::size_t i = 1; i < v.size(); ++i) {
      v[i] = Rational(rng.uniform(-12, 12), 4);
      sum = sum + v[i];
    }
    v[0] = -sum;
    samples.emplace_back(std::move(v));
  }
  const TilingCertificate cert = certify_tiling(ctx, samples);
  rec.check(cert.uncovered == 0, "every sample lies in a mixed tile");
  rec.check(cert.boundary_only == 0,
            "a point in a single tile is interior to it");
  rec.check(cert.double_interior == 0, "tile interiors are disjoint");
  for (const RatCochain0& c : tile_centers(ctx, 1)) {
    const TileSearch s = mixed_tile_of(ctx, c);
    rec.check(s.hits.size() == 1 && s.hits[0].tile.center == c &&
                  s.hits[0].placement == Placement::kInterior,
              "a tile center lies only in its own tile");
  }
}

void toric_suite(const GraphDocument& doc, Rng& rng, Recorder& rec) {
  const Graph& g = *doc.graph;
  const std::int64_t n0 = base_scale(doc.twist);
  const IntCochain0 bdeg = bdeg_of(doc);
  const std::int64_t bsum = degree(bdeg);
  const TruncationWindow window{n0 == 1 ? 2 : 1, radius_for(g, 120, 3), 2};
  const SlopeContext ctx = doc.slope_context(n0);

  std::vector<CharacterPair> pairs{characters_of(doc)};
  for (int t = 0; t < 3; ++t) pairs.push_back(random_characters(g, rng));
  for (const CharacterPair& ch : pairs) {
    Census census;
    if (n0 == 1) {
      census = y_census(ctx, ch, bdeg, window);
    } else {
      // Only multiples of the base scale are meaningful.
      std::vector<CensusSample> samples;
      for_each_in_window(g, SlopeWindow{1, window.f_radius},
                         [&](std::int64_t, const IntCochain0& f) {
                           CellIndex cell = dslope(ctx, f);
                           IntCochain0 deg = descriptor_degrees(g, bdeg, cell);
                           samples.push_back({n0, f, cell, deg});
                         });
      census = assemble_census(g, ch, window, samples);
    }
    for (const LimitDescriptor& dsc : census.cells) {
      rec.check(check_cycle_equations(g, ch, dsc.point),
                "orbit point satisfies its cycle equations");
      std::int64_t half = 0;
      for (const HalfInt& x : dsc.cell.values()) half += x.is_integer() ? 0 : 1;
      rec.check(degree(dsc.degrees) + half == bsum, "degree is conserved");
      rec.check(dsc.orbit_dim + stabilizer_dimension(g, dsc.point) ==
                    g.vertex_count(),
                "orbit and stabilizer dimensions add up");
      const OrbitPoint moved = torus_act(
          g, std::vector<BigRational>(g.vertex_count(), random_unit(rng)),
          dsc.point);
      rec.check(moved == dsc.point, "diagonal torus acts trivially");
    }
    const CycleBasis basis = cycle_basis(g);
    for (std::size_t i = 0; i < census.cells.size(); ++i) {
      for (std::size_t j = i + 1; j < census.cells.size(); ++j) {
        const bool same =
            census.cells[i].h1_class == census.cells[j].h1_class;
        rec.check(same == in_h1(g, basis, census.cells[i].cell -
                                              census.cells[j].cell),
                  "H1 classes match cycle differences");
      }
    }
  }
}

void regen_suite(const GraphDocument& doc, Rng& rng, Recorder& rec) {
  const Graph& g = *doc.graph;
  if (!integral_twist(doc)) {
    rec.note("skipped: regeneration needs an integral twist");
    return;
  }
  const IntCochain0 bdeg = bdeg_of(doc);
  for (int t = 0; t < 40; ++t) {
    const std::int64_t n = rng.uniform(1, 3);
    const SlopeContext ctx = doc.slope_context(n);
    const IntCochain0 f = random_cochain(g, rng, 4);
    const IntCochain0 h = random_cochain(g, rng, 4);
    const RegenerationReport r = verify_claim1(ctx, bdeg, f, h);
    rec.check(r.divisors_agree, "D_h = D_f + div(ext(h - f))");
    rec.check(r.floors_agree, "floor identity for composed twisters");

    const Divisor df = limit_divisor(ctx, bdeg, f);
    rec.check(is_admissible(df), "limit divisor is admissible");
    const RatCochain1 p = twist_of_divisor(df);
    rec.check(check_chip_twist(ctx, f, p), "twist of the limit divisor matches i");
    rec.check(twist_of_divisor(pullback(df, 2 * n)) == p,
              "twist is invariant under pullback");

    const IntCochain0 gg = h - f;
    const Divisor div = principal_divisor(canonical_extension(gg, df));
    IntCochain0 oracle(g.vertex_count());
    for (Vertex v : g.vertices()) oracle[v] = div.at(v);
    rec.check(twister_restriction_degrees(df, gg) == oracle,
              "twister degrees match chip-firing");
  }
  for (std::int64_t n = 1; n <= 4; ++n) {
    rec.check(check_zero_pullback(doc.slope_context(1), bdeg, n),
              "limit divisor at f = 0 is a pullback");
  }
  const TruncationWindow window{2, radius_for(g, 60, 2), 2};
  const CharacterPair ch = characters_of(doc);
  const SlopeContext ctx = doc.slope_context(1);
  const Census y = y_census(ctx, ch, bdeg, window);
  const Census re = regen_census(RegenContext{ctx, bdeg, ch}, window);
  rec.check(census_json(g, y) == census_json(g, re) && y.hasse == re.hasse,
            "chip-firing census reproduces the slope census");
}

// std::hash is implementation-defined; seeds must not be.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

using SuiteFn = std::function<void(const GraphDocument&, Rng&, Recorder&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all{
      {"graph", graph_suite},     {"chipfire", chipfire_suite},
      {"slopes", slopes_suite},   {"tilings", tilings_suite},
      {"toric", toric_suite},     {"regen", regen_suite}};
  return all;
}

}  // namespace

Divisor random_admissible(const SubdivisionPtr& sub, Rng& rng,
                          std::int64_t c) {
  Divisor dv(sub);
  const Graph& g = sub->graph();
  for (Vertex v : g.vertices()) dv[sub->node(v)] = rng.uniform(-c, c);
  for (Edge e : g.edges()) {
    const std::int64_t big_n = sub->segments(e);
    if (big_n > 1 && rng.coin()) dv[sub->node(e, rng.uniform(1, big_n - 1))] = 1;
  }
  return dv;
}

IntCochain0 random_cochain(const Graph& g, Rng& rng, std::int64_t r) {
  IntCochain0 f(g.vertex_count());
  for (std::size_t i = 1; i < g.vertex_count(); ++i) {
    f[Vertex{i}] = rng.uniform(-r, r);
  }
  return f;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const GraphDocument& doc,
                      std::uint64_t seed) {
  for (const auto& [suite, fn] : suites()) {
    if (suite != name) continue;
    SuiteResult result;
    result.name = name;
    // Each suite gets its own stream so --suite S matches the full run.
    Rng rng(seed ^ fnv1a(name));
    Recorder rec(result);
    fn(doc, rng, rec);
    return result;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace vlimits
