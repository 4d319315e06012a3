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


// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "vlimits/census.hpp"
#include "vlimits/chipfire.hpp"
#include "vlimits/io.hpp"
#include "vlimits/regen.hpp"
#include "vlimits/tilings.hpp"
#include "vlimits/toric.hpp"
#include "vlimits/verify.hpp"

namespace vlimits {
namespace {

using testing::cochain;
using testing::GraphPtr;

struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no time limit
  std::function<void(Outcome&)> run;
};

std::string data(const char* name) {
  return std::string(VLIMITS_DATA_DIR) + "/" + name;
}

BigRational random_unit(Rng& rng) {
  std::int64_t p = rng.uniform(1, 12);
  if (rng.coin()) p = -p;
  return BigRational(p) / BigRational(rng.uniform(1, 12));
}

CharacterPair random_pair(const Graph& g, Rng& rng) {
  CharacterPair ch = CharacterPair::trivial(g);
  for (auto& x : ch.a) x = random_unit(rng);
  for (auto& x : ch.b) x = random_unit(rng);
  return ch;
}

std::size_t half_edges(const CellIndex& cell) {
  std::size_t k = 0;
  for (const HalfInt& x : cell.values()) k += x.is_integer() ? 0 : 1;
  return k;
}

std::int64_t degree_sum(const IntCochain0& f) {
  std::int64_t s = 0;
  for (std::int64_t x : f.values()) s += x;
  return s;
}

void expect_degrees(Outcome& o, const Census& c, const IntCochain0& bdeg,
                    const std::string& label) {
  const std::int64_t total = degree_sum(bdeg);
  for (const LimitDescriptor& d : c.cells) {
    o.expect(degree_sum(d.degrees) +
                     static_cast<std::int64_t>(half_edges(d.cell)) ==
                 total,
             label + ": degree at cell (" + cell_string(d.cell) + ")");
  }
}

// 1
void kirchhoff(Outcome& o) {
  for (const GraphPtr& g : {testing::b2(), testing::k2(), testing::triangle(),
                            testing::theta(), testing::k4()}) {
    const std::int64_t trees = oracle::tree_count(*g);
    o.expect(spanning_tree_count(*g) == trees, "fixture tree count");
    o.expect(lattice_index(*g) == trees, "fixture lattice index");
  }
  Rng rng(1001);
  for (int t = 0; t < 50; ++t) {
    auto g = testing::random_multigraph(rng, 6, 5);
    const std::int64_t trees = oracle::tree_count(*g);
    o.expect(spanning_tree_count(*g) == trees, "random tree count");
    o.expect(lattice_index(*g) == trees, "random lattice index");
  }
}

// 2
void extension_oracle(Outcome& o) {
  using Key = std::tuple<std::int64_t, std::vector<std::int64_t>, std::int64_t,
                         std::int64_t>;
  std::map<Key, std::vector<std::vector<std::int64_t>>> memo;
  auto search = [&](std::int64_t n, const std::vector<std::int64_t>& charge,
                    std::int64_t a, std::int64_t b) -> const auto& {
    Key k{n, charge, a, b};
    auto it = memo.find(k);
    if (it == memo.end()) {
      it = memo.emplace(k, oracle::chain_extensions(n, charge, a, b)).first;
    }
    return it->second;
  };

  for (const GraphPtr& g : {testing::k2(), testing::b2(), testing::theta(),
                            testing::p3(), testing::triangle()}) {
    const std::size_t ne = g->edge_count();
    const std::size_t nv = g->vertex_count();
    std::vector<std::int64_t> lengths(ne, 1);
    for (bool more_l = true; more_l;) {
      auto sub = std::make_shared<const Subdivision>(g, lengths, 1);
      // Chip position per edge; 0 means no chip.
      std::vector<std::int64_t> chips(ne, 0);
      for (bool more_d = true; more_d;) {
        Divisor dv(sub);
        for (Edge e : g->edges()) {
          if (chips[e.index] > 0) dv[sub->node(e, chips[e.index])] = 1;
        }
        IntCochain0 f(nv);
        for (Vertex v : g->vertices()) f[v] = -3;
        for (bool more_f = true; more_f;) {
          const ExtendedFunction ext = canonical_extension(f, dv);
          bool ok = is_admissible(dv + principal_divisor(ext));
          for (Vertex v : g->vertices()) ok = ok && ext.at(v) == f[v];
          for (Edge e : g->edges()) {
            const std::int64_t segs = sub->segments(e);
            std::vector<std::int64_t> charge, mine;
            for (std::int64_t i = 1; i < segs; ++i) {
              charge.push_back(dv[sub->node(e, i)]);
              mine.push_back(ext[sub->node(e, i)]);
            }
            const auto& all = search(segs, charge, f[g->tail(e)], f[g->head(e)]);
            ok = ok && all.size() == 1 && all[0] == mine;
          }
          o.expect(ok, "extension on " + std::to_string(nv) + " vertices");
          more_f = false;
          for (std::size_t i = 0; i < nv && !more_f; ++i) {
            if (f[Vertex{i}] < 3) {
              ++f[Vertex{i}];
              more_f = true;
            } else {
              f[Vertex{i}] = -3;
            }
          }
        }
        more_d = false;
        for (std::size_t i = 0; i < ne && !more_d; ++i) {
          if (chips[i] + 1 < lengths[i]) {
            ++chips[i];
            more_d = true;
          } else {
            chips[i] = 0;
          }
        }
      }
      more_l = false;
      for (std::size_t i = 0; i < ne && !more_l; ++i) {
        if (lengths[i] < 3) {
          ++lengths[i];
          more_l = true;
        } else {
          lengths[i] = 1;
        }
      }
    }
  }
}

// 3
void chip_algebra(Outcome& o) {
  Rng rng(1003);
  for (int t = 0; t < 1000; ++t) {
    auto g = testing::random_multigraph(rng, 5, 4);
    auto sub = std::make_shared<const Subdivision>(
        g, testing::random_lengths(*g, rng, 3), rng.uniform(1, 3));
    const Divisor dv = random_admissible(sub, rng);
    const auto pick = [&] {
      return Vertex{static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(g->vertex_count()) - 1))};
    };
    const Vertex u = pick(), w = pick();
    o.expect(fire(fire(dv, u), w) == fire(fire(dv, w), u), "commutativity");
    Divisor all = dv;
    for (Vertex v : g->vertices()) all = fire(all, v);
    o.expect(all == dv, "full firing");
  }
}

// 4
void separation(Outcome& o) {
  const std::vector<SlopeContext> contexts{
      testing::context(testing::b2(), {1, 1}),
      testing::context(testing::theta(), {1, 1, 1}),
      testing::context(testing::theta(), {1, 2, 3})};
  const SlopeWindow window{4, 6};
  for (const SlopeContext& ctx : contexts) {
    const SeparationReport r = h1_separation_check(ctx, window);
    o.expect(r.passed, "library separation check");
    std::set<HalfCochain1> slopes;
    for_each_in_window(ctx.graph(), window,
                       [&](std::int64_t n, const IntCochain0& f) {
                         slopes.insert(dslope(ctx.with_scale(n), f));
                       });
    o.expect(slopes.size() == r.distinct_slopes, "distinct slope count");
    for (auto i = slopes.begin(); i != slopes.end(); ++i) {
      for (auto j = std::next(i); j != slopes.end(); ++j) {
        o.expect(!oracle::in_h1(ctx.graph(), *i - *j),
                 "two slopes differ by a cycle");
      }
    }
  }
}

// 5
void cycle_equations(Outcome& o) {
  Rng rng(1005);
  const std::vector<SlopeContext> contexts{
      testing::context(testing::b2(), {1, 1}),
      testing::context(testing::b2(), {2, 3}),
      testing::context(testing::theta(), {1, 2, 3}),
      testing::context(testing::triangle(), {1, 1, 1})};
  for (const SlopeContext& ctx : contexts) {
    const Graph& g = ctx.graph();
    const IntCochain0 bdeg(g.vertex_count());
    for (int t = 0; t < 100; ++t) {
      const CharacterPair ch = random_pair(g, rng);
      const Census c = y_census(ctx, ch, bdeg, TruncationWindow{2, 3, 2});
      for (const LimitDescriptor& d : c.cells) {
        bool ok = check_cycle_equations(g, ch, d.point, 1);
        for (const IntCochain1& gamma :
             oracle::small_cycles(g, integral_mask(d.cell))) {
          ok = ok && oracle::cycle_equation_holds(g, ch, d.point, gamma);
        }
        o.expect(ok, "cycle equations at (" + cell_string(d.cell) + ")");
      }
    }
  }
}

// 6
void degree_conservation(Outcome& o) {
  Rng rng(1006);
  std::vector<std::pair<SlopeContext, IntCochain0>> runs;
  runs.emplace_back(testing::context(testing::b2(), {1, 1}), cochain({1, 1}));
  runs.emplace_back(testing::context(testing::b2(), {2, 3}), cochain({0, 3}));
  runs.emplace_back(testing::context(testing::theta(), {1, 2, 3}),
                    cochain({-1, 2}));
  runs.emplace_back(testing::context(testing::triangle(), {2, 1, 1}),
                    cochain({1, 0, 1}));
  runs.emplace_back(testing::context(testing::k4(), {1, 1, 1, 1, 1, 1}),
                    cochain({0, 0, 0, 3}));
  for (int t = 0; t < 40; ++t) {
    auto g = testing::random_multigraph(rng, 4, 3);
    IntCochain0 bdeg(g->vertex_count());
    for (Vertex v : g->vertices()) bdeg[v] = rng.uniform(-3, 3);
    runs.emplace_back(SlopeContext(g, testing::random_lengths(*g, rng, 3),
                                   testing::random_twist(*g, rng, 2), 1),
                      bdeg);
  }
  for (const auto& [ctx, bdeg] : runs) {
    const CharacterPair ch = CharacterPair::trivial(ctx.graph());
    const TruncationWindow w{2, 2, 3};
    expect_degrees(o, y_census(ctx, ch, bdeg, w), bdeg, "slope census");
    expect_degrees(o, regen_census(RegenContext{ctx, bdeg, ch}, w), bdeg,
                   "regeneration census");
  }
}

// 7
void regeneration(Outcome& o) {
  Rng rng(1007);
  for (int t = 0; t < 500; ++t) {
    auto g = testing::random_multigraph(rng, 4, 3);
    const std::int64_t n = rng.uniform(1, 3);
    const SlopeContext base(g, testing::random_lengths(*g, rng, 3),
                            testing::random_twist(*g, rng, 2), 1);
    const SlopeContext ctx = base.with_scale(n);
    IntCochain0 bdeg(g->vertex_count());
    for (Vertex v : g->vertices()) bdeg[v] = rng.uniform(-2, 2);
    const IntCochain0 f = random_cochain(*g, rng, 5);
    const IntCochain0 h = random_cochain(*g, rng, 5);

    const RegenerationReport r = verify_claim1(ctx, bdeg, f, h);
    o.expect(r.divisors_agree, "regenerated divisor");
    o.expect(r.floors_agree, "floor identity");
    const Divisor df = limit_divisor(ctx, bdeg, f);
    const Divisor dh = limit_divisor(ctx, bdeg, h);
    o.expect(check_chip_twist(ctx, f, twist_of_divisor(df)), "twist from chips");
    o.expect(check_zero_pullback(base, bdeg, n), "pullback at f = 0");

    IntCochain0 moved(g->vertex_count());
    for (Vertex v : g->vertices()) moved[v] = dh.at(v) - df.at(v);
    const IntCochain0 lap =
        oracle::principal_on_base(canonical_extension(h - f, df));
    o.expect(lap == moved, "chip moves on vertices");
    o.expect(twister_restriction_degrees(df, h - f) == lap,
             "twister degrees against the base oracle");
  }
}

// 8
RatCochain0 random_degree_zero(const Graph& g, Rng& rng) {
  std::vector<Rational> v(g.vertex_count());
  Rational sum(0);
  for (std::size_t i = 1; i < v.size(); ++i) {
    v[i] = Rational(rng.uniform(-36, 36), rng.uniform(1, 12));
    sum = sum + v[i];
  }
  v[0] = -sum;
  return RatCochain0(std::move(v));
}

void tiling(Outcome& o) {
  Rng rng(1008);
  const std::vector<SlopeContext> contexts{
      testing::context(testing::b2(), {2, 3}),
      testing::context(testing::b2(), {1, 1}),
      testing::context(testing::triangle(), {1, 1, 1})};
  for (const SlopeContext& ctx : contexts) {
    std::vector<RatCochain0> samples;
    for (int t = 0; t < 200; ++t) {
      samples.push_back(random_degree_zero(ctx.graph(), rng));
    }
    const TilingCertificate cert = certify_tiling(ctx, samples);
    o.expect(cert.samples == 200, "sample count");
    o.expect(cert.uncovered == 0, "uncovered samples");
    o.expect(cert.boundary_only == 0, "lone boundary hits");
    o.expect(cert.double_interior == 0, "overlapping interiors");
  }

  // Top cells against tile centers over the same f box.
  const std::int64_t box = 3;
  for (const SlopeContext& ctx :
       {testing::context(testing::b2(), {1, 1}),
        testing::context(testing::b2(), {2, 3}),
        testing::context(testing::triangle(), {1, 1, 1})}) {
    const Graph& g = ctx.graph();
    const Census c = y_census(ctx, CharacterPair::trivial(g),
                              IntCochain0(g.vertex_count()),
                              TruncationWindow{1, box, 4 * box + 4});
    std::set<std::vector<Rational>> from_cells;
    std::size_t top = 0;
    for (const LimitDescriptor& d : c.cells) {
      if (d.orbit_dim + 1 != g.vertex_count()) continue;
      ++top;
      from_cells.insert(d_star(g, to_rational(d.cell)).values());
    }
    const std::vector<RatCochain0> centers = tile_centers(ctx, box);
    o.expect(top > 0, "some top cells");
    o.expect(from_cells.size() == top, "distinct top cells give distinct centers");
    std::set<std::vector<Rational>> from_tiles;
    for (const RatCochain0& center : centers) from_tiles.insert(center.values());
    o.expect(from_tiles == from_cells, "top cells match tile centers");
    for (const RatCochain0& center : centers) {
      const TileSearch s = mixed_tile_of(ctx, center);
      o.expect(s.hits.size() == 1 && s.hits[0].tile.center == center &&
                   s.hits[0].placement == Placement::kInterior,
               "a center lies only in its own tile");
    }
  }
}

// 9
void census_shape(Outcome& o) {
  auto g = testing::b2();
  const Census c =
      y_census(testing::context(g, {1, 1}), CharacterPair::trivial(*g),
               cochain({0, 0}), TruncationWindow{2, 5, 2});
  o.expect(c.cells.size() == 9, "nine cells");
  o.expect(!c.diagnostics.window_too_small, "window large enough");
  o.expect(c.diagnostics.connected, "connected");
  o.expect(c.hasse.size() + 1 == c.cells.size(), "tree-sized Hasse diagram");
  std::vector<int> valence(c.cells.size());
  for (auto [up, low] : c.hasse) {
    ++valence[up];
    ++valence[low];
  }
  std::size_t ends = 0;
  for (int v : valence) {
    o.expect(v == 1 || v == 2, "path valence");
    ends += v == 1 ? 1 : 0;
  }
  o.expect(ends == 2, "two ends");
  std::set<std::size_t> classes;
  for (const LimitDescriptor& d : c.cells) {
    classes.insert(d.h1_class);
    if (cell_dimension(d.cell) == g->edge_count()) {
      o.expect(d.orbit_dim == g->vertex_count() - 1, "top orbit dimension");
      o.expect(stabilizer_dimension(*g, d.point) == 1, "top stabilizer");
    }
  }
  o.expect(classes.size() == c.cells.size(), "singleton classes");
}

// 10
void determinism(Outcome& o) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "vlimits_acceptance";
  fs::create_directories(dir);
  for (const char* name : {"b2.json", "theta.json", "triangle.json"}) {
    std::vector<std::string> outputs;
    for (int run = 0; run < 2; ++run) {
      const fs::path json = dir / ("run" + std::to_string(run) + ".json");
      const fs::path dot = dir / ("run" + std::to_string(run) + ".dot");
      const std::string cmd = std::string("\"") + VLIMITS_BINARY +
                              "\" limits \"" + data(name) +
                              "\" --nmax 2 --fbox 3 --window 2 --seed 42"
                              " --json \"" + json.string() + "\" --dot \"" +
                              dot.string() + "\" 2>/dev/null";
      o.expect(std::system(cmd.c_str()) == 0, std::string("run on ") + name);
      outputs.push_back(read_file(json.string()) + "\n--\n" +
                        read_file(dot.string()));
    }
    o.expect(outputs[0] == outputs[1], std::string("identical bytes on ") + name);
    o.expect(outputs[0].size() > 10, "nonempty output");
  }
  fs::remove_all(dir);
}

}  // namespace
}  // namespace vlimits

int main() {
  using vlimits::Criterion;
  const std::vector<Criterion> criteria{
      {1, "Kirchhoff consistency", 1, vlimits::kirchhoff},
      {2, "canonical extension against exhaustive search", 30,
       vlimits::extension_oracle},
      {3, "chip-firing commutativity and full firing", 10,
       vlimits::chip_algebra},
      {4, "slope separation modulo cycles", 30, vlimits::separation},
      {5, "orbit points satisfy the cycle equations", 30,
       vlimits::cycle_equations},
      {6, "degree conservation", 0, vlimits::degree_conservation},
      {7, "regeneration cross-validation", 60, vlimits::regeneration},
      {8, "tiling certificate and tile centers", 60, vlimits::tiling},
      {9, "census shape for the banana graph", 5, vlimits::census_shape},
      {10, "determinism of vlimits limits", 0, vlimits::determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    vlimits::Outcome o;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool slow = c.budget_seconds > 0 && seconds > c.budget_seconds;
    const bool ok = error.empty() && o.failures == 0 && o.checks > 0 && !slow;
    if (!ok) ++failed;
    char timing[64];
    if (c.budget_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", seconds,
                    c.budget_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " ("
              << o.checks << " checks, " << o.failures << " failures, "
              << timing << ")";
    if (!error.empty()) std::cout << " error: " << error;
    if (o.failures > 0) std::cout << " first failure: " << o.first_failure;
    if (slow) std::cout << " over time budget";
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
