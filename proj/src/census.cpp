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

#include "vlimits/census.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "vlimits/errors.hpp"
#include "vlimits/union_find.hpp"

namespace vlimits {
namespace {

std::string describe_f(const Graph& g, const IntCochain0& f) {
  std::string s = "(";
  for (Vertex v : g.vertices()) {
    if (v.index > 0) s += ",";
    s += g.vertex_id(v) + "=" + std::to_string(f[v]);
  }
  return s + ")";
}

bool inside_cell_window(const CellIndex& cell, std::int64_t radius,
                        bool strictly) {
  for (const HalfInt& x : cell.values()) {
    const std::int64_t t = x.twice() < 0 ? -x.twice() : x.twice();
    if (strictly ? t >= 2 * radius : t > 2 * radius) return false;
  }
  return true;
}

bool on_f_box_boundary(const IntCochain0& f, std::int64_t radius) {
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f.values()[i] == radius || f.values()[i] == -radius) return true;
  }
  return false;
}

bool connected_by_comparability(const std::vector<const CellIndex*>& cells) {
  if (cells.empty()) return true;
  UnionFind uf(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (cell_contains(*cells[i], *cells[j]) ||
          cell_contains(*cells[j], *cells[i])) {
        uf.unite(i, j);
      }
    }
  }
  return uf.set_count() == 1;
}

}  // namespace

void TruncationWindow::validate() const {
  if (n_max < 1 || f_radius < 1 || cell_radius < 1 || n_step < 1) {
    throw DomainError("window bounds must be positive");
  }
}

IntCochain0 descriptor_degrees(const Graph& g, const IntCochain0& bdeg,
                               const CellIndex& cell) {
  IntCochain0 deg = bdeg;
  for (Vertex v : g.vertices()) {
    for (Arc a : g.arcs_from(v)) deg[v] = checked_add(deg[v], cell.at(a).floor());
  }
  return deg;
}

Census assemble_census(const Graph& g, const CharacterPair& ch,
                       const TruncationWindow& window,
                       const std::vector<CensusSample>& samples) {
  window.validate();
  ch.validate(g);
  const std::vector<BigRational> b_edges = b_edge_values(g, ch);

  Census census;
  std::size_t boundary_hits = 0;
  std::map<CellIndex, std::size_t> seen;
  for (const CensusSample& s : samples) {
    if (!inside_cell_window(s.cell, window.cell_radius, false)) continue;
    if (on_f_box_boundary(s.f, window.f_radius)) {
      if (boundary_hits++ == 0) {
        census.diagnostics.messages.push_back(
            "window too small: f=" + describe_f(g, s.f) + " at n=" +
            std::to_string(s.n) + " lies on the f-box boundary and gives cell (" +
            cell_string(s.cell) + ") inside the cell window");
      }
      census.diagnostics.window_too_small = true;
    }

    LimitDescriptor d;
    d.n = s.n;
    d.f = s.f;
    d.cell = s.cell;
    d.degrees = s.degrees;
    d.point = orbit_point_of_cell(ch.a, b_edges, s.cell);
    d.orbit_dim = orbit_dimension(g, d.point);

    auto [it, fresh] = seen.try_emplace(s.cell, census.cells.size());
    if (fresh) {
      census.cells.push_back(std::move(d));
    } else if (!census.cells[it->second].same_shadow(d)) {
      throw std::logic_error("census: keys " +
                             describe_f(g, census.cells[it->second].f) +
                             " and " + describe_f(g, d.f) + " name cell (" +
                             cell_string(s.cell) +
                             ") with different descriptors");
    }
  }
  if (boundary_hits > 1) {
    census.diagnostics.messages.push_back(
        std::to_string(boundary_hits) +
        " boundary samples in total; enlarge the f-box");
  }

  std::sort(census.cells.begin(), census.cells.end(),
            [](const LimitDescriptor& a, const LimitDescriptor& b) {
              return a.cell < b.cell;
            });

  std::vector<CellIndex> cells;
  for (const auto& d : census.cells) cells.push_back(d.cell);
  const std::vector<std::size_t> classes = dedup_mod_h1(g, cells);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    census.cells[i].h1_class = classes[i];
  }

  // Covering relations of strict containment. Containment never raises
  // dimension, so candidates in between are filtered by dimension first.
  const std::size_t k = cells.size();
  std::vector<std::size_t> dim(k);
  for (std::size_t i = 0; i < k; ++i) dim[i] = cell_dimension(cells[i]);
  for (std::size_t up = 0; up < k; ++up) {
    for (std::size_t low = 0; low < k; ++low) {
      if (up == low || dim[low] >= dim[up]) continue;
      if (!cell_contains(cells[up], cells[low])) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < k && covered; ++mid) {
        if (dim[mid] <= dim[low] || dim[mid] >= dim[up]) continue;
        if (cell_contains(cells[up], cells[mid]) &&
            cell_contains(cells[mid], cells[low])) {
          covered = false;
        }
      }
      if (covered) census.hasse.emplace_back(up, low);
    }
  }
  std::sort(census.hasse.begin(), census.hasse.end());

  if (!census.diagnostics.window_too_small) {
    std::vector<const CellIndex*> all;
    std::vector<const CellIndex*> interior;
    for (const CellIndex& c : cells) {
      all.push_back(&c);
      if (inside_cell_window(c, window.cell_radius, true)) {
        interior.push_back(&c);
      }
    }
    census.diagnostics.connectivity_checked = true;
    census.diagnostics.connected = connected_by_comparability(all);
    census.diagnostics.interior_connected =
        connected_by_comparability(interior);
  }
  return census;
}

Census y_census(const SlopeContext& ctx, const CharacterPair& ch,
                const IntCochain0& bdeg, const TruncationWindow& window) {
  window.validate();
  const Graph& g = ctx.graph();
  if (bdeg.size() != g.vertex_count()) {
    throw DomainError("need one degree per vertex");
  }
  std::vector<CensusSample> samples;
  std::int64_t current_n = 0;
  std::optional<SlopeContext> scaled;
  for_each_in_window(g, SlopeWindow{window.n_max, window.f_radius},
                     [&](std::int64_t k, const IntCochain0& f) {
                       const std::int64_t n = checked_mul(k, window.n_step);
                       if (n != current_n) {
                         scaled = ctx.with_scale(n);
                         current_n = n;
                       }
                       CellIndex cell = dslope(*scaled, f);
                       IntCochain0 deg = descriptor_degrees(g, bdeg, cell);
                       samples.push_back({n, f, std::move(cell), std::move(deg)});
                     });
  return assemble_census(g, ch, window, samples);
}

bool degenerates(const LimitDescriptor& desc1, const LimitDescriptor& desc2) {
  return cell_contains(desc2.cell, desc1.cell);
}

}  // namespace vlimits
