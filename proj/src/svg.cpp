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

#include "vlimits/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "vlimits/errors.hpp"
#include "vlimits/tilings.hpp"

namespace vlimits {
namespace {

constexpr double kPixelsPerUnit = 90.0;
constexpr const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada",
                                    "#fb8072", "#80b1d3", "#fdb462",
                                    "#b3de69", "#fccde5"};

struct Point2 {
  double x;
  double y;
};

double to_double(const Rational& r) {
  return static_cast<double>(r.num()) / static_cast<double>(r.den());
}

// Orthonormal coordinates on the degree-zero hyperplane.
Point2 project(const RatCochain0& eta) {
  const auto& v = eta.values();
  if (v.size() == 2) {
    return {(to_double(v[1]) - to_double(v[0])) / std::sqrt(2.0), 0.0};
  }
  const double a = to_double(v[0]), b = to_double(v[1]), c = to_double(v[2]);
  return {(a - b) / std::sqrt(2.0), (a + b - 2 * c) / std::sqrt(6.0)};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string f_label(const IntCochain0& f) {
  std::string s = "f=(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(f.values()[i]);
  }
  return s + ")";
}

class Canvas {
 public:
  Canvas(double half_width, double half_height)
      : hw_(half_width), hh_(half_height) {}

  double sx(const Point2& p) const { return (p.x + hw_) * kPixelsPerUnit; }
  double sy(const Point2& p) const { return (hh_ - p.y) * kPixelsPerUnit; }
  bool visible(const Point2& p) const {
    return std::abs(p.x) <= hw_ && std::abs(p.y) <= hh_;
  }

  std::string header() const {
    const std::string w = fmt(2 * hw_ * kPixelsPerUnit);
    const std::string h = fmt(2 * hh_ * kPixelsPerUnit);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w +
           "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  }

 private:
  double hw_;
  double hh_;
};

}  // namespace

TilingFigure tiling_figure(const SlopeContext& ctx, const FigureOptions& opt) {
  const Graph& g = ctx.graph();
  const std::size_t nv = g.vertex_count();
  if (nv > 3) {
    throw DomainError(
        "tiling pictures need at most 3 vertices (H_0 of dimension <= 2); "
        "this graph has " + std::to_string(nv) +
        ". Use 'vlimits limits' for the census instead");
  }
  if (nv < 2) throw DomainError("a single vertex has nothing to draw");
  if (opt.f_radius < 1 || opt.extent < 1 || opt.denominator < 1) {
    throw DomainError("figure bounds must be positive");
  }
  const SlopeContext base = ctx.with_scale(1);

  // Tiles with centers, in window order.
  std::vector<Tile> tiles;
  std::map<std::vector<Rational>, std::size_t> color_of;
  for_each_in_window(g, SlopeWindow{1, opt.f_radius},
                     [&](std::int64_t, const IntCochain0& f) {
                       if (auto t = mixed_tile(base, f)) {
                         if (color_of.try_emplace(t->center.values(),
                                                  tiles.size())
                                 .second) {
                           tiles.push_back(std::move(*t));
                         }
                       }
                     });

  const double extent = static_cast<double>(opt.extent);
  const Canvas canvas(extent * 1.5, nv == 2 ? 0.6 : extent * 1.5);
  std::ostringstream svg;
  svg << canvas.header();
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (nv == 2) {
    const Point2 l{-extent * 1.5, 0}, r{extent * 1.5, 0};
    svg << "<line x1=\"" << fmt(canvas.sx(l)) << "\" y1=\"" << fmt(canvas.sy(l))
        << "\" x2=\"" << fmt(canvas.sx(r)) << "\" y2=\"" << fmt(canvas.sy(r))
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }

  // Membership shading on the rational grid.
  svg << "<g id=\"samples\">\n";
  const std::int64_t steps = opt.extent * opt.denominator;
  const double dot = kPixelsPerUnit / static_cast<double>(opt.denominator) * 0.35;
  auto shade = [&](const RatCochain0& eta) {
    const Point2 p = project(eta);
    if (!canvas.visible(p)) return;
    std::string fill = "black";
    try {
      TileSearch s = mixed_tile_of(base, eta);
      if (s.hits.size() == 1) {
        auto it = color_of.find(s.hits.front().tile.center.values());
        std::size_t k = it == color_of.end() ? color_of.size() : it->second;
        fill = kPalette[k % std::size(kPalette)];
      } else {
        fill = "#999999";  // on a shared boundary
      }
    } catch (const SearchExhausted&) {
    }
    svg << "<circle cx=\"" << fmt(canvas.sx(p)) << "\" cy=\""
        << fmt(canvas.sy(p)) << "\" r=\"" << fmt(dot) << "\" fill=\"" << fill
        << "\"/>\n";
  };
  for (std::int64_t i = -steps; i <= steps; ++i) {
    if (nv == 2) {
      const Rational t(i, opt.denominator);
      shade(RatCochain0(std::vector<Rational>{-t, t}));
      continue;
    }
    for (std::int64_t j = -steps; j <= steps; ++j) {
      const Rational x(i, opt.denominator), y(j, opt.denominator);
      shade(RatCochain0(std::vector<Rational>{-(x + y), x, y}));
    }
  }
  svg << "</g>\n";

  // Lattice translates Laplacian(k).
  svg << "<g id=\"lattice\">\n";
  for_each_in_window(g, SlopeWindow{1, 2 * opt.f_radius},
                     [&](std::int64_t, const IntCochain0& k) {
                       const Point2 p = project(to_rational(laplacian(g, k)));
                       if (!canvas.visible(p)) return;
                       svg << "<circle cx=\"" << fmt(canvas.sx(p))
                           << "\" cy=\"" << fmt(canvas.sy(p))
                           << "\" r=\"2\" fill=\"black\"/>\n";
                     });
  svg << "</g>\n";

  svg << "<g id=\"centers\" font-family=\"monospace\" font-size=\"9\">\n";
  Json centers = Json::array();
  for (const Tile& t : tiles) {
    Json item;
    Json f = Json::object();
    Json c = Json::object();
    for (Vertex v : g.vertices()) {
      f[g.vertex_id(v)] = t.f[v];
      c[g.vertex_id(v)] = t.center[v].to_string();
    }
    item["f"] = std::move(f);
    item["center"] = std::move(c);
    item["cell"] = cell_json(g, t.slope);
    centers.push_back(std::move(item));

    const Point2 p = project(t.center);
    if (!canvas.visible(p)) continue;
    svg << "<circle cx=\"" << fmt(canvas.sx(p)) << "\" cy=\"" << fmt(canvas.sy(p))
        << "\" r=\"3.5\" fill=\"none\" stroke=\"#d7301f\" stroke-width=\"1.5\"/>\n";
    svg << "<text x=\"" << fmt(canvas.sx(p) + 5) << "\" y=\""
        << fmt(canvas.sy(p) - 5) << "\">" << f_label(t.f) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";

  Json sidecar;
  sidecar["dimension"] = nv - 1;
  sidecar["tiles"] = std::move(centers);
  return TilingFigure{svg.str(), std::move(sidecar)};
}

}  // namespace vlimits
