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

#include "vlimits/regen.hpp"

#include <optional>
#include <stdexcept>

#include "vlimits/errors.hpp"

namespace vlimits {

SubdivisionPtr subdivision_of(const SlopeContext& ctx) {
  return std::make_shared<const Subdivision>(ctx.graph_ptr(), ctx.lengths(),
                                             ctx.scale());
}

Divisor limit_divisor(const SlopeContext& ctx, const IntCochain0& bdeg,
                      const IntCochain0& f) {
  const Graph& g = ctx.graph();
  if (bdeg.size() != g.vertex_count() || f.size() != g.vertex_count()) {
    throw std::invalid_argument("limit_divisor: cochain size");
  }
  SubdivisionPtr sub = subdivision_of(ctx);
  Divisor d(sub);
  const CellIndex slope = dslope(ctx, f);
  const IntCochain0 deg = descriptor_degrees(g, bdeg, slope);
  for (Vertex v : g.vertices()) d[sub->node(v)] = deg[v];
  for (Edge e : g.edges()) {
    if (slope[e].is_integer()) continue;
    d[sub->node(e, i_index(ctx, f, Arc{e, false}))] = 1;
  }
  return d;
}

RatCochain1 twist_of_divisor(const Divisor& d) {
  const Subdivision& sub = d.subdivision();
  RatCochain1 p(sub.graph().edge_count());
  for (Edge e : sub.graph().edges()) {
    const Arc back{e, true};
    std::int64_t s = 0;
    for (std::int64_t i = 1; i < sub.segments(e); ++i) {
      s = checked_add(s, checked_mul(i, d.at(back, i)));
    }
    p[e] = Rational(s, sub.scale());
  }
  return p;
}

IntCochain0 twister_restriction_degrees(const Divisor& d,
                                        const IntCochain0& g) {
  require_admissible(d);
  const Subdivision& sub = d.subdivision();
  const RatCochain1 p = twist_of_divisor(d);
  const SlopeContext ctx(sub.graph_ptr(), sub.lengths(), p, sub.scale());
  const CellIndex slope = dslope(ctx, g);
  IntCochain0 out(sub.graph().vertex_count());
  for (Vertex v : sub.graph().vertices()) {
    for (Arc a : sub.graph().arcs_from(v)) {
      out[v] += slope.at(a).floor() + (p.at(a) < Rational(0) ? 1 : 0);
    }
  }
  return out;
}

bool check_chip_twist(const SlopeContext& ctx, const IntCochain0& f,
               const RatCochain1& p) {
  for (Edge e : ctx.graph().edges()) {
    for (Arc a : {Arc{e, false}, Arc{e, true}}) {
      const Rational np = Rational(ctx.scale()) * p.at(a);
      const std::int64_t i = i_index(ctx, f, a);
      const Rational expected =
          np >= Rational(0) ? Rational(ctx.segments(e) - i) : Rational(-i);
      if (np != expected) return false;
    }
  }
  return true;
}

RegenerationReport verify_claim1(const SlopeContext& ctx, const IntCochain0& bdeg,
                           const IntCochain0& f, const IntCochain0& h) {
  RegenerationReport r;
  const Divisor df = limit_divisor(ctx, bdeg, f);
  const Divisor dh = limit_divisor(ctx, bdeg, h);
  const IntCochain0 g = h - f;
  r.divisors_agree =
      dh == df + principal_divisor(canonical_extension(g, df));

  const RatCochain1 p = twist_of_divisor(df);
  const CellIndex slope_f = dslope(ctx, f);
  const CellIndex slope_h = dslope(ctx, h);
  const CellIndex slope_g = dslope(ctx.with_twist(p), g);
  r.floors_agree = true;
  for (Edge e : ctx.graph().edges()) {
    for (Arc a : {Arc{e, false}, Arc{e, true}}) {
      const std::int64_t rhs = slope_g.at(a).floor() + slope_f.at(a).floor() +
                               (p.at(a) < Rational(0) ? 1 : 0);
      if (slope_h.at(a).floor() != rhs) r.floors_agree = false;
    }
  }
  return r;
}

bool check_zero_pullback(const SlopeContext& ctx, const IntCochain0& bdeg,
                  std::int64_t n) {
  const IntCochain0 zero(ctx.graph().vertex_count());
  const Divisor base = limit_divisor(ctx.with_scale(1), bdeg, zero);
  return pullback(base, n) == limit_divisor(ctx.with_scale(n), bdeg, zero);
}

Census regen_census(const RegenContext& rc, const TruncationWindow& window) {
  window.validate();
  const SlopeContext& ctx = rc.slopes;
  const Graph& g = ctx.graph();
  const IntCochain0 zero(g.vertex_count());
  const Divisor base =
      limit_divisor(ctx.with_scale(window.n_step), rc.bdeg, zero);

  std::vector<CensusSample> samples;
  std::int64_t current_n = 0;
  std::optional<Divisor> d0;
  std::optional<SlopeContext> scaled;
  for_each_in_window(
      g, SlopeWindow{window.n_max, window.f_radius},
      [&](std::int64_t k, const IntCochain0& f) {
        const std::int64_t n = checked_mul(k, window.n_step);
        if (n != current_n) {
          d0 = pullback(base, n);
          scaled = ctx.with_scale(n);
          current_n = n;
        }
        const Divisor df = *d0 + principal_divisor(canonical_extension(f, *d0));
        const Subdivision& sub = df.subdivision();

        CensusSample s{n, f, CellIndex(g.edge_count()),
                       IntCochain0(g.vertex_count())};
        for (Vertex v : g.vertices()) s.degrees[v] = df.at(v);
        for (Edge e : g.edges()) {
          // Read the slope back from the chip position:
          // x = N delta + N - i with x = f(head) - f(tail) + n m_e.
          const std::int64_t big_n = sub.segments(e);
          const std::int64_t x = f[g.head(e)] - f[g.tail(e)] +
                                 scaled->scaled_twist(Arc{e, false});
          const std::int64_t i = chip_index(df, e).value_or(big_n);
          const std::int64_t num = x - big_n + i;
          if (floor_mod(num, big_n) != 0) {
            throw std::logic_error("regeneration: chip on edge '" +
                                   g.edge_id(e) +
                                   "' is inconsistent with the twist");
          }
          const std::int64_t delta_e = num / big_n;
          s.cell[e] = HalfInt::from_twice(2 * delta_e + (i == big_n ? 0 : 1));
        }
        samples.push_back(std::move(s));
      });
  return assemble_census(g, rc.characters, window, samples);
}

}  // namespace vlimits
