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

#include "vlimits/slopes.hpp"

#include <set>

#include "vlimits/errors.hpp"

namespace vlimits {

SlopeContext::SlopeContext(std::shared_ptr<const Graph> graph,
                           std::vector<std::int64_t> lengths,
                           RatCochain1 twist, std::int64_t scale)
    : graph_(std::move(graph)),
      lengths_(std::move(lengths)),
      twist_(std::move(twist)),
      scale_(scale) {
  if (!graph_) throw std::invalid_argument("null graph");
  if (lengths_.size() != graph_->edge_count()) {
    throw DomainError("need one length per edge");
  }
  if (twist_.size() != graph_->edge_count()) {
    throw DomainError("need one twist value per edge");
  }
  if (scale_ < 1) throw DomainError("scale must be positive");
  for (Edge e : graph_->edges()) {
    if (lengths_[e.index] < 1) {
      throw DomainError("edge '" + graph_->edge_id(e) +
                        "': length must be positive");
    }
    if (!(Rational(scale_) * twist_[e]).is_integer()) {
      throw DomainError("edge '" + graph_->edge_id(e) + "': twist " +
                        twist_[e].to_string() + " times scale " +
                        std::to_string(scale_) + " is not an integer");
    }
  }
}

SlopeContext SlopeContext::untwisted(const Graph& g,
                                     std::vector<std::int64_t> lengths,
                                     std::int64_t scale) {
  return SlopeContext(std::make_shared<const Graph>(g), std::move(lengths),
                      RatCochain1(g.edge_count()), scale);
}

std::int64_t SlopeContext::scaled_twist(Arc a) const {
  return (Rational(scale_) * twist_.at(a)).num();
}

SlopeContext SlopeContext::with_scale(std::int64_t scale) const {
  return SlopeContext(graph_, lengths_, twist_, scale);
}

SlopeContext SlopeContext::with_twist(RatCochain1 twist) const {
  return SlopeContext(graph_, lengths_, std::move(twist), scale_);
}

SlopeContext SlopeContext::rescaled_lengths(std::int64_t m) const {
  if (m < 1 || scale_ % m != 0) {
    throw DomainError("rescaling factor must divide the scale");
  }
  std::vector<std::int64_t> lengths = lengths_;
  for (auto& l : lengths) l = checked_mul(l, m);
  return SlopeContext(graph_, std::move(lengths), Rational(m) * twist_,
                      scale_ / m);
}

namespace {

std::int64_t numerator(const SlopeContext& ctx, const IntCochain0& f, Arc a) {
  const Graph& g = ctx.graph();
  return checked_add(checked_sub(f[g.head(a)], f[g.tail(a)]),
                     ctx.scaled_twist(a));
}

}  // namespace

std::int64_t delta(const SlopeContext& ctx, const IntCochain0& f, Arc a) {
  return floor_div(numerator(ctx, f, a), ctx.segments(a.edge));
}

HalfCochain1 dslope(const SlopeContext& ctx, const IntCochain0& f) {
  HalfCochain1 out(ctx.graph().edge_count());
  for (Edge e : ctx.graph().edges()) {
    Arc a{e, false};
    out[e] = HalfInt::from_twice(
        checked_sub(delta(ctx, f, a), delta(ctx, f, a.reverse())));
  }
  return out;
}

std::int64_t i_index(const SlopeContext& ctx, const IntCochain0& f, Arc a) {
  const std::int64_t n = ctx.segments(a.edge);
  return n - floor_mod(numerator(ctx, f, a), n);
}

std::vector<bool> integral_mask(const HalfCochain1& slope) {
  std::vector<bool> mask(slope.size());
  for (std::size_t i = 0; i < slope.size(); ++i) {
    mask[i] = slope.values()[i].is_integer();
  }
  return mask;
}

Graph integral_subgraph(const SlopeContext& ctx, const IntCochain0& f) {
  return ctx.graph().spanning_subgraph(integral_mask(dslope(ctx, f)));
}

SeparationReport h1_separation_check(const SlopeContext& ctx,
                                     const SlopeWindow& window) {
  const Graph& g = ctx.graph();
  std::set<HalfCochain1> seen;
  for_each_in_window(g, window, [&](std::int64_t n, const IntCochain0& f) {
    seen.insert(dslope(ctx.with_scale(n), f));
  });

  SeparationReport report;
  report.distinct_slopes = seen.size();
  const CycleBasis basis = cycle_basis(g);
  std::vector<HalfCochain1> slopes(seen.begin(), seen.end());
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      ++report.pairs_checked;
      if (in_h1(g, basis, slopes[j] - slopes[i])) {
        report.passed = false;
        report.first = slopes[i];
        report.second = slopes[j];
        return report;
      }
    }
  }
  return report;
}

}  // namespace vlimits
