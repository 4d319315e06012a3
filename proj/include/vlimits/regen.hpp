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

// Divisors D^n_f of the limits on H^n, the twist they carry, and the
// identities linking chip-firing on H^n to the slope cochains.

#ifndef VLIMITS_REGEN_HPP_
#define VLIMITS_REGEN_HPP_

#include <cstdint>
#include <string>

#include "vlimits/census.hpp"
#include "vlimits/chipfire.hpp"
#include "vlimits/slopes.hpp"
#include "vlimits/toric.hpp"

namespace vlimits {

struct RegenContext {
  SlopeContext slopes;
  IntCochain0 bdeg;
  CharacterPair characters;
};

// The subdivision H^n that divisors of ctx live on.
SubdivisionPtr subdivision_of(const SlopeContext& ctx);

// One chip at z^e_{i_e(f)} on every edge with half-integral slope; on V(G)
// the descriptor degrees.
Divisor limit_divisor(const SlopeContext& ctx, const IntCochain0& bdeg,
                      const IntCochain0& f);

// p_e = (1/n) sum_i i D(z^{ebar}_i) on stored edges, extended
// antisymmetrically. A chip at z^e_j gives p_e = (N - j) / n.
RatCochain1 twist_of_divisor(const Divisor& d);

// Per vertex v: sum over arcs a leaving v of floor(slope_g(a)) with twist
// p = twist_of_divisor(D), plus the number of those arcs with p_a < 0.
IntCochain0 twister_restriction_degrees(const Divisor& d, const IntCochain0& g);

// n p_a = N - i_a(f) when p_a >= 0 and -i_a(f) when p_a < 0, on every arc.
bool check_chip_twist(const SlopeContext& ctx, const IntCochain0& f,
               const RatCochain1& p);

struct RegenerationReport {
  bool divisors_agree = false;  // D_h = D_f + div(ext(h - f, D_f))
  bool floors_agree = false;    // the floor identity on every arc
  bool ok() const { return divisors_agree && floors_agree; }
};

RegenerationReport verify_claim1(const SlopeContext& ctx, const IntCochain0& bdeg,
                           const IntCochain0& f, const IntCochain0& h);

// limit_divisor at (n, 0) equals the pullback of limit_divisor at (1, 0).
// Requires an integral twist.
bool check_zero_pullback(const SlopeContext& ctx, const IntCochain0& bdeg,
                  std::int64_t n);

// The census rebuilt from chip-firing alone: D^n_f is the pullback of
// D^1_0 plus the principal divisor of the canonical extension of f, and the
// cell is read back from its chips. Requires an integral twist.
Census regen_census(const RegenContext& ctx, const TruncationWindow& window);

}  // namespace vlimits

#endif  // VLIMITS_REGEN_HPP_
