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

// Cells of the toric arrangement indexed by half-integer 1-cochains,
// characters, orbit points and their cycle equations, the vertex torus
// action, and translation by integer cycles.

#ifndef VLIMITS_TORIC_HPP_
#define VLIMITS_TORIC_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vlimits/arith.hpp"
#include "vlimits/graph.hpp"
#include "vlimits/slopes.hpp"

namespace vlimits {

using CellIndex = HalfCochain1;

// Number of edges with an integral coordinate.
std::size_t cell_dimension(const CellIndex& alpha);

// P_alpha contains P_beta: |beta_e - alpha_e| <= 1/2 everywhere, and
// alpha_e = beta_e wherever beta_e is an integer.
bool cell_contains(const CellIndex& alpha, const CellIndex& beta);

// Comma-joined coordinates, e.g. "1/2,-1". Used as a stable key.
std::string cell_string(const CellIndex& alpha);

// a: one nonzero value per edge (stored orientation). b: one nonzero value
// per element of cycle_basis(graph), i.e. a character of H^1(G, Z).
struct CharacterPair {
  std::vector<BigRational> a;
  std::vector<BigRational> b;

  // All ones.
  static CharacterPair trivial(const Graph& g);
  // Throws DomainError on a zero value or a size mismatch.
  void validate(const Graph& g) const;
};

// Value of an edge character on an integer 1-cochain: prod v_e^{gamma_e}.
BigRational evaluate_on_edges(const std::vector<BigRational>& values,
                              const IntCochain1& gamma);

// Value of b on an element of H^1(G, Z), through its coordinates in the
// basis b is given on. Throws DomainError when gamma is not a cycle.
BigRational evaluate_b(const CycleBasis& basis,
                       const std::vector<BigRational>& b,
                       const IntCochain1& gamma);

// Extension of b to edge values: 1 on the tree edges of `gauge`, and on a
// chord c the value of b on the fundamental cycle of c. With the default
// basis as gauge, chord i simply gets b[i].
std::vector<BigRational> b_edge_values(const Graph& g, const CharacterPair& ch,
                                       const CycleBasis& gauge);
std::vector<BigRational> b_edge_values(const Graph& g,
                                       const CharacterPair& ch);

// (x : y) normalized to y = 1 when y != 0, else (1 : 0).
struct ProjectivePoint {
  BigRational x = 1;
  BigRational y = 1;

  static ProjectivePoint normalized(BigRational x, BigRational y);
  friend bool operator==(const ProjectivePoint&,
                         const ProjectivePoint&) = default;
};

struct OrbitPoint {
  CellIndex cell;
  // Present exactly on edges with an integral cell coordinate.
  std::vector<std::optional<ProjectivePoint>> coords;

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

// Coordinates (b_e a_e^{alpha_e} : 1) on the integral edges of alpha.
OrbitPoint orbit_point_of_cell(const std::vector<BigRational>& a,
                               const std::vector<BigRational>& b_edges,
                               const CellIndex& alpha);

// The point on the cell dslope(ctx, f), in the default gauge.
OrbitPoint orbit_point(const SlopeContext& ctx, const CharacterPair& ch,
                       const IntCochain0& f);

// Integer cycles of the integral subgraph of alpha: all combinations with
// coefficients in [-bound, bound] of its fundamental cycles, minus 0.
std::vector<IntCochain1> cycles_in_integral_subgraph(const Graph& g,
                                                     const CellIndex& alpha,
                                                     std::int64_t bound);

// For every such cycle gamma, with c_e = a_e^{alpha_e}:
//   prod_{g_e>0} X_e^{g_e} prod_{g_e<0} Y_e^{-g_e}
//     = b(gamma) prod_e c_e^{g_e} prod_{g_e>0} Y_e^{g_e} prod_{g_e<0} X_e^{-g_e}
// where b(gamma) is evaluated as a character of H^1.
bool check_cycle_equations(const Graph& g, const CharacterPair& ch,
                           const OrbitPoint& point, std::int64_t bound = 1);
bool check_cycle_equations(const SlopeContext& ctx, const CharacterPair& ch,
                           const IntCochain0& f, const OrbitPoint& point,
                           std::int64_t bound = 1);

// x_e -> z_head x_e, y_e -> z_tail y_e. z must be nonzero everywhere.
OrbitPoint torus_act(const Graph& g, const std::vector<BigRational>& z,
                     const OrbitPoint& point);

// Dimension of the stabilizer of the point in the vertex torus, as |V|
// minus the rank over Q of the constraints z_head = z_tail imposed by the
// coordinates with x, y both nonzero.
std::size_t stabilizer_dimension(const Graph& g, const OrbitPoint& point);
// |V| - stabilizer dimension.
std::size_t orbit_dimension(const Graph& g, const OrbitPoint& point);

// alpha + gamma. Throws DomainError unless d*(gamma) = 0.
CellIndex translate_cell(const Graph& g, const CellIndex& alpha,
                         const IntCochain1& gamma);

// Class id per input cell; two cells share a class iff their difference is
// in H^1(G, Z). Ids are numbered by first appearance.
std::vector<std::size_t> dedup_mod_h1(const Graph& g,
                                      const std::vector<CellIndex>& cells);

// Gluing a_e^{delta_e(f)} on the edges with N_e | f(head) - f(tail); empty
// elsewhere. Requires zero twist.
std::vector<std::optional<BigRational>> twister_gluing(
    const SlopeContext& ctx, const std::vector<BigRational>& a,
    const IntCochain0& f);

}  // namespace vlimits

#endif  // VLIMITS_TORIC_HPP_
