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

// JSON documents read and written by the command-line tool, and the DOT
// rendering of census Hasse diagrams.

#ifndef VLIMITS_IO_HPP_
#define VLIMITS_IO_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vlimits/census.hpp"
#include "vlimits/chipfire.hpp"
#include "vlimits/slopes.hpp"
#include "vlimits/toric.hpp"

namespace vlimits {

using Json = nlohmann::ordered_json;

// A graph document:
//   {"vertices": ["u", "v"],
//    "edges": [{"id": "e1", "tail": "u", "head": "v",
//               "length": 2, "twist": 0, "a": "3/2"}],
//    "b": ["5"], "bdeg": {"u": 1, "v": 1}}
// length defaults to 1 and twist to 0; "a", "b" and "bdeg" are optional.
// Rational fields accept integers or "p/q" strings.
struct GraphDocument {
  std::shared_ptr<const Graph> graph;
  std::vector<std::int64_t> lengths;
  RatCochain1 twist;
  std::optional<std::vector<BigRational>> a;
  std::optional<std::vector<BigRational>> b;
  std::optional<IntCochain0> bdeg;

  SlopeContext slope_context(std::int64_t scale = 1) const;
};

// Throws ParseError naming the offending field (or line and column for
// malformed JSON). Loops, duplicate ids, a disconnected graph and zero
// character values are all parse errors.
GraphDocument parse_graph_document(const std::string& text);
GraphDocument load_graph_document(const std::string& path);

// {"n": 1, "coeffs": {"u": 1, "z:e1:1": -1}}; lengths come from the graph.
Divisor parse_divisor(const GraphDocument& doc, const std::string& text);
Json divisor_json(const Divisor& d);

Json graph_info_json(const GraphDocument& doc);

Json cell_json(const Graph& g, const CellIndex& cell);
Json census_json(const Graph& g, const Census& census);
// Inverse of census_json on the fields it stores; used for round trips.
Census parse_census_json(const Graph& g, const Json& j);
std::string census_dot(const Graph& g, const Census& census);

// Rational / big-rational values from a JSON integer or string.
Rational json_rational(const Json& j, const std::string& where);
BigRational json_big_rational(const Json& j, const std::string& where);

// Comma-separated lists as given on the command line.
std::vector<BigRational> parse_rational_list(const std::string& text,
                                             const std::string& where);
std::vector<std::int64_t> parse_int_list(const std::string& text,
                                         const std::string& where);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace vlimits

#endif  // VLIMITS_IO_HPP_
