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

#include "vlimits/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "vlimits/errors.hpp"

namespace vlimits {
namespace {

std::string line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte just past the failure point.
    std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    throw ParseError(line_and_column(text, at), "malformed JSON");
  }
}

const Json& field(const Json& obj, const std::string& key,
                  const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, "missing field '" + key + "'");
  return *it;
}

std::string json_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

std::int64_t json_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::string text_of(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  if (j.is_string()) return j.get<std::string>();
  throw ParseError(where, "expected an integer or a \"p/q\" string");
}

std::string point_string(const ProjectivePoint& p) {
  if (p.y == 0) return "1:0";
  return big_to_string(p.x);
}

}  // namespace

Rational json_rational(const Json& j, const std::string& where) {
  try {
    return Rational::parse(text_of(j, where));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  } catch (const std::domain_error& e) {
    throw ParseError(where, e.what());
  } catch (const ArithmeticOverflow&) {
    throw ParseError(where, "value out of range");
  }
}

BigRational json_big_rational(const Json& j, const std::string& where) {
  try {
    return parse_big(text_of(j, where));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

SlopeContext GraphDocument::slope_context(std::int64_t scale) const {
  return SlopeContext(graph, lengths, twist, scale);
}

GraphDocument parse_graph_document(const std::string& text) {
  const Json root = parse_json(text);
  if (!root.is_object()) throw ParseError("", "top level must be an object");

  std::vector<std::string> vertex_ids;
  const Json& vs = field(root, "vertices", "");
  if (!vs.is_array()) throw ParseError("vertices", "expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertex_ids.push_back(
        json_string(vs[i], "vertices[" + std::to_string(i) + "]"));
  }

  const Json& es = field(root, "edges", "");
  if (!es.is_array()) throw ParseError("edges", "expected an array");
  std::vector<EdgeSpec> specs;
  std::vector<std::int64_t> lengths;
  std::vector<Rational> twist;
  std::vector<BigRational> a;
  std::size_t a_count = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = es[i];
    EdgeSpec spec{json_string(field(e, "id", where), where + ".id"),
                  json_string(field(e, "tail", where), where + ".tail"),
                  json_string(field(e, "head", where), where + ".head")};
    std::int64_t length = 1;
    if (e.contains("length")) length = json_int(e["length"], where + ".length");
    if (length < 1) throw ParseError(where + ".length", "must be positive");
    Rational m(0);
    if (e.contains("twist")) m = json_rational(e["twist"], where + ".twist");
    if (e.contains("a")) {
      BigRational value = json_big_rational(e["a"], where + ".a");
      if (value == 0) throw ParseError(where + ".a", "character value is zero");
      a.push_back(value);
      ++a_count;
    } else {
      a.push_back(1);
    }
    specs.push_back(std::move(spec));
    lengths.push_back(length);
    twist.push_back(m);
  }

  GraphDocument doc;
  try {
    auto g = std::make_shared<const Graph>(std::move(vertex_ids),
                                           std::move(specs));
    g->require_connected();
    doc.graph = std::move(g);
  } catch (const GraphError& e) {
    throw ParseError("graph", e.what());
  }
  doc.lengths = std::move(lengths);
  doc.twist = RatCochain1(std::move(twist));
  if (a_count > 0) {
    if (a_count != doc.graph->edge_count()) {
      throw ParseError("edges", "character a must be given on every edge or none");
    }
    doc.a = std::move(a);
  }

  if (root.contains("b")) {
    const Json& bs = root["b"];
    if (!bs.is_array()) throw ParseError("b", "expected an array");
    if (bs.size() != doc.graph->genus()) {
      throw ParseError("b", "expected " + std::to_string(doc.graph->genus()) +
                                " values (one per independent cycle)");
    }
    std::vector<BigRational> b;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      const std::string where = "b[" + std::to_string(i) + "]";
      BigRational value = json_big_rational(bs[i], where);
      if (value == 0) throw ParseError(where, "character value is zero");
      b.push_back(value);
    }
    doc.b = std::move(b);
  }

  if (root.contains("bdeg")) {
    const Json& bd = root["bdeg"];
    if (!bd.is_object()) throw ParseError("bdeg", "expected an object");
    IntCochain0 bdeg(doc.graph->vertex_count());
    for (auto it = bd.begin(); it != bd.end(); ++it) {
      auto v = doc.graph->find_vertex(it.key());
      if (!v) throw ParseError("bdeg." + it.key(), "unknown vertex");
      bdeg[*v] = json_int(it.value(), "bdeg." + it.key());
    }
    doc.bdeg = std::move(bdeg);
  }

  // Validate the twist against the lengths now so errors carry a field.
  try {
    doc.slope_context(1);
  } catch (const DomainError& e) {
    // A rational twist is legal; it just needs a larger scale.
    bool integral = true;
    for (const Rational& x : doc.twist.values()) integral = integral && x.is_integer();
    if (integral) throw ParseError("edges", e.what());
  }
  return doc;
}

GraphDocument load_graph_document(const std::string& path) {
  return parse_graph_document(read_file(path));
}

Divisor parse_divisor(const GraphDocument& doc, const std::string& text) {
  const Json root = parse_json(text);
  const std::int64_t n = json_int(field(root, "n", ""), "n");
  if (n < 1) throw ParseError("n", "must be positive");
  auto sub = std::make_shared<const Subdivision>(doc.graph, doc.lengths, n);
  Divisor d(sub);
  const Json& coeffs = field(root, "coeffs", "");
  if (!coeffs.is_object()) throw ParseError("coeffs", "expected an object");
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    const std::string where = "coeffs." + it.key();
    auto node = sub->find_node(it.key());
    if (!node) throw ParseError(where, "no such vertex of the subdivision");
    d[*node] = json_int(it.value(), where);
  }
  return d;
}

Json divisor_json(const Divisor& d) {
  const Subdivision& sub = d.subdivision();
  Json coeffs = Json::object();
  for (std::size_t k = 0; k < sub.node_count(); ++k) {
    if (d[k] != 0) coeffs[sub.node_name(k)] = d[k];
  }
  Json out;
  out["n"] = sub.scale();
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json graph_info_json(const GraphDocument& doc) {
  const Graph& g = *doc.graph;
  Json out;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["genus"] = g.genus();
  out["spanning_trees"] = spanning_tree_count(g);
  out["lattice_index"] = lattice_index(g);
  Json lambda;
  lambda["laplacian_image"] = lattice_index(g);
  lambda["dstar_image"] = dstar_image_index(g);
  out["lattice_candidates"] = std::move(lambda);
  out["jacobian_invariant_factors"] = jacobian_invariant_factors(g);
  return out;
}

Json cell_json(const Graph& g, const CellIndex& cell) {
  Json out = Json::object();
  for (Edge e : g.edges()) out[g.edge_id(e)] = cell[e].to_string();
  return out;
}

Json census_json(const Graph& g, const Census& census) {
  Json list = Json::array();
  for (const LimitDescriptor& d : census.cells) {
    Json item;
    item["cell"] = cell_json(g, d.cell);
    item["dim"] = cell_dimension(d.cell);
    item["n"] = d.n;
    Json f = Json::object();
    Json deg = Json::object();
    for (Vertex v : g.vertices()) {
      f[g.vertex_id(v)] = d.f[v];
      deg[g.vertex_id(v)] = d.degrees[v];
    }
    item["f"] = std::move(f);
    item["degrees"] = std::move(deg);
    Json gluing = Json::object();
    for (Edge e : g.edges()) {
      if (d.point.coords[e.index]) {
        gluing[g.edge_id(e)] = point_string(*d.point.coords[e.index]);
      }
    }
    item["gluing"] = std::move(gluing);
    item["orbit_dim"] = d.orbit_dim;
    item["h1_class"] = d.h1_class;
    list.push_back(std::move(item));
  }
  return list;
}

Census parse_census_json(const Graph& g, const Json& j) {
  if (!j.is_array()) throw ParseError("", "census must be an array");
  Census census;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "[" + std::to_string(i) + "]";
    const Json& item = j[i];
    LimitDescriptor d;
    d.n = json_int(field(item, "n", where), where + ".n");
    d.cell = CellIndex(g.edge_count());
    d.f = IntCochain0(g.vertex_count());
    d.degrees = IntCochain0(g.vertex_count());
    const Json& cell = field(item, "cell", where);
    for (Edge e : g.edges()) {
      const std::string w = where + ".cell." + g.edge_id(e);
      try {
        d.cell[e] = HalfInt::parse(
            json_string(field(cell, g.edge_id(e), where + ".cell"), w));
      } catch (const std::invalid_argument& ex) {
        throw ParseError(w, ex.what());
      }
    }
    const Json& f = field(item, "f", where);
    const Json& deg = field(item, "degrees", where);
    for (Vertex v : g.vertices()) {
      d.f[v] = json_int(field(f, g.vertex_id(v), where + ".f"),
                        where + ".f." + g.vertex_id(v));
      d.degrees[v] = json_int(field(deg, g.vertex_id(v), where + ".degrees"),
                              where + ".degrees." + g.vertex_id(v));
    }
    d.point.cell = d.cell;
    d.point.coords.assign(g.edge_count(), std::nullopt);
    const Json& gluing = field(item, "gluing", where);
    for (Edge e : g.edges()) {
      if (!gluing.contains(g.edge_id(e))) continue;
      const std::string w = where + ".gluing." + g.edge_id(e);
      std::string s = json_string(gluing[g.edge_id(e)], w);
      if (s == "1:0") {
        d.point.coords[e.index] = ProjectivePoint{1, 0};
      } else {
        d.point.coords[e.index] = ProjectivePoint{json_big_rational(s, w), 1};
      }
    }
    d.orbit_dim = static_cast<std::size_t>(
        json_int(field(item, "orbit_dim", where), where + ".orbit_dim"));
    d.h1_class = static_cast<std::size_t>(
        json_int(field(item, "h1_class", where), where + ".h1_class"));
    census.cells.push_back(std::move(d));
  }
  return census;
}

std::string census_dot(const Graph& g, const Census& census) {
  (void)g;
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (const LimitDescriptor& d : census.cells) {
    const std::string id = cell_string(d.cell);
    out << "  \"" << id << "\" [label=\"(" << id << ")\\ndim "
        << cell_dimension(d.cell) << "\"];\n";
  }
  for (const auto& [up, low] : census.hasse) {
    out << "  \"" << cell_string(census.cells[low].cell) << "\" -> \""
        << cell_string(census.cells[up].cell) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<BigRational> parse_rational_list(const std::string& text,
                                             const std::string& where) {
  std::vector<BigRational> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_big(item));
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + "[" + std::to_string(i) + "]", e.what());
    }
    ++i;
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text,
                                         const std::string& where) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    try {
      Rational r = Rational::parse(item);
      if (!r.is_integer()) throw std::invalid_argument("not an integer");
      out.push_back(r.num());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + "[" + std::to_string(i) + "]", e.what());
    }
    ++i;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace vlimits
