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

#include "vlimits/cli.hpp"

#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "vlimits/census.hpp"
#include "vlimits/errors.hpp"
#include "vlimits/io.hpp"
#include "vlimits/regen.hpp"
#include "vlimits/svg.hpp"
#include "vlimits/verify.hpp"

namespace vlimits {
namespace {

struct LimitsOptions {
  std::string input;
  std::int64_t n_max = 2;
  std::int64_t f_box = 3;
  std::int64_t window = 2;
  std::string a;
  std::string b;
  std::string bdeg;
  std::string json_path;
  std::string dot_path;
  std::uint64_t seed = 1;
  bool regen_check = false;
};

struct TilingOptions {
  std::string input;
  std::string svg_path;
  std::string json_path;
  FigureOptions figure;
};

struct ChipfireOptions {
  std::string input;
  std::string divisor_path;
  std::string fire;
};

struct VerifyOptions {
  std::string input;
  std::string suite;
  std::uint64_t seed = 1;
};

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_graph_info(const std::string& input, std::ostream& out) {
  const GraphDocument doc = load_graph_document(input);
  out << graph_info_json(doc).dump(2) << "\n";
  return kExitOk;
}

CharacterPair characters(const GraphDocument& doc, const LimitsOptions& o) {
  const Graph& g = *doc.graph;
  CharacterPair ch = CharacterPair::trivial(g);
  if (doc.a) ch.a = *doc.a;
  if (doc.b) ch.b = *doc.b;
  if (!o.a.empty()) ch.a = parse_rational_list(o.a, "--a");
  if (!o.b.empty()) ch.b = parse_rational_list(o.b, "--b");
  if (ch.a.size() != g.edge_count()) {
    throw ParseError("--a", "expected " + std::to_string(g.edge_count()) +
                                " values, one per edge");
  }
  if (ch.b.size() != g.genus()) {
    throw ParseError("--b", "expected " + std::to_string(g.genus()) +
                                " values, one per independent cycle");
  }
  for (std::size_t i = 0; i < ch.a.size(); ++i) {
    if (ch.a[i] == 0) throw ParseError("--a[" + std::to_string(i) + "]", "zero");
  }
  for (std::size_t i = 0; i < ch.b.size(); ++i) {
    if (ch.b[i] == 0) throw ParseError("--b[" + std::to_string(i) + "]", "zero");
  }
  return ch;
}

int cmd_limits(const LimitsOptions& o, std::ostream& out, std::ostream& err) {
  const GraphDocument doc = load_graph_document(o.input);
  const Graph& g = *doc.graph;
  const CharacterPair ch = characters(doc, o);
  IntCochain0 bdeg = doc.bdeg ? *doc.bdeg : IntCochain0(g.vertex_count());
  if (!o.bdeg.empty()) {
    std::vector<std::int64_t> values = parse_int_list(o.bdeg, "--bdeg");
    if (values.size() != g.vertex_count()) {
      throw ParseError("--bdeg", "expected " + std::to_string(g.vertex_count()) +
                                     " values, one per vertex");
    }
    bdeg = IntCochain0(std::move(values));
  }
  // The census is a deterministic enumeration; the seed is accepted so that
  // every command shares one interface, and does not change the output.
  (void)o.seed;
  // Only multiples of the twist denominator n0 give integral chip positions.
  std::int64_t n0 = 1;
  for (const Rational& m : doc.twist.values()) n0 = std::lcm(n0, m.den());
  const TruncationWindow window{o.n_max, o.f_box, o.window, n0};
  const SlopeContext ctx = doc.slope_context(n0);
  if (n0 > 1) {
    err << "note: twist has denominator " << n0 << ", so n runs over "
        << n0 << ", " << 2 * n0 << ", ..., " << o.n_max * n0 << "\n";
  }
  const Census census = y_census(ctx, ch, bdeg, window);
  for (const std::string& m : census.diagnostics.messages) {
    err << "warning: " << m << "\n";
  }
  if (census.diagnostics.connectivity_checked && !census.diagnostics.connected) {
    err << "warning: census cells are not connected under degeneration\n";
  }

  const std::string json = census_json(g, census).dump(2) + "\n";
  if (o.json_path.empty()) {
    out << json;
  } else {
    write_file(o.json_path, json);
  }
  if (!o.dot_path.empty()) write_file(o.dot_path, census_dot(g, census));

  if (o.regen_check) {
    const Census re = regen_census(RegenContext{ctx, bdeg, ch}, window);
    if (census_json(g, re) != census_json(g, census) ||
        re.hasse != census.hasse) {
      err << "regeneration check FAILED: chip-firing census differs\n";
      return kExitVerifyFailed;
    }
    err << "regeneration check passed (" << re.cells.size() << " cells)\n";
  }
  return kExitOk;
}

int cmd_tiling_svg(const TilingOptions& o, std::ostream& err) {
  const GraphDocument doc = load_graph_document(o.input);
  const TilingFigure fig = tiling_figure(doc.slope_context(1), o.figure);
  write_file(o.svg_path, fig.svg);
  std::string sidecar = o.json_path;
  if (sidecar.empty()) sidecar = o.svg_path + ".json";
  write_file(sidecar, fig.centers.dump(2) + "\n");
  err << "wrote " << o.svg_path << " and " << sidecar << "\n";
  return kExitOk;
}

int cmd_chipfire(const ChipfireOptions& o, std::ostream& out) {
  const GraphDocument doc = load_graph_document(o.input);
  Divisor dv = parse_divisor(doc, read_file(o.divisor_path));
  require_admissible(dv);
  for (const std::string& id : split_ids(o.fire)) {
    auto v = doc.graph->find_vertex(id);
    if (!v) throw ParseError("--fire", "unknown vertex '" + id + "'");
    dv = fire(dv, *v);
  }
  out << divisor_json(dv).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const GraphDocument doc = load_graph_document(o.input);
  std::vector<std::string> names = suite_names();
  if (!o.suite.empty()) names = {o.suite};
  bool ok = true;
  for (const std::string& name : names) {
    const SuiteResult r = run_suite(name, doc, o.seed);
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checks
        << " checks, " << r.failures << " failures)\n";
    for (const std::string& m : r.messages) out << "  " << m << "\n";
    ok = ok && r.ok();
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Combinatorics of limits of line bundles on nodal curves"};
  app.name("vlimits");
  app.require_subcommand(1);

  std::string info_input;
  auto* graph_cmd = app.add_subcommand("graph", "Graph invariants");
  graph_cmd->require_subcommand(1);
  auto* info_cmd = graph_cmd->add_subcommand("info", "Genus, trees, lattices");
  info_cmd->add_option("file", info_input, "Graph JSON")->required();

  LimitsOptions lim;
  auto* limits_cmd = app.add_subcommand("limits", "Census of limit cells");
  limits_cmd->add_option("file", lim.input, "Graph JSON")->required();
  limits_cmd->add_option("--nmax", lim.n_max, "Largest base-change scale n")
      ->check(CLI::PositiveNumber);
  limits_cmd->add_option("--fbox", lim.f_box, "Radius of the f box")
      ->check(CLI::PositiveNumber);
  limits_cmd->add_option("--window", lim.window, "Radius of the cell window")
      ->check(CLI::PositiveNumber);
  limits_cmd->add_option("--a", lim.a, "Edge characters a_e, comma separated");
  limits_cmd->add_option("--b", lim.b, "Cycle characters b, comma separated");
  limits_cmd->add_option("--bdeg", lim.bdeg, "Degrees per vertex");
  limits_cmd->add_option("--json", lim.json_path, "Write census JSON here");
  limits_cmd->add_option("--dot", lim.dot_path, "Write Hasse DOT here");
  limits_cmd->add_option("--seed", lim.seed, "Seed (output does not depend on it)");
  limits_cmd->add_flag("--regen-check", lim.regen_check,
                       "Rebuild the census by chip-firing and compare");

  TilingOptions til;
  auto* tiling_cmd = app.add_subcommand("tiling", "Mixed tilings");
  tiling_cmd->require_subcommand(1);
  auto* svg_cmd = tiling_cmd->add_subcommand("svg", "Draw the tiling");
  svg_cmd->add_option("file", til.input, "Graph JSON")->required();
  svg_cmd->add_option("-o,--output", til.svg_path, "SVG path")->required();
  svg_cmd->add_option("--json", til.json_path,
                      "Sidecar with exact centers (default <output>.json)");
  svg_cmd->add_option("--radius", til.figure.f_radius, "Radius of the f box")
      ->check(CLI::PositiveNumber);
  svg_cmd->add_option("--extent", til.figure.extent, "Half-width of the picture")
      ->check(CLI::PositiveNumber);
  svg_cmd->add_option("--grid", til.figure.denominator,
                      "Sample grid step is 1/grid")
      ->check(CLI::PositiveNumber);

  ChipfireOptions chip;
  auto* chip_cmd = app.add_subcommand("chipfire", "Fire vertices of G");
  chip_cmd->add_option("file", chip.input, "Graph JSON")->required();
  chip_cmd->add_option("--divisor", chip.divisor_path, "Divisor JSON")
      ->required();
  chip_cmd->add_option("--fire", chip.fire, "Vertices to fire, in order");

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  verify_cmd->add_option("file", ver.input, "Graph JSON")->required();
  verify_cmd->add_option("--suite", ver.suite, "One suite")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed", ver.seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info_cmd->parsed()) return cmd_graph_info(info_input, out);
    if (limits_cmd->parsed()) return cmd_limits(lim, out, err);
    if (svg_cmd->parsed()) return cmd_tiling_svg(til, err);
    if (chip_cmd->parsed()) return cmd_chipfire(chip, out);
    if (verify_cmd->parsed()) return cmd_verify(ver, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const GraphError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SearchExhausted& e) {
    err << "search exhausted: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const ArithmeticOverflow& e) {
    err << "refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace vlimits
