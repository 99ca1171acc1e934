#include "ramsey/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {

std::string serialize_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string serialize_coloring(const EdgeColoring& coloring) {
  std::string out = "coloring " + std::to_string(coloring.vertex_count()) + " " + std::to_string(coloring.color_count()) + "\n";
  const auto edges = coloring.base().edges();
  const auto colors = coloring.colors();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += "e " + std::to_string(edges[i].u) + " " + std::to_string(edges[i].v) + " " + std::to_string(colors[i]) + "\n";
  }
  return out;
}

namespace {

struct Parsed {
  bool colored = false;
  int vertex_count = 0;
  int color_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Color> colors;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

Parsed parse(std::string_view text) {
  Parsed p;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (!header) {
      if (tag == "graph") {
        if (!(fields >> p.vertex_count)) fail(line_no, "expected 'graph <V>'");
      } else if (tag == "coloring") {
        p.colored = true;
        if (!(fields >> p.vertex_count >> p.color_count)) fail(line_no, "expected 'coloring <V> <k>'");
      } else {
        fail(line_no, "unknown header '" + tag + "'");
      }
      header = true;
    } else {
      if (tag != "e") fail(line_no, "expected an edge line");
      int u = 0;
      int v = 0;
      if (!(fields >> u >> v)) fail(line_no, "expected 'e <u> <v>'");
      if (p.colored) {
        Color c = 0;
        if (!(fields >> c)) fail(line_no, "expected a colour");
        p.colors.push_back(c);
      }
      p.edges.push_back({u, v});
    }
    std::string extra;
    if (fields >> extra) fail(line_no, "trailing token '" + extra + "'");
  }
  if (!header) fail(line_no, "missing header");
  return p;
}

EdgeColoring to_coloring(const Parsed& p) {
  Graph base = build_graph(p.vertex_count, p.edges);
  // Colours arrive in file order; reorder to the graph's sorted edge order.
  std::vector<Color> colors(base.edge_count());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    colors[static_cast<std::size_t>(base.edge_index(p.edges[i].first, p.edges[i].second))] = p.colors[i];
  }
  return EdgeColoring(std::move(base), p.color_count, std::move(colors));
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const Parsed p = parse(text);
  if (p.colored) throw Error(Errc::ParseError, "expected a graph file, found a coloring");
  return build_graph(p.vertex_count, p.edges);
}

EdgeColoring parse_coloring(std::string_view text) {
  const Parsed p = parse(text);
  if (!p.colored) throw Error(Errc::ParseError, "expected a coloring file, found a graph");
  return to_coloring(p);
}

std::variant<Graph, EdgeColoring> parse_any(std::string_view text) {
  const Parsed p = parse(text);
  if (p.colored) return to_coloring(p);
  return build_graph(p.vertex_count, p.edges);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace ramsey
