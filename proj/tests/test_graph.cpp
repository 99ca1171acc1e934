#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/error.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/io.hpp"

using namespace ramsey;

namespace {

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("build_graph accepts a triangle and normalizes edge order") {
  const Graph t = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t == build_graph(3, {{2, 1}, {0, 2}, {1, 0}}));
  CHECK(t == cycle_graph(3));
  CHECK(t == complete_graph(3));
}

TEST_CASE("build_graph rejects malformed edge lists") {
  CHECK(error_code([] { build_graph(4, {{0, 0}}); }) == Errc::LoopEdge);
  CHECK(error_code([] { build_graph(4, {{0, 1}, {1, 0}}); }) == Errc::DuplicateEdge);
  CHECK(error_code([] { build_graph(4, {{0, 4}}); }) == Errc::VertexOutOfRange);
  CHECK(error_code([] { build_graph(4, {{-1, 2}}); }) == Errc::VertexOutOfRange);
}

TEST_CASE("complete and cycle constructors") {
  CHECK(complete_graph(6).edge_count() == 15);
  CHECK(complete_graph(0).edge_count() == 0);
  const Graph c5 = cycle_graph(5);
  CHECK(c5.edge_count() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK(error_code([] { cycle_graph(2); }) == Errc::CycleTooShort);
}

TEST_CASE("induced subgraphs relabel in order") {
  const Graph k4 = complete_graph(4);
  const std::vector<Vertex> three{3, 1, 2};
  const InducedSubgraph sub = induced_subgraph(k4, three);
  CHECK(sub.graph == complete_graph(3));
  CHECK(sub.original == std::vector<Vertex>{1, 2, 3});
  CHECK(sub.lift(0) == 1);

  const std::vector<Vertex> consecutive{0, 1, 2};
  CHECK(induced_subgraph(cycle_graph(5), consecutive).graph == build_graph(3, {{0, 1}, {1, 2}}));
  CHECK(induced_subgraph(cycle_graph(5), std::vector<Vertex>{}).graph.vertex_count() == 0);
  CHECK(error_code([] { induced_subgraph(cycle_graph(5), std::vector<Vertex>{7}); }) == Errc::VertexOutOfRange);

  const Graph p = build_graph(6, {{0, 3}, {1, 5}, {2, 4}, {3, 4}});
  std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  CHECK(induced_subgraph(p, all).graph == p);
}

TEST_CASE("colour classes partition the base edge set") {
  const EdgeColoring mono(complete_graph(4), 2, std::vector<Color>(6, 1));
  CHECK(color_class(mono, 1) == complete_graph(4));
  CHECK(color_class(mono, 2).edge_count() == 0);
  CHECK(color_class(mono, 2).vertex_count() == 4);
  CHECK(error_code([&] { color_class(mono, 3); }) == Errc::ColorOutOfRange);

  // K_4 split into the paths 0-1-2-3 and 1-3-0-2.
  const Graph k4 = complete_graph(4);
  std::vector<Color> colors;
  for (const Edge& e : k4.edges()) colors.push_back((e == Edge{0, 1} || e == Edge{1, 2} || e == Edge{2, 3}) ? 1 : 2);
  const EdgeColoring paths(k4, 2, colors);
  CHECK(color_class(paths, 1) == build_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(color_class(paths, 2) == build_graph(4, {{1, 3}, {0, 3}, {0, 2}}));

  const EdgeColoring be = bondy_erdos_coloring(2, 5);
  CHECK(color_class(be, 2) == complete_bipartite_graph(4, 4));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph base = oracle::random_graph(9, 0.6, rng);
    const int k = 1 + trial % 4;
    const EdgeColoring col = oracle::random_coloring(base, k, rng);
    std::size_t total = 0;
    std::vector<int> hits(base.edge_count(), 0);
    for (Color c = 1; c <= k; ++c) {
      const Graph cls = color_class(col, c);
      total += cls.edge_count();
      for (const Edge& e : cls.edges()) ++hits[static_cast<std::size_t>(base.edge_index(e.u, e.v))];
    }
    CHECK(total == base.edge_count());
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
}

TEST_CASE("colorings reject colours outside 1..k") {
  CHECK(error_code([] { EdgeColoring(complete_graph(3), 2, {1, 2, 3}); }) == Errc::ColorOutOfRange);
  CHECK(error_code([] { EdgeColoring(complete_graph(3), 2, {1, 2}); }) == Errc::ColorOutOfRange);
}

TEST_CASE("file formats round-trip and are canonical") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.4, rng);
    CHECK(parse_graph(serialize_graph(g)) == g);
    const EdgeColoring col = oracle::random_coloring(g, 3, rng);
    CHECK(parse_coloring(serialize_coloring(col)) == col);
  }
  CHECK(serialize_coloring(EdgeColoring(build_graph(3, {{1, 2}, {0, 1}}), 2, {2, 1})) == "coloring 3 2\ne 0 1 2\ne 1 2 1\n");

  // Unsorted input parses to the same canonical object.
  const EdgeColoring shuffled = parse_coloring("coloring 3 2\ne 1 2 1\ne 0 1 2\n");
  CHECK(serialize_coloring(shuffled) == "coloring 3 2\ne 0 1 2\ne 1 2 1\n");

  CHECK(error_code([] { parse_graph("graph 3\ne 0 1 1\n"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_coloring("graph 3\ne 0 1\n"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_coloring("coloring 3 2\ne 0 1\n"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_graph("graph 3\ne 0 0\n"); }) == Errc::LoopEdge);
}
