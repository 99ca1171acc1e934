#include "ramsey/graph.hpp"

#include <algorithm>
#include <string>

#include "ramsey/error.hpp"

namespace ramsey {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw Error(Errc::VertexOutOfRange, "negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return false;
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::ptrdiff_t Graph::edge_index(Vertex a, Vertex b) const {
  const Edge e = make_edge(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return it - edges_.begin();
}

Graph graph_from_sorted_edges(int vertex_count, std::vector<Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) {
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  g.edges_ = std::move(edges);
  return g;
}

Graph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list) {
  if (vertex_count < 0) throw Error(Errc::VertexOutOfRange, "negative vertex count");
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw Error(Errc::VertexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                              ") outside 0.." + std::to_string(vertex_count - 1));
    }
    if (a == b) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(a));
    edges.push_back(make_edge(a, b));
  }
  std::sort(edges.begin(), edges.end());
  if (const auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(Errc::DuplicateEdge, "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") repeated");
  }
  return graph_from_sorted_edges(vertex_count, std::move(edges));
}

Graph complete_graph(int vertex_count) {
  if (vertex_count < 0) throw Error(Errc::VertexOutOfRange, "negative vertex count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(vertex_count) * static_cast<std::size_t>(std::max(vertex_count - 1, 0)) / 2);
  for (Vertex u = 0; u < vertex_count; ++u)
    for (Vertex v = u + 1; v < vertex_count; ++v) edges.push_back({u, v});
  return graph_from_sorted_edges(vertex_count, std::move(edges));
}

Graph cycle_graph(int length) {
  if (length < 3) throw Error(Errc::CycleTooShort, "cycle length " + std::to_string(length) + " < 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < length; ++v) edges.push_back(make_edge(v, (v + 1) % length));
  std::sort(edges.begin(), edges.end());
  return graph_from_sorted_edges(length, std::move(edges));
}

Graph complete_bipartite_graph(int left, int right) {
  if (left < 0 || right < 0) throw Error(Errc::VertexOutOfRange, "negative part size");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = left; v < left + right; ++v) edges.push_back({u, v});
  return graph_from_sorted_edges(left + right, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return graph_from_sorted_edges(a.vertex_count() + b.vertex_count(), std::move(edges));
}

namespace {

// Sorted unique copy of `vertices`, validated against the parent order.
std::vector<Vertex> normalized_subset(int parent_order, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= parent_order)) {
    throw Error(Errc::VertexOutOfRange, "induced vertex set exceeds 0.." + std::to_string(parent_order - 1));
  }
  return sorted;
}

}  // namespace

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.original = normalized_subset(g.vertex_count(), vertices);
  std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) local[static_cast<std::size_t>(out.original[i])] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = local[static_cast<std::size_t>(e.u)];
    const Vertex b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});  // order preserving, so still sorted
  }
  out.graph = graph_from_sorted_edges(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

EdgeColoring::EdgeColoring(Graph base, int color_count, std::vector<Color> colors)
    : base_(std::move(base)), color_count_(color_count), colors_(std::move(colors)) {
  if (color_count_ < 1) throw Error(Errc::ColorOutOfRange, "color count must be at least 1");
  if (colors_.size() != base_.edge_count()) {
    throw Error(Errc::ColorOutOfRange, "coloring has " + std::to_string(colors_.size()) + " colors for " +
                                           std::to_string(base_.edge_count()) + " edges");
  }
  for (const Color c : colors_) {
    if (c < 1 || c > color_count_) {
      throw Error(Errc::ColorOutOfRange, "color " + std::to_string(c) + " outside 1.." + std::to_string(color_count_));
    }
  }
}

Color EdgeColoring::color_of(Vertex a, Vertex b) const {
  const auto idx = base_.edge_index(a, b);
  if (idx < 0) throw Error(Errc::VertexOutOfRange, "(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
  return colors_[static_cast<std::size_t>(idx)];
}

std::size_t EdgeColoring::class_size(Color c) const {
  return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), c));
}

Graph color_class(const EdgeColoring& coloring, Color c) {
  if (c < 1 || c > coloring.color_count()) {
    throw Error(Errc::ColorOutOfRange, "color " + std::to_string(c) + " outside 1.." + std::to_string(coloring.color_count()));
  }
  std::vector<Edge> edges;
  const auto base_edges = coloring.base().edges();
  const auto colors = coloring.colors();
  for (std::size_t i = 0; i < base_edges.size(); ++i)
    if (colors[i] == c) edges.push_back(base_edges[i]);
  return graph_from_sorted_edges(coloring.vertex_count(), std::move(edges));
}

InducedColoring induced_coloring(const EdgeColoring& coloring, std::span<const Vertex> vertices) {
  InducedSubgraph sub = induced_subgraph(coloring.base(), vertices);
  std::vector<Color> colors;
  colors.reserve(sub.graph.edge_count());
  for (const Edge& e : sub.graph.edges()) colors.push_back(coloring.color_of(sub.lift(e.u), sub.lift(e.v)));
  return {EdgeColoring(std::move(sub.graph), coloring.color_count(), std::move(colors)), std::move(sub.original)};
}

std::size_t edges_within(const Graph& g, const std::vector<char>& members) {
  std::size_t count = 0;
  for (const Edge& e : g.edges())
    if (members[static_cast<std::size_t>(e.u)] && members[static_cast<std::size_t>(e.v)]) ++count;
  return count;
}

}  // namespace ramsey
