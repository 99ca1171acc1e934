#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ramsey {

using Vertex = int;
using Color = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..vertex_count()-1.
///
/// Immutable once built. The edge list is kept sorted lexicographically and the
/// neighbor lists sorted ascending, so two graphs compare equal exactly when
/// they have the same vertex count and edge set.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `vertex_count` vertices.
  explicit Graph(int vertex_count);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex a, Vertex b) const;

  /// Index of the edge {a,b} in edges(), or -1.
  std::ptrdiff_t edge_index(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  friend Graph graph_from_sorted_edges(int, std::vector<Edge>);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Validating constructor: rejects loops, repeated pairs (in either
/// orientation) and endpoints outside 0..vertex_count-1.
Graph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list);

inline Graph build_graph(int vertex_count, std::initializer_list<std::pair<int, int>> edge_list) {
  return build_graph(vertex_count, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

/// Internal fast path: `edges` must already be normalized, sorted and unique.
Graph graph_from_sorted_edges(int vertex_count, std::vector<Edge> edges);

Graph complete_graph(int vertex_count);
Graph cycle_graph(int length);
Graph complete_bipartite_graph(int left, int right);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// G[W] with vertices relabeled 0..|W|-1 in increasing order of parent id.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // local id -> parent id

  Vertex lift(Vertex local) const { return original[static_cast<std::size_t>(local)]; }
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Total assignment of colors 1..k to the edges of a base graph.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  /// `colors[i]` is the color of base.edges()[i].
  EdgeColoring(Graph base, int color_count, std::vector<Color> colors);

  const Graph& base() const noexcept { return base_; }
  int color_count() const noexcept { return color_count_; }
  int vertex_count() const noexcept { return base_.vertex_count(); }
  std::span<const Color> colors() const noexcept { return colors_; }

  /// Color of edge {a,b}; throws VertexOutOfRange if it is not a base edge.
  Color color_of(Vertex a, Vertex b) const;

  std::size_t class_size(Color c) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  Graph base_;
  int color_count_ = 0;
  std::vector<Color> colors_;
};

/// Spanning subgraph formed by the edges of color `c`.
Graph color_class(const EdgeColoring& coloring, Color c);

/// Restriction of a coloring to an induced subgraph (same color count).
struct InducedColoring {
  EdgeColoring coloring;
  std::vector<Vertex> original;
};

InducedColoring induced_coloring(const EdgeColoring& coloring, std::span<const Vertex> vertices);

/// Number of edges of `g` with both ends in `members` (a membership mask).
std::size_t edges_within(const Graph& g, const std::vector<char>& members);

}  // namespace ramsey
