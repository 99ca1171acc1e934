#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Set of pairwise vertex-disjoint edges of the queried graph.
struct MatchingCertificate {
  std::vector<Edge> edges;

  int size() const noexcept { return static_cast<int>(edges.size()); }
};

/// Cycle listed as consecutive distinct vertices; the last closes to the first.
struct CycleCertificate {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
};

struct Component {
  std::vector<Vertex> vertices;  // ascending
  bool bipartite = false;
  // Valid 2-coloring of the component when bipartite; side_a holds the
  // smallest vertex.
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  int matching_size = 0;
};

struct ComponentReport {
  std::vector<int> component_of;  // vertex -> index into components
  std::vector<Component> components;
};

/// Vertex sets of the connected components, each ascending, ordered by
/// smallest vertex.
std::vector<std::vector<Vertex>> vertex_components(const Graph& g);

/// Connected components, each with BFS bipartiteness and matching number.
ComponentReport components(const Graph& g);

/// Maximum-cardinality matching (Edmonds' blossom algorithm).
MatchingCertificate max_matching(const Graph& g);

/// An odd cycle of `g`, if any, extracted from a failed BFS 2-coloring.
std::optional<CycleCertificate> find_odd_cycle(const Graph& g);

/// Exact decision of whether `g` contains a cycle on exactly `length`
/// vertices. Exhaustive DFS with distance pruning; meant for graphs of a few
/// dozen vertices and short cycles.
std::optional<CycleCertificate> contains_cycle_of_length(const Graph& g, int length);

/// A longest cycle by branch and bound, or nullopt for forests. Intended for
/// v(G) up to about 20.
std::optional<CycleCertificate> longest_cycle(const Graph& g);

/// floor((n-1)(v-1)/2) + 1: the least edge count that forces a cycle of
/// length at least n in a graph on v vertices.
long long eg_threshold(int n, int v);

bool is_matching_of(const Graph& g, const MatchingCertificate& m);
bool is_cycle_of(const Graph& g, const CycleCertificate& c);

}  // namespace ramsey
