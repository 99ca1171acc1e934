#pragma once

#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

/// Partition (V1, V2, V3) of V(G): V1/V2 is the bipartition of the union of
/// the bipartite components and V3 (the sparse set) is the union of the
/// non-bipartite ones.
struct FLDecomposition {
  std::vector<Vertex> v1;
  std::vector<Vertex> v2;
  std::vector<Vertex> v3;
  int cycle_length = 0;
  // Matching threshold ceil(n/2) used for the hypothesis.
  int matching_threshold = 0;
  // No non-bipartite component has a matching of matching_threshold edges.
  bool hypothesis_holds = false;
  long long sparse_edge_count = 0;
  // n(|V3|-1)/2, exact.
  Rational sparse_bound;

  /// Condition (C) on edge count: vacuous when V3 is empty.
  bool sparse_bound_satisfied() const { return v3.empty() || Rational(sparse_edge_count) <= sparse_bound; }
};

/// Computes the decomposition and checks (A), (B) and the non-bipartiteness
/// of every G[V3] component before returning; a failed check is a bug and
/// raises std::logic_error. Requires n >= 3.
FLDecomposition fl_decompose(const Graph& g, int n);

/// Independent validator of the structural conditions, used by tests and the
/// proof engine. Returns a description of the first violated condition, or
/// an empty string.
std::string check_decomposition(const Graph& g, const FLDecomposition& d);

struct PeelStep {
  Vertex vertex;  // id in the input graph
  int degree;     // degree at the moment of removal
};

struct PeelResult {
  Graph graph;
  std::vector<Vertex> kept;  // local id -> input id, ascending
  std::vector<PeelStep> log;
};

/// Repeatedly deletes a vertex of minimum degree (smallest id on ties) until
/// `target` vertices remain.
PeelResult min_degree_peel(const Graph& g, int target);

}  // namespace ramsey
