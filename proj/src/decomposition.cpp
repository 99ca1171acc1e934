#include "ramsey/decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "ramsey/cycle_matching.hpp"
#include "ramsey/error.hpp"

namespace ramsey {

FLDecomposition fl_decompose(const Graph& g, int n) {
  if (n < 3) throw Error(Errc::CycleTooShort, "cycle length " + std::to_string(n) + " < 3");
  FLDecomposition d;
  d.cycle_length = n;
  d.matching_threshold = (n + 1) / 2;
  d.hypothesis_holds = true;

  const ComponentReport report = components(g);
  for (const Component& comp : report.components) {
    if (comp.bipartite) {
      d.v1.insert(d.v1.end(), comp.side_a.begin(), comp.side_a.end());
      d.v2.insert(d.v2.end(), comp.side_b.begin(), comp.side_b.end());
    } else {
      d.v3.insert(d.v3.end(), comp.vertices.begin(), comp.vertices.end());
      if (comp.matching_size >= d.matching_threshold) d.hypothesis_holds = false;
    }
  }
  std::sort(d.v1.begin(), d.v1.end());
  std::sort(d.v2.begin(), d.v2.end());
  std::sort(d.v3.begin(), d.v3.end());

  std::vector<char> in_v3(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Vertex v : d.v3) in_v3[static_cast<std::size_t>(v)] = 1;
  d.sparse_edge_count = static_cast<long long>(edges_within(g, in_v3));
  d.sparse_bound = Rational(n) * (static_cast<long long>(d.v3.size()) - 1) / 2;

  if (const std::string problem = check_decomposition(g, d); !problem.empty()) {
    throw std::logic_error("fl_decompose produced an invalid decomposition: " + problem);
  }
  return d;
}

std::string check_decomposition(const Graph& g, const FLDecomposition& d) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> part(n, 0);
  for (const auto* set : {&d.v1, &d.v2, &d.v3}) {
    const int label = set == &d.v1 ? 1 : set == &d.v2 ? 2 : 3;
    for (const Vertex v : *set) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) return "vertex out of range";
      if (part[static_cast<std::size_t>(v)] != 0) return "vertex " + std::to_string(v) + " in two parts";
      part[static_cast<std::size_t>(v)] = label;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (part[v] == 0) return "vertex " + std::to_string(v) + " uncovered";

  for (const Edge& e : g.edges()) {
    const int a = part[static_cast<std::size_t>(e.u)];
    const int b = part[static_cast<std::size_t>(e.v)];
    if ((a == 3) != (b == 3)) return "(A) edge joins V1 u V2 to V3";
    if (a != 3 && a == b) return "(B) edge inside V" + std::to_string(a);
  }

  const InducedSubgraph sparse = induced_subgraph(g, d.v3);
  for (const auto& comp : vertex_components(sparse.graph)) {
    if (!find_odd_cycle(induced_subgraph(sparse.graph, comp).graph)) return "bipartite component inside V3";
  }
  if (static_cast<long long>(sparse.graph.edge_count()) != d.sparse_edge_count) return "sparse edge count mismatch";
  if (d.hypothesis_holds && !d.sparse_bound_satisfied()) return "(C) sparse edge count exceeds n(|V3|-1)/2";
  return {};
}

PeelResult min_degree_peel(const Graph& g, int target) {
  if (target > g.vertex_count()) {
    throw Error(Errc::TargetTooLarge, "target " + std::to_string(target) + " exceeds " + std::to_string(g.vertex_count()) + " vertices");
  }
  if (target < 0) throw Error(Errc::InvalidParams, "negative peel target");

  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> degree(n);
  std::set<std::pair<int, Vertex>> queue;  // (degree, id): begin() is the min-degree, smallest-id vertex
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    degree[static_cast<std::size_t>(v)] = g.degree(v);
    queue.insert({g.degree(v), v});
  }
  std::vector<char> removed(n, 0);
  PeelResult out;
  for (int step = 0; step < g.vertex_count() - target; ++step) {
    const auto [deg, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[static_cast<std::size_t>(v)] = 1;
    out.log.push_back({v, deg});
    for (const Vertex w : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      auto& dw = degree[static_cast<std::size_t>(w)];
      queue.erase({dw, w});
      --dw;
      queue.insert({dw, w});
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!removed[static_cast<std::size_t>(v)]) out.kept.push_back(v);
  InducedSubgraph sub = induced_subgraph(g, out.kept);
  out.graph = std::move(sub.graph);
  return out;
}

}  // namespace ramsey
