#include <algorithm>
#include <queue>

#include "ramsey/cycle_matching.hpp"

namespace ramsey {

std::vector<std::vector<Vertex>> vertex_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<Vertex> comp;
    seen[static_cast<std::size_t>(root)] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (const Vertex y : g.neighbors(x)) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

ComponentReport components(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  ComponentReport report;
  report.component_of.assign(n, -1);
  std::vector<int> side(n, -1);

  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (report.component_of[static_cast<std::size_t>(root)] != -1) continue;
    const int id = static_cast<int>(report.components.size());
    Component comp;
    comp.bipartite = true;
    std::queue<Vertex> queue;
    queue.push(root);
    report.component_of[static_cast<std::size_t>(root)] = id;
    side[static_cast<std::size_t>(root)] = 0;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      comp.vertices.push_back(x);
      for (const Vertex y : g.neighbors(x)) {
        if (report.component_of[static_cast<std::size_t>(y)] == -1) {
          report.component_of[static_cast<std::size_t>(y)] = id;
          side[static_cast<std::size_t>(y)] = 1 - side[static_cast<std::size_t>(x)];
          queue.push(y);
        } else if (side[static_cast<std::size_t>(y)] == side[static_cast<std::size_t>(x)]) {
          comp.bipartite = false;
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    if (comp.bipartite) {
      for (const Vertex v : comp.vertices) (side[static_cast<std::size_t>(v)] == 0 ? comp.side_a : comp.side_b).push_back(v);
    }
    comp.matching_size = comp.vertices.size() < 2 ? 0 : max_matching(induced_subgraph(g, comp.vertices).graph).size();
    report.components.push_back(std::move(comp));
  }
  return report;
}

}  // namespace ramsey
