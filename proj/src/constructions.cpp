#include "ramsey/constructions.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "ramsey/cycle_matching.hpp"
#include "ramsey/error.hpp"
#include "ramsey/exact_search.hpp"

namespace ramsey {

std::string_view to_string(ComponentTag tag) {
  switch (tag) {
    case ComponentTag::Small: return "SMALL";
    case ComponentTag::Bipartite: return "BIPARTITE";
    case ComponentTag::Untagged: return "UNTAGGED";
  }
  return "UNKNOWN";
}

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::MonoCycle: return "MONO_CYCLE";
    case WitnessKind::NonbipComponentMatching: return "NONBIP_COMPONENT_MATCHING";
    case WitnessKind::ComponentMatching: return "COMPONENT_MATCHING";
  }
  return "UNKNOWN";
}

EdgeColoring bondy_erdos_coloring(int k, int n) {
  if (k < 2 || n < 4) throw Error(Errc::InvalidParams, "need k >= 2 and n >= 4, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  if (k > 20) throw Error(Errc::InvalidParams, "k too large to materialize");
  const int block = n - 1;
  const int order = (1 << (k - 1)) * block;
  Graph base = complete_graph(order);
  std::vector<Color> colors;
  colors.reserve(base.edge_count());
  for (const Edge& e : base.edges()) {
    const unsigned diff = static_cast<unsigned>(e.u / block) ^ static_cast<unsigned>(e.v / block);
    colors.push_back(diff == 0 ? 1 : static_cast<Color>(std::bit_width(diff)) + 1);
  }
  return EdgeColoring(std::move(base), k, std::move(colors));
}

bool StructuralCertificate::all_tagged() const { return untagged_count() == 0; }

std::size_t StructuralCertificate::untagged_count() const {
  std::size_t count = 0;
  for (const auto& per_color : colors)
    for (const auto& comp : per_color)
      if (comp.tag == ComponentTag::Untagged) ++count;
  return count;
}

StructuralCertificate structural_certificate(const EdgeColoring& coloring, int n) {
  if (n % 2 == 0) throw Error(Errc::EvenCycleLength, "structural certificate needs odd n, got " + std::to_string(n));
  if (n < 3) throw Error(Errc::CycleTooShort, "cycle length " + std::to_string(n) + " < 3");
  StructuralCertificate cert;
  cert.cycle_length = n;
  for (Color c = 1; c <= coloring.color_count(); ++c) {
    const Graph cls = color_class(coloring, c);
    std::vector<TaggedComponent> tagged;
    for (const Component& comp : components(cls).components) {
      TaggedComponent t;
      t.vertices = comp.vertices;
      if (static_cast<int>(comp.vertices.size()) <= n - 1) {
        t.tag = ComponentTag::Small;
      } else if (comp.bipartite) {
        t.tag = ComponentTag::Bipartite;
        t.side_a = comp.side_a;
        t.side_b = comp.side_b;
      }
      tagged.push_back(std::move(t));
    }
    cert.colors.push_back(std::move(tagged));
  }
  return cert;
}

MonoCycleVerdict verify_mono_cycle_free(const EdgeColoring& coloring, int n, VerifyMode mode) {
  if (n < 3) throw Error(Errc::CycleTooShort, "cycle length " + std::to_string(n) + " < 3");
  MonoCycleVerdict verdict;
  const bool certify = mode == VerifyMode::Certified && n % 2 == 1;
  const StructuralCertificate cert = certify ? structural_certificate(coloring, n) : StructuralCertificate{};

  for (Color c = 1; c <= coloring.color_count(); ++c) {
    const Graph cls = color_class(coloring, c);
    std::vector<std::vector<Vertex>> to_search;
    if (certify) {
      for (const TaggedComponent& comp : cert.colors[static_cast<std::size_t>(c - 1)]) {
        if (comp.tag == ComponentTag::Untagged) {
          to_search.push_back(comp.vertices);
        } else {
          ++verdict.components_certified;
        }
      }
    } else {
      to_search = vertex_components(cls);
    }
    for (const auto& comp : to_search) {
      ++verdict.components_searched;
      if (static_cast<int>(comp.size()) < n) continue;
      const InducedSubgraph sub = induced_subgraph(cls, comp);
      if (auto cycle = contains_cycle_of_length(sub.graph, n)) {
        for (Vertex& v : cycle->vertices) v = sub.lift(v);
        StructureWitness w;
        w.kind = WitnessKind::MonoCycle;
        w.color = c;
        w.component = comp;
        w.cycle = std::move(cycle);
        verdict.cycle_free = false;
        verdict.witness = std::move(w);
        return verdict;
      }
    }
  }
  return verdict;
}

namespace {

// Random recolouring walk over K_N that minimizes the number of edges lying
// on a monochromatic C_n of their own colour.
class LocalSearch {
 public:
  LocalSearch(const LowerBoundSearch& req) : req_(req), rng_(req.seed), base_(complete_graph(req.order)) {
    std::uniform_int_distribution<Color> pick(1, req.colors);
    colors_.resize(base_.edge_count());
    for (Color& c : colors_) c = pick(rng_);
  }

  LowerBoundResult run() {
    LowerBoundResult result;
    std::vector<std::size_t> bad = bad_edges();
    std::uniform_int_distribution<Color> pick(1, req_.colors);
    std::bernoulli_distribution uphill(0.1);
    for (; result.steps < req_.budget && !bad.empty(); ++result.steps) {
      const std::size_t e = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng_)];
      const Color old = colors_[e];
      Color next = pick(rng_);
      if (next == old) next = next % req_.colors + 1;
      colors_[e] = next;
      std::vector<std::size_t> trial = bad_edges();
      if (trial.size() <= bad.size() || uphill(rng_)) {
        bad = std::move(trial);
      } else {
        colors_[e] = old;
      }
    }
    if (bad.empty()) {
      EdgeColoring col(base_, req_.colors, colors_);
      if (verify_mono_cycle_free(col, req_.cycle_length, VerifyMode::Exhaustive).cycle_free) result.coloring = std::move(col);
    }
    result.exhausted = !result.coloring;
    return result;
  }

 private:
  std::vector<std::size_t> bad_edges() const {
    EdgeColoring col(base_, req_.colors, colors_);
    std::vector<std::size_t> bad;
    std::vector<Graph> classes;
    for (Color c = 1; c <= req_.colors; ++c) classes.push_back(color_class(col, c));
    const auto edges = base_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Graph& cls = classes[static_cast<std::size_t>(colors_[i] - 1)];
      if (on_cycle(cls, edges[i].u, edges[i].v)) bad.push_back(i);
    }
    return bad;
  }

  // Path from x to target with exactly `remaining` edges avoiding `visited`.
  bool path(const Graph& g, Vertex x, Vertex target, int remaining, std::vector<char>& visited) const {
    if (remaining == 1) return g.has_edge(x, target);
    for (const Vertex y : g.neighbors(x)) {
      if (y == target || visited[static_cast<std::size_t>(y)]) continue;
      visited[static_cast<std::size_t>(y)] = 1;
      const bool found = path(g, y, target, remaining - 1, visited);
      visited[static_cast<std::size_t>(y)] = 0;
      if (found) return true;
    }
    return false;
  }

  bool on_cycle(const Graph& g, Vertex u, Vertex v) const {
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    visited[static_cast<std::size_t>(u)] = 1;
    return path(g, u, v, req_.cycle_length - 1, visited);
  }

  const LowerBoundSearch& req_;
  std::mt19937_64 rng_;
  Graph base_;
  std::vector<Color> colors_;
};

}  // namespace

LowerBoundResult lower_bound_witness_search(const LowerBoundSearch& request) {
  if (request.colors < 1 || request.order < 0) throw Error(Errc::InvalidParams, "need k >= 1 and N >= 0");
  if (request.cycle_length < 3) throw Error(Errc::CycleTooShort, "cycle length " + std::to_string(request.cycle_length) + " < 3");
  if (request.mode == WitnessSearchMode::LocalSearch) return LocalSearch(request).run();

  SearchOptions options;
  options.node_budget = request.budget;
  const SearchResult search = ramsey_check(request.colors, request.cycle_length, request.order, options);
  LowerBoundResult result;
  result.steps = search.stats.nodes;
  if (search.verdict == Verdict::Counterexample) {
    result.coloring = search.counterexample;
  } else {
    result.exhausted = true;
    result.conclusive = search.verdict == Verdict::AllContain;
  }
  return result;
}

}  // namespace ramsey
