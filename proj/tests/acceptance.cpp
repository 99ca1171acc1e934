// Acceptance suite. One PASS/FAIL line per criterion; pass criterion numbers
// as arguments to run a subset.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/cycle_matching.hpp"
#include "ramsey/decomposition.hpp"
#include "ramsey/exact_search.hpp"
#include "ramsey/proof_engine.hpp"

using namespace ramsey;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

void fail(Result& r, const std::string& why) {
  if (r.pass) r.detail = why;
  r.pass = false;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// BFS 2-colouring: -1 if the component of `start` is not bipartite, else its size.
int bipartite_component(const Graph& g, Vertex start, std::vector<int>& side) {
  std::queue<Vertex> q;
  side[static_cast<std::size_t>(start)] = 0;
  q.push(start);
  int size = 0;
  bool ok = true;
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    ++size;
    for (const Vertex w : g.neighbors(u)) {
      auto& s = side[static_cast<std::size_t>(w)];
      if (s < 0) {
        s = 1 - side[static_cast<std::size_t>(u)];
        q.push(w);
      } else if (s == side[static_cast<std::size_t>(u)]) {
        ok = false;
      }
    }
  }
  return ok ? size : -1;
}

Result erdos_gallai() {
  Result r;
  long long graphs = 0, premises = 0;
  for (int v = 1; v <= 7; ++v) {
    const int pairs = v * (v - 1) / 2;
    for (std::uint64_t code = 0; code < (1ULL << pairs); ++code) {
      ++graphs;
      const int e = std::popcount(code);
      int needed = 0;
      for (int n = 3; n <= 7; ++n)
        if (e >= eg_threshold(n, v)) {
          needed = n;
          ++premises;
        }
      if (needed == 0) continue;
      const Graph g = oracle::graph_from_code(v, code);
      const auto c = longest_cycle(g);
      if (!c || c->length() < needed || !is_cycle_of(g, *c)) {
        fail(r, "v=" + std::to_string(v) + " code=" + std::to_string(code) + " needs " + std::to_string(needed));
      }
    }
  }
  r.detail = (r.pass ? "" : r.detail + "; ") + std::to_string(graphs) + " graphs, " + std::to_string(premises) +
             " (graph, n) pairs above threshold";
  return r;
}

// Verdicts at N-1 and N, with the counterexample checked colour by colour by
// the brute-force cycle oracle.
std::string ramsey_value(Result& r, int n, int value, double limit) {
  const auto start = std::chrono::steady_clock::now();
  const SearchResult below = ramsey_check(2, n, value - 1);
  const SearchResult at = ramsey_check(2, n, value);
  const double t = seconds_since(start);
  const std::string tag = "R(C" + std::to_string(n) + ")";
  if (at.verdict != Verdict::AllContain) fail(r, tag + ": N=" + std::to_string(value) + " not ALL_CONTAIN");
  if (below.verdict != Verdict::Counterexample || !below.counterexample) {
    fail(r, tag + ": no counterexample at N-1");
  } else {
    const EdgeColoring& col = *below.counterexample;
    if (!(col.base() == complete_graph(value - 1))) fail(r, tag + ": counterexample is not on K_{N-1}");
    for (Color c = 1; c <= col.color_count(); ++c)
      if (oracle::has_cycle_of_length(color_class(col, c), n)) fail(r, tag + ": counterexample has a mono cycle");
  }
  if (t > limit) fail(r, tag + " took " + std::to_string(t) + " s");
  std::ostringstream line;
  line << tag << "=" << value << " " << at.stats.nodes + below.stats.nodes << " nodes " << t << " s";
  return line.str();
}

Result small_ramsey() {
  Result r;
  std::string detail;
  for (const auto& [n, value, limit] : {std::tuple{6, 8, 600.0}, std::tuple{5, 9, 3600.0}, std::tuple{3, 6, 60.0},
                                        std::tuple{4, 6, 60.0}}) {
    detail += (detail.empty() ? "" : "; ") + ramsey_value(r, n, value, limit);
  }
  if (r.pass) r.detail = detail;
  return r;
}

Result constructions() {
  Result r;
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  for (const auto& [k, n] : {std::pair{2, 5}, std::pair{2, 7}, std::pair{3, 5}, std::pair{3, 7}, std::pair{4, 5}}) {
    const std::string tag = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
    const EdgeColoring col = bondy_erdos_coloring(k, n);
    const int v = col.base().vertex_count();
    if (v != (1 << (k - 1)) * (n - 1)) fail(r, tag + " has " + std::to_string(v) + " vertices");
    if (!(col.base() == complete_graph(v))) fail(r, tag + " is not a colouring of a complete graph");
    if (!structural_certificate(col, n).all_tagged()) fail(r, tag + " has untagged components");
    if (v <= 32) {
      const MonoCycleVerdict m = verify_mono_cycle_free(col, n, VerifyMode::Exhaustive);
      if (!m.cycle_free) fail(r, tag + " contains a monochromatic cycle");
    }
    detail += tag + " v=" + std::to_string(v) + " ";
  }
  const double t = seconds_since(start);
  if (t > 300) fail(r, "took " + std::to_string(t) + " s");
  if (r.pass) r.detail = detail + std::to_string(t) + " s";
  return r;
}

Result decomposition_invariants() {
  Result r;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> order(1, 20);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  long long hypothesis_cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int v = order(rng);
    const double p = density(rng) * density(rng);  // skewed towards sparse graphs
    const Graph g = oracle::random_graph(v, p, rng);
    for (const int n : {3, 5, 7}) {
      const FLDecomposition d = fl_decompose(g, n);
      const std::string tag = "trial " + std::to_string(trial) + " n=" + std::to_string(n) + ": ";
      std::vector<int> part(static_cast<std::size_t>(v), 0);
      bool cover = true;
      for (const auto& [set, label] : {std::pair{&d.v1, 1}, std::pair{&d.v2, 2}, std::pair{&d.v3, 3}})
        for (const Vertex x : *set) {
          if (part[static_cast<std::size_t>(x)] != 0) cover = false;
          part[static_cast<std::size_t>(x)] = label;
        }
      for (const int p2 : part) cover = cover && p2 != 0;
      if (!cover) fail(r, tag + "not a partition");

      long long sparse_edges = 0;
      for (const Edge& e : g.edges()) {
        const int a = part[static_cast<std::size_t>(e.u)], b = part[static_cast<std::size_t>(e.v)];
        if ((a == 3) != (b == 3)) fail(r, tag + "(A) violated");
        if (a != 3 && a == b) fail(r, tag + "(B) violated");
        if (a == 3 && b == 3) ++sparse_edges;
      }
      std::vector<int> side(static_cast<std::size_t>(v), -1);
      bool nonbip_matching_large = false;
      for (Vertex x = 0; x < v; ++x) {
        if (side[static_cast<std::size_t>(x)] >= 0) continue;
        const bool bip = bipartite_component(g, x, side) >= 0;
        if (bip == (part[static_cast<std::size_t>(x)] == 3)) fail(r, tag + "component placed on the wrong side of V3");
      }
      // Components of G[V3] are exactly the non-bipartite components of G.
      const InducedSubgraph sparse = induced_subgraph(g, d.v3);
      for (const auto& comp : vertex_components(sparse.graph)) {
        const Graph h = induced_subgraph(sparse.graph, comp).graph;
        std::vector<int> s(comp.size(), -1);
        if (bipartite_component(h, 0, s) >= 0) fail(r, tag + "bipartite component inside V3");
        if (2 * static_cast<int>(max_matching(h).size()) >= n + 1) nonbip_matching_large = true;
      }
      if (nonbip_matching_large == d.hypothesis_holds) fail(r, tag + "matching hypothesis misreported");
      if (!nonbip_matching_large) {
        ++hypothesis_cases;
        if (!d.v3.empty() && 2 * sparse_edges > static_cast<long long>(n) * (static_cast<long long>(d.v3.size()) - 1))
          fail(r, tag + "(C) violated");
      }
    }
  }
  if (r.pass) r.detail = "3000 decompositions, (C) applicable in " + std::to_string(hypothesis_cases);
  return r;
}

Result peeling_density() {
  Result r;
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 500; ++trial) {
    const int v = std::uniform_int_distribution<int>(2, 40)(rng);
    const Rational delta(std::uniform_int_distribution<int>(1, 50)(rng), 100);
    const long long total = v * (v - 1) / 2;
    const long long may_drop = static_cast<long long>(floor(delta * total));
    const Graph kv = complete_graph(v);
    std::vector<Edge> all(kv.edges().begin(), kv.edges().end());
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(total - std::uniform_int_distribution<long long>(0, may_drop)(rng)));
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : all) pairs.emplace_back(e.u, e.v);
    const Graph g = build_graph(v, pairs);
    if (Rational(g.edge_count()) < (1 - delta) * total) {
      fail(r, "generator produced a graph below density");
      continue;
    }
    const int target = std::uniform_int_distribution<int>(1, v)(rng);
    const PeelResult p = min_degree_peel(g, target);
    const long long target_pairs = static_cast<long long>(target) * (target - 1) / 2;
    if (p.graph.vertex_count() != target) fail(r, "trial " + std::to_string(trial) + ": wrong order");
    if (Rational(p.graph.edge_count()) < (1 - delta) * target_pairs)
      fail(r, "trial " + std::to_string(trial) + ": density lost");
  }
  if (r.pass) r.detail = "500 instances";
  return r;
}

Result inequality_grid() {
  Result r;
  int runs = 0;
  for (int k = 4; k <= 8; ++k)
    for (const Rational& eps : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
      for (const int n : {5, 7, 101}) {
        const InequalityReport rep = lemma4_inequality_check(k, eps, n);
        ++runs;
        const bool interval_empty = (1 + eps) * k * n > k * n + eps * k * n / 2;
        if (!rep.chain_holds || !rep.contradiction || !interval_empty)
          fail(r, "k=" + std::to_string(k) + " eps=" + to_string(eps) + " n=" + std::to_string(n));
      }
  if (r.pass) r.detail = std::to_string(runs) + " parameter triples";
  return r;
}

Result matching_oracle() {
  Result r;
  long long checked = 0;
  auto check = [&](const Graph& g, const std::string& tag) {
    ++checked;
    const MatchingCertificate m = max_matching(g);
    if (!is_matching_of(g, m) || static_cast<int>(m.size()) != oracle::matching_number(g)) fail(r, tag);
  };
  for (int v = 0; v <= 6; ++v) {
    const int pairs = v * (v - 1) / 2;
    for (std::uint64_t code = 0; code < (1ULL << pairs); ++code)
      check(oracle::graph_from_code(v, code), "v=" + std::to_string(v) + " code=" + std::to_string(code));
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const int v = std::uniform_int_distribution<int>(1, 8)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    check(oracle::random_graph(v, p, rng), "random trial " + std::to_string(trial));
  }
  if (r.pass) r.detail = std::to_string(checked) + " graphs";
  return r;
}

Result even_engine_suite() {
  Result r;
  std::mt19937_64 rng(13);
  const Graph k13 = complete_graph(13);
  int applicable = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const EdgeColoring col = oracle::random_coloring(k13, 2, rng);
    const EvenReport rep = even_engine(col, 6, Rational(1, 12));
    if (!rep.pigeonhole_holds) continue;
    ++applicable;
    const std::string tag = "trial " + std::to_string(trial) + ": ";
    if (!rep.witness || !rep.witness->matching) {
      fail(r, tag + "no witness");
      continue;
    }
    const StructureWitness& w = *rep.witness;
    const Graph cls = color_class(col, w.color);
    std::set<Vertex> used;
    bool ok = w.matching->size() == 3;
    for (const Edge& e : w.matching->edges) {
      ok = ok && cls.has_edge(e.u, e.v) && used.insert(e.u).second && used.insert(e.v).second;
    }
    // All matched vertices in one component of the colour class.
    std::vector<int> seen(13, -1);
    bipartite_component(cls, w.matching->edges.front().u, seen);
    for (const Vertex x : used) ok = ok && seen[static_cast<std::size_t>(x)] >= 0;
    if (!ok || !check_witness(col, 6, w).empty()) fail(r, tag + "witness fails verification");
  }
  if (applicable == 0) fail(r, "pigeonhole never applied");
  if (r.pass) r.detail = std::to_string(applicable) + " of 100 colourings met the pigeonhole bound, all witnessed";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<int, std::function<Result()>>> criteria = {
      {1, erdos_gallai},   {2, small_ramsey},    {3, constructions},   {4, decomposition_invariants},
      {5, peeling_density}, {6, inequality_grid}, {7, matching_oracle}, {8, even_engine_suite},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

  bool all = true;
  for (const auto& [id, run] : criteria) {
    if (!wanted.empty() && !wanted.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d %s %.2fs %s\n", id, r.pass ? "PASS" : "FAIL", seconds_since(start), r.detail.c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
