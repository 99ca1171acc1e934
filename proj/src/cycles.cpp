#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <string>

#include "ramsey/cycle_matching.hpp"
#include "ramsey/error.hpp"

namespace ramsey {

namespace {

using Mask = std::uint64_t;
constexpr int kMaxComponentOrder = 64;

Mask bit(int v) { return Mask{1} << v; }

// One connected component as 64-bit adjacency masks over local ids.
struct MaskGraph {
  std::vector<Mask> adj;
  std::vector<Vertex> original;

  int order() const { return static_cast<int>(adj.size()); }
};

std::vector<MaskGraph> mask_components(const Graph& g) {
  std::vector<MaskGraph> out;
  for (const auto& comp : vertex_components(g)) {
    if (comp.size() < 3) continue;  // cannot carry a cycle
    if (comp.size() > static_cast<std::size_t>(kMaxComponentOrder)) {
      throw Error(Errc::InvalidParams, "exact cycle search supports components of at most 64 vertices, got " +
                                           std::to_string(comp.size()));
    }
    const InducedSubgraph sub = induced_subgraph(g, comp);
    MaskGraph mg;
    mg.adj.assign(comp.size(), 0);
    for (const Edge& e : sub.graph.edges()) {
      mg.adj[static_cast<std::size_t>(e.u)] |= bit(e.v);
      mg.adj[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
    mg.original = sub.original;
    out.push_back(std::move(mg));
  }
  return out;
}

class FixedLengthSearch {
 public:
  FixedLengthSearch(const MaskGraph& g, int length) : g_(g), length_(length), dist_(static_cast<std::size_t>(g.order())) {}

  bool run() {
    for (int s = 0; s + length_ <= g_.order(); ++s) {
      start_ = s;
      allowed_ = ~Mask{0} << s;  // vertices >= s; the start is the cycle minimum
      if (g_.order() < 64) allowed_ &= bit(g_.order()) - 1;
      compute_distances();
      path_.assign(1, s);
      if (extend(s, bit(s))) return true;
    }
    return false;
  }

  CycleCertificate certificate() const {
    CycleCertificate c;
    for (const int v : path_) c.vertices.push_back(g_.original[static_cast<std::size_t>(v)]);
    return c;
  }

 private:
  void compute_distances() {
    std::fill(dist_.begin(), dist_.end(), kFar);
    dist_[static_cast<std::size_t>(start_)] = 0;
    Mask frontier = bit(start_);
    Mask seen = frontier;
    for (int d = 1; frontier != 0; ++d) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= g_.adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= allowed_ & ~seen;
      seen |= next;
      for (Mask f = next; f != 0; f &= f - 1) dist_[static_cast<std::size_t>(std::countr_zero(f))] = d;
      frontier = next;
    }
  }

  bool extend(int tip, Mask visited) {
    const int depth = static_cast<int>(path_.size());
    if (depth == length_) return (g_.adj[static_cast<std::size_t>(tip)] & bit(start_)) != 0;
    for (Mask cand = g_.adj[static_cast<std::size_t>(tip)] & allowed_ & ~visited; cand != 0; cand &= cand - 1) {
      const int y = std::countr_zero(cand);
      if (dist_[static_cast<std::size_t>(y)] > length_ - depth) continue;
      path_.push_back(y);
      if (extend(y, visited | bit(y))) return true;
      path_.pop_back();
    }
    return false;
  }

  static constexpr int kFar = 1 << 20;

  const MaskGraph& g_;
  int length_;
  int start_ = 0;
  Mask allowed_ = 0;
  std::vector<int> dist_;
  std::vector<int> path_;
};

class LongestCycleSearch {
 public:
  explicit LongestCycleSearch(const MaskGraph& g) : g_(g) {}

  void run(std::vector<int>& best) {
    best_ = &best;
    for (int s = 0; s < g_.order(); ++s) {
      if (g_.order() - s <= static_cast<int>(best.size())) break;
      start_ = s;
      allowed_ = ~Mask{0} << s;
      if (g_.order() < 64) allowed_ &= bit(g_.order()) - 1;
      path_.assign(1, s);
      extend(s, bit(s));
    }
  }

 private:
  // Vertices reachable from `tip` through unvisited allowed vertices.
  int reachable(int tip, Mask visited) const {
    const Mask open = allowed_ & ~visited;
    Mask seen = 0;
    Mask frontier = g_.adj[static_cast<std::size_t>(tip)] & open;
    while (frontier != 0) {
      seen |= frontier;
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= g_.adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & open & ~seen;
    }
    return std::popcount(seen);
  }

  void extend(int tip, Mask visited) {
    const int depth = static_cast<int>(path_.size());
    if (depth >= 3 && (g_.adj[static_cast<std::size_t>(tip)] & bit(start_)) && depth > static_cast<int>(best_->size())) {
      *best_ = path_;
    }
    if (depth + reachable(tip, visited) <= static_cast<int>(best_->size())) return;
    for (Mask cand = g_.adj[static_cast<std::size_t>(tip)] & allowed_ & ~visited; cand != 0; cand &= cand - 1) {
      const int y = std::countr_zero(cand);
      path_.push_back(y);
      extend(y, visited | bit(y));
      path_.pop_back();
      if (static_cast<int>(best_->size()) == g_.order() - start_) return;  // cannot do better
    }
  }

  const MaskGraph& g_;
  int start_ = 0;
  Mask allowed_ = 0;
  std::vector<int> path_;
  std::vector<int>* best_ = nullptr;
};

}  // namespace

std::optional<CycleCertificate> contains_cycle_of_length(const Graph& g, int length) {
  if (length < 3) throw Error(Errc::CycleTooShort, "cycle length " + std::to_string(length) + " < 3");
  if (length > g.vertex_count()) return std::nullopt;
  for (const MaskGraph& comp : mask_components(g)) {
    if (comp.order() < length) continue;
    FixedLengthSearch search(comp, length);
    if (search.run()) return search.certificate();
  }
  return std::nullopt;
}

std::optional<CycleCertificate> longest_cycle(const Graph& g) {
  std::optional<CycleCertificate> best;
  for (const MaskGraph& comp : mask_components(g)) {
    if (best && comp.order() <= best->length()) continue;
    std::vector<int> local(best ? static_cast<std::size_t>(best->length()) : 0, -1);
    const std::size_t before = local.size();
    LongestCycleSearch(comp).run(local);
    if (local.size() > before) {
      CycleCertificate c;
      for (const int v : local) c.vertices.push_back(comp.original[static_cast<std::size_t>(v)]);
      best = std::move(c);
    }
  }
  return best;
}

std::optional<CycleCertificate> find_odd_cycle(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> depth(n, -1);
  std::vector<Vertex> parent(n, -1);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (depth[static_cast<std::size_t>(root)] != -1) continue;
    depth[static_cast<std::size_t>(root)] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (const Vertex y : g.neighbors(x)) {
        if (depth[static_cast<std::size_t>(y)] == -1) {
          depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push(y);
        } else if (depth[static_cast<std::size_t>(y)] % 2 == depth[static_cast<std::size_t>(x)] % 2) {
          // Same BFS parity: tree paths to the common ancestor plus {x,y} close an odd cycle.
          std::vector<Vertex> left{x};
          std::vector<Vertex> right{y};
          Vertex a = x;
          Vertex b = y;
          while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
              a = parent[static_cast<std::size_t>(a)];
              left.push_back(a);
            } else {
              b = parent[static_cast<std::size_t>(b)];
              right.push_back(b);
            }
          }
          right.pop_back();  // common ancestor already ends `left`
          CycleCertificate c;
          c.vertices = std::move(left);
          c.vertices.insert(c.vertices.end(), right.rbegin(), right.rend());
          return c;
        }
      }
    }
  }
  return std::nullopt;
}

long long eg_threshold(int n, int v) {
  if (n < 3) throw Error(Errc::CycleTooShort, "cycle length " + std::to_string(n) + " < 3");
  if (v < 1) throw Error(Errc::InvalidParams, "vertex count must be positive");
  return static_cast<long long>(n - 1) * (v - 1) / 2 + 1;
}

bool is_cycle_of(const Graph& g, const CycleCertificate& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3) return false;
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

}  // namespace ramsey
