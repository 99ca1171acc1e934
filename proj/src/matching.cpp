#include <algorithm>
#include <queue>

#include "ramsey/cycle_matching.hpp"

namespace ramsey {

namespace {

// Edmonds' blossom algorithm in the O(V^3) BFS formulation: grow an
// alternating tree from each exposed vertex, contract odd cycles by
// relabeling their base, and augment along the first exposed vertex found.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(static_cast<std::size_t>(g.vertex_count())),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        in_tree_(n_, 0),
        in_blossom_(n_, 0) {}

  std::vector<Vertex> run() {
    for (const Edge& e : g_.edges()) {
      if (match_[idx(e.u)] == -1 && match_[idx(e.v)] == -1) {
        match_[idx(e.u)] = e.v;
        match_[idx(e.v)] = e.u;
      }
    }
    for (Vertex root = 0; root < static_cast<Vertex>(n_); ++root) {
      if (match_[idx(root)] != -1) continue;
      Vertex v = find_augmenting_path(root);
      while (v != -1) {
        const Vertex pv = parent_[idx(v)];
        const Vertex next = match_[idx(pv)];
        match_[idx(v)] = pv;
        match_[idx(pv)] = v;
        v = next;
      }
    }
    return match_;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = 1;
      if (match_[idx(a)] == -1) break;
      a = parent_[idx(match_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex blossom_base, Vertex child) {
    while (base_[idx(v)] != blossom_base) {
      in_blossom_[idx(base_[idx(v)])] = 1;
      in_blossom_[idx(base_[idx(match_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);

    std::queue<Vertex> queue;
    in_tree_[idx(root)] = 1;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (const Vertex to : g_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
          const Vertex blossom_base = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, blossom_base, to);
          mark_path(to, blossom_base, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (!in_blossom_[idx(base_[i])]) continue;
            base_[i] = blossom_base;
            if (!in_tree_[i]) {
              in_tree_[i] = 1;
              queue.push(static_cast<Vertex>(i));
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] == -1) return to;
          const Vertex mate = match_[idx(to)];
          in_tree_[idx(mate)] = 1;
          queue.push(mate);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
};

}  // namespace

MatchingCertificate max_matching(const Graph& g) {
  const std::vector<Vertex> mate = BlossomMatcher(g).run();
  MatchingCertificate out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Vertex w = mate[static_cast<std::size_t>(v)];
    if (w > v) out.edges.push_back({v, w});
  }
  return out;
}

bool is_matching_of(const Graph& g, const MatchingCertificate& m) {
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return false;
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
  }
  return true;
}

}  // namespace ramsey
