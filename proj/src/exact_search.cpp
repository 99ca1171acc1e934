#include "ramsey/exact_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ramsey/constructions.hpp"
#include "ramsey/error.hpp"

namespace ramsey {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::AllContain: return "ALL_CONTAIN";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "UNKNOWN";
}

std::vector<Edge> search_edge_order(int N, EdgeOrder order) {
  std::vector<Edge> edges;
  if (order == EdgeOrder::Lex) {
    for (Vertex u = 0; u < N; ++u)
      for (Vertex v = u + 1; v < N; ++v) edges.push_back({u, v});
  } else {
    for (Vertex v = 1; v < N; ++v)
      for (Vertex u = 0; u < v; ++u) edges.push_back({u, v});
  }
  return edges;
}

namespace {

using Mask = std::uint64_t;
constexpr std::uint64_t kNoIndex = std::numeric_limits<std::uint64_t>::max();

struct SharedState {
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> mono_prunes{0};
  std::atomic<std::uint64_t> symmetry_prunes{0};
  // Lowest task index that produced a counterexample; tasks after it stop.
  std::atomic<std::uint64_t> best_task{kNoIndex};
};

// Depth-first colouring of the edges of K_N in a fixed order. Colour c may be
// used only once colours 1..c-1 have appeared, and an assignment that closes
// a monochromatic C_n through the new edge is rejected immediately.
class ColoringSearch {
 public:
  ColoringSearch(int k, int n, int N, const std::vector<Edge>& order, SharedState& shared)
      : k_(k), n_(n), order_(order), shared_(shared), adj_(static_cast<std::size_t>(k) * static_cast<std::size_t>(N), 0) {
    colors_.reserve(order.size());
  }

  // Applies a prefix. Returns false if it already contains a monochromatic C_n
  // or violates colour symmetry.
  bool replay(const SearchPrefix& prefix) {
    for (const Color c : prefix.colors) {
      if (c < 1 || c > k_ || c > max_used_ + 1) return false;
      if (!push(c)) return false;
    }
    return true;
  }

  enum class Outcome { Exhausted, Found, Stopped, Cancelled };

  // Explores the subtree below the current prefix. `task` is this subtree's
  // position in the global task order.
  Outcome explore(std::uint64_t task, std::vector<SearchPrefix>& open) {
    task_ = task;
    open_ = &open;
    return descend();
  }

  const std::vector<Color>& colors() const { return colors_; }

  // Enumerates all valid prefixes of length `depth` below the current one.
  void enumerate(std::size_t depth, std::vector<SearchPrefix>& out) {
    if (colors_.size() >= depth || colors_.size() == order_.size()) {
      out.push_back({colors_});
      return;
    }
    const int limit = std::min(k_, max_used_ + 1);
    for (Color c = 1; c <= limit; ++c) {
      if (push(c)) enumerate(depth, out);
      pop();
    }
  }

 private:
  Mask& adj(Color c, Vertex v) { return adj_[static_cast<std::size_t>(c - 1) * (adj_.size() / static_cast<std::size_t>(k_)) + static_cast<std::size_t>(v)]; }

  // Simple path from x to target with exactly `remaining` edges in colour c.
  bool path(Color c, Vertex x, Vertex target, int remaining, Mask visited) {
    if (remaining == 1) return (adj(c, x) >> target) & 1U;
    for (Mask cand = adj(c, x) & ~visited & ~(Mask{1} << target); cand != 0; cand &= cand - 1) {
      const int y = std::countr_zero(cand);
      if (path(c, y, target, remaining - 1, visited | (Mask{1} << y))) return true;
    }
    return false;
  }

  // Colours the next edge; always records it so pop() can undo. Returns
  // false if the edge closes a monochromatic C_n.
  bool push(Color c) {
    const Edge e = order_[colors_.size()];
    colors_.push_back(c);
    used_history_.push_back(max_used_);
    max_used_ = std::max(max_used_, c);
    adj(c, e.u) |= Mask{1} << e.v;
    adj(c, e.v) |= Mask{1} << e.u;
    return !path(c, e.u, e.v, n_ - 1, (Mask{1} << e.u));
  }

  void pop() {
    const Edge e = order_[colors_.size() - 1];
    const Color c = colors_.back();
    adj(c, e.u) &= ~(Mask{1} << e.v);
    adj(c, e.v) &= ~(Mask{1} << e.u);
    colors_.pop_back();
    max_used_ = used_history_.back();
    used_history_.pop_back();
  }

  bool out_of_budget() const { return shared_.budget != 0 && shared_.nodes.load(std::memory_order_relaxed) >= shared_.budget; }

  Outcome descend() {
    if (colors_.size() == order_.size()) return Outcome::Found;
    if (shared_.best_task.load(std::memory_order_relaxed) < task_) return Outcome::Cancelled;
    const int limit = std::min(k_, max_used_ + 1);
    if (limit < k_) shared_.symmetry_prunes.fetch_add(static_cast<std::uint64_t>(k_ - limit), std::memory_order_relaxed);
    Outcome result = Outcome::Exhausted;
    for (Color c = 1; c <= limit; ++c) {
      if (result == Outcome::Stopped || out_of_budget()) {
        SearchPrefix rest{colors_};
        rest.colors.push_back(c);
        open_->push_back(std::move(rest));
        result = Outcome::Stopped;
        continue;
      }
      shared_.nodes.fetch_add(1, std::memory_order_relaxed);
      if (push(c)) {
        const Outcome sub = descend();
        if (sub == Outcome::Found || sub == Outcome::Cancelled) return sub;  // colours_ keeps the solution
        if (sub == Outcome::Stopped) result = Outcome::Stopped;
      } else {
        shared_.mono_prunes.fetch_add(1, std::memory_order_relaxed);
      }
      pop();
    }
    return result;
  }

  int k_;
  int n_;
  const std::vector<Edge>& order_;
  SharedState& shared_;
  std::vector<Mask> adj_;
  std::vector<Color> colors_;
  std::vector<int> used_history_;
  int max_used_ = 0;
  std::uint64_t task_ = 0;
  std::vector<SearchPrefix>* open_ = nullptr;
};

EdgeColoring coloring_from_order(int k, int N, const std::vector<Edge>& order, const std::vector<Color>& colors) {
  std::vector<std::pair<Edge, Color>> pairs;
  for (std::size_t i = 0; i < order.size(); ++i) pairs.push_back({order[i], colors[i]});
  std::sort(pairs.begin(), pairs.end());
  std::vector<Color> sorted;
  for (const auto& p : pairs) sorted.push_back(p.second);
  return EdgeColoring(complete_graph(N), k, std::move(sorted));
}

struct TaskOutcome {
  ColoringSearch::Outcome outcome = ColoringSearch::Outcome::Exhausted;
  std::vector<Color> solution;
  std::vector<SearchPrefix> open;
};

}  // namespace

SearchResult ramsey_check(int k, int n, int N, const SearchOptions& options) {
  if (k < 1) throw Error(Errc::InvalidParams, "need at least one colour");
  if (n < 3) throw Error(Errc::CycleTooShort, "cycle length " + std::to_string(n) + " < 3");
  if (N < 0 || N > 64) throw Error(Errc::InvalidParams, "exact search supports 0 <= N <= 64");
  const auto start = std::chrono::steady_clock::now();

  const std::vector<Edge> order = search_edge_order(N, options.order);
  SharedState shared;
  shared.budget = options.node_budget;

  // Seed tasks, then split them to the parallel depth in DFS order so that
  // task indices follow the single-threaded exploration order.
  std::vector<SearchPrefix> roots = options.resume.empty() ? std::vector<SearchPrefix>{SearchPrefix{}} : options.resume;
  std::vector<SearchPrefix> tasks;
  const int threads = std::max(1, options.threads);
  for (const SearchPrefix& root : roots) {
    ColoringSearch seed(k, n, N, order, shared);
    if (!seed.replay(root)) {
      shared.mono_prunes.fetch_add(1);
      continue;
    }
    if (threads == 1) {
      tasks.push_back(root);
    } else {
      seed.enumerate(std::max(root.colors.size(), static_cast<std::size_t>(std::max(options.split_depth, 0))), tasks);
    }
  }

  std::vector<TaskOutcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      TaskOutcome& out = outcomes[i];
      if (shared.best_task.load() < i) {
        out.outcome = ColoringSearch::Outcome::Cancelled;
        continue;
      }
      ColoringSearch search(k, n, N, order, shared);
      if (!search.replay(tasks[i])) {
        shared.mono_prunes.fetch_add(1);
        continue;
      }
      out.outcome = search.explore(i, out.open);
      if (out.outcome == ColoringSearch::Outcome::Found) {
        out.solution = search.colors();
        std::uint64_t current = shared.best_task.load();
        while (i < current && !shared.best_task.compare_exchange_weak(current, i)) {
        }
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SearchResult result;
  const std::uint64_t best = shared.best_task.load();
  if (best != kNoIndex) {
    result.verdict = Verdict::Counterexample;
    result.counterexample = coloring_from_order(k, N, order, outcomes[best].solution);
    if (!verify_mono_cycle_free(*result.counterexample, n, VerifyMode::Exhaustive).cycle_free) {
      throw std::logic_error("search produced a colouring with a monochromatic cycle");
    }
  } else {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      auto& open = outcomes[i].open;
      result.open.insert(result.open.end(), open.begin(), open.end());
    }
    result.verdict = result.open.empty() ? Verdict::AllContain : Verdict::Indeterminate;
  }
  result.stats.nodes = shared.nodes.load();
  result.stats.mono_cycle_prunes = shared.mono_prunes.load();
  result.stats.symmetry_prunes = shared.symmetry_prunes.load();
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string format_checkpoint(const std::vector<SearchPrefix>& open) {
  std::ostringstream out;
  for (const SearchPrefix& p : open) {
    out << "prefix " << p.colors.size() << ' ';
    for (std::size_t i = 0; i < p.colors.size(); ++i) out << (i ? "," : "") << p.colors[i];
    out << '\n';
  }
  return out.str();
}

std::vector<SearchPrefix> parse_checkpoint(std::string_view text) {
  std::vector<SearchPrefix> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    std::size_t count = 0;
    std::string list;
    if (!(fields >> tag >> count) || tag != "prefix") {
      throw Error(Errc::ParseError, "checkpoint line " + std::to_string(line_no) + ": expected 'prefix <edge-index> <colors>'");
    }
    fields >> list;
    SearchPrefix p;
    std::istringstream items(list);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(Errc::ParseError, "checkpoint line " + std::to_string(line_no) + ": bad colour '" + item + "'");
      }
      p.colors.push_back(std::stoi(item));
    }
    if (p.colors.size() != count) {
      throw Error(Errc::ParseError, "checkpoint line " + std::to_string(line_no) + ": edge-index does not match colour list");
    }
    out.push_back(std::move(p));
  }
  return out;
}

EdgeColoring counterexample_minimize(const EdgeColoring& coloring, int n) {
  if (!verify_mono_cycle_free(coloring, n).cycle_free) {
    throw Error(Errc::NotACounterexample, "colouring contains a monochromatic C_" + std::to_string(n));
  }

  // Compact colours so unused ones disappear.
  auto compact = [](const EdgeColoring& col) {
    std::vector<Color> remap(static_cast<std::size_t>(col.color_count()) + 1, 0);
    Color next = 0;
    for (Color c = 1; c <= col.color_count(); ++c)
      if (col.class_size(c) > 0) remap[static_cast<std::size_t>(c)] = ++next;
    std::vector<Color> colors;
    for (const Color c : col.colors()) colors.push_back(remap[static_cast<std::size_t>(c)]);
    return EdgeColoring(col.base(), std::max<Color>(next, 1), std::move(colors));
  };

  EdgeColoring current = compact(coloring);
  bool merged = true;
  while (merged && current.color_count() > 1) {
    merged = false;
    for (Color keep = 1; keep <= current.color_count() && !merged; ++keep) {
      for (Color drop = keep + 1; drop <= current.color_count() && !merged; ++drop) {
        std::vector<Color> colors(current.colors().begin(), current.colors().end());
        for (Color& c : colors)
          if (c == drop) c = keep;
        EdgeColoring candidate = compact(EdgeColoring(current.base(), current.color_count(), std::move(colors)));
        if (verify_mono_cycle_free(candidate, n).cycle_free) {
          current = std::move(candidate);
          merged = true;
        }
      }
    }
  }

  std::vector<Vertex> keep;
  for (Vertex v = 0; v < current.vertex_count(); ++v)
    if (current.base().degree(v) > 0) keep.push_back(v);
  if (static_cast<int>(keep.size()) < current.vertex_count()) current = induced_coloring(current, keep).coloring;
  return current;
}

}  // namespace ramsey
