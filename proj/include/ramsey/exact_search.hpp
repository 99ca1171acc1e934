#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class Verdict { AllContain, Counterexample, Indeterminate };

std::string_view to_string(Verdict verdict);

/// An open subtree of the colouring search: colours of edges 0..size()-1 in
/// search order.
struct SearchPrefix {
  std::vector<Color> colors;

  friend bool operator==(const SearchPrefix&, const SearchPrefix&) = default;
};

enum class EdgeOrder {
  // (min endpoint, max endpoint).
  Lex,
  // (max endpoint, min endpoint): vertex m's edges follow the complete K_m,
  // so cycles close earlier.
  Colex,
};

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited
  int threads = 1;
  // Prefix length at which work is split between threads.
  int split_depth = 6;
  EdgeOrder order = EdgeOrder::Lex;
  // Start from these open prefixes instead of the root.
  std::vector<SearchPrefix> resume;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t mono_cycle_prunes = 0;
  std::uint64_t symmetry_prunes = 0;
  double wall_seconds = 0;
};

struct SearchResult {
  Verdict verdict = Verdict::Indeterminate;
  std::optional<EdgeColoring> counterexample;
  SearchStats stats;
  // Unexplored subtrees when the budget ran out.
  std::vector<SearchPrefix> open;
};

/// Exhaustive search over k-colourings of K_N for one without a monochromatic
/// C_n. AllContain is a proof that R_k(C_n) <= N; any counterexample is
/// re-verified by an independent cycle search before it is returned.
SearchResult ramsey_check(int k, int n, int N, const SearchOptions& options = {});

/// Edges of K_N in the order the search assigns them.
std::vector<Edge> search_edge_order(int N, EdgeOrder order);

/// One line per prefix: "prefix <edge-index> <c1,c2,...>", where edge-index
/// is the number of decided edges.
std::string format_checkpoint(const std::vector<SearchPrefix>& open);
std::vector<SearchPrefix> parse_checkpoint(std::string_view text);

/// Drops unused colours, greedily merges colour pairs and drops isolated
/// vertices while the colouring stays free of monochromatic C_n.
/// Throws NotACounterexample if the input already contains one.
EdgeColoring counterexample_minimize(const EdgeColoring& coloring, int n);

}  // namespace ramsey
