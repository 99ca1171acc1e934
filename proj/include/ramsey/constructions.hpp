#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

/// k-coloring of K_{2^{k-1}(n-1)}: blocks of n-1 consecutive ids are colour-1
/// cliques, and two blocks whose indices first differ in bit h are joined in
/// colour h+2. This is the doubling recursion unrolled, so the colour-i class
/// is a disjoint union of complete bipartite graphs between contiguous ranges.
/// Requires k >= 2 and n >= 4.
EdgeColoring bondy_erdos_coloring(int k, int n);

enum class ComponentTag { Small, Bipartite, Untagged };

std::string_view to_string(ComponentTag tag);

struct TaggedComponent {
  std::vector<Vertex> vertices;
  ComponentTag tag = ComponentTag::Untagged;
  std::vector<Vertex> side_a;  // bipartition when tag == Bipartite
  std::vector<Vertex> side_b;
};

/// Per-colour component inventory of a coloring, for odd cycle length n.
/// A component is Small when it has at most n-1 vertices, else Bipartite when
/// it has no odd cycle, else Untagged.
struct StructuralCertificate {
  int cycle_length = 0;
  std::vector<std::vector<TaggedComponent>> colors;  // index c-1

  bool all_tagged() const;
  std::size_t untagged_count() const;
};

/// Throws EvenCycleLength for even n.
StructuralCertificate structural_certificate(const EdgeColoring& coloring, int n);

enum class VerifyMode {
  // Structural certificate first (odd n); exhaustive search only on Untagged components.
  Certified,
  // Exhaustive cycle search on every component of every colour class.
  Exhaustive,
};

struct MonoCycleVerdict {
  bool cycle_free = true;
  std::optional<StructureWitness> witness;  // set iff !cycle_free
  int components_certified = 0;
  int components_searched = 0;
};

/// Decides whether any colour class contains C_n.
MonoCycleVerdict verify_mono_cycle_free(const EdgeColoring& coloring, int n, VerifyMode mode = VerifyMode::Certified);

enum class WitnessSearchMode { Exhaustive, LocalSearch };

struct LowerBoundSearch {
  int colors = 2;
  int cycle_length = 5;
  int order = 8;
  WitnessSearchMode mode = WitnessSearchMode::Exhaustive;
  // Node budget for exhaustive mode, step budget for local search; 0 means
  // unlimited in exhaustive mode.
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
};

struct LowerBoundResult {
  std::optional<EdgeColoring> coloring;  // a k-colouring of K_N without monochromatic C_n
  // No colouring found; conclusive only when `conclusive` is also set.
  bool exhausted = false;
  bool conclusive = false;
  std::uint64_t steps = 0;
};

LowerBoundResult lower_bound_witness_search(const LowerBoundSearch& request);

}  // namespace ramsey
