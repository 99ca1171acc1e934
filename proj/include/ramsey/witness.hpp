#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ramsey/cycle_matching.hpp"

namespace ramsey {

enum class WitnessKind {
  MonoCycle,                 // a monochromatic C_n
  NonbipComponentMatching,   // non-bipartite component with a matching of floor(n/2)+1 edges
  ComponentMatching,         // any component with a matching of ceil(n/2) edges
};

std::string_view to_string(WitnessKind kind);

/// A monochromatic object found in a coloring, in the coloring's vertex ids.
struct StructureWitness {
  WitnessKind kind = WitnessKind::MonoCycle;
  Color color = 0;
  std::vector<Vertex> component;
  std::optional<MatchingCertificate> matching;
  std::optional<CycleCertificate> cycle;
  // Proof of non-bipartiteness for NonbipComponentMatching.
  std::optional<CycleCertificate> odd_cycle;
};

}  // namespace ramsey
