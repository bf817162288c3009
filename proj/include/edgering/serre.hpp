#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgering/facets.hpp"
#include "edgering/graph.hpp"

namespace edgering {

using OddCyclePair = std::pair<OddCycle, OddCycle>;

struct R1Result {
  bool satisfied = true;
  /// Every facet breaking the connectivity condition, in facet order.
  std::vector<FacetDescriptor> violations;

  bool operator==(const R1Result&) const = default;
};

struct ClassificationReport {
  bool bipartite = false;
  bool normal = false;
  bool r1 = false;
  std::vector<FacetDescriptor> r1_violations;
  std::optional<OddCyclePair> occ_violation;
  std::string notes;

  bool operator==(const ClassificationReport&) const = default;
};

/// nullopt when every two vertex-disjoint chordless odd cycles are joined by
/// an edge; otherwise the first violating pair in cycle-list order.
/// Throws UnsupportedInput on a disconnected graph.
std::optional<OddCyclePair> satisfies_odd_cycle_condition(const Graph& g);

/// Combinatorial (R1) test. Bipartite graphs short-circuit to satisfied.
/// With early_exit the scan stops at the first violation.
/// Throws UnsupportedInput on a disconnected graph.
R1Result satisfies_r1(const Graph& g, bool early_exit = false);

/// Throws UnsupportedInput on a disconnected graph.
ClassificationReport classify(const Graph& g, bool early_exit = false);

}  // namespace edgering
