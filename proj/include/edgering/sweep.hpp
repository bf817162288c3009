#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

/// Outcome of every cross-check on one connected nonbipartite graph.
struct InvariantReport {
  bool criterion_matches_oracle = true;   ///< verdicts and violation lists equal
  bool even_lattice = true;               ///< edge span is the even-sum lattice; basis identity
  bool height_one = true;                 ///< every facet has a generator at height 1
  bool connectivity_pointwise = true;     ///< lattice condition two matches the connectivity test
  bool decomposition = true;              ///< face lattice splitting for every fundamental set
  bool normal_implies_r1 = true;
  bool facet_support = true;  ///< form >= 0, vanishes somewhere, facet rank d - 2

  bool normal = false;
  bool r1 = false;
  int facet_count = 0;
  int half_forms = 0;           ///< facets whose form carries denominator 2
  int singleton_mismatches = 0;  ///< vertices where "regular" and "{i} fundamental" differ
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Runs every check. Pre: g connected and nonbipartite.
InvariantReport check_invariants(const Graph& g);

/// Number of labelled graphs on d vertices (2^(d choose 2)); d <= 8.
std::uint64_t labelled_graph_count(int d);
/// The labelled graph on d vertices whose edge set is the bit pattern `mask`
/// over the pairs (1,2), (1,3), (2,3), (1,4), ... (graph6 column order).
Graph labelled_graph(int d, std::uint64_t mask);

struct SweepSummary {
  std::size_t graphs = 0;
  std::size_t skipped = 0;  ///< disconnected or bipartite
  std::size_t checked = 0;
  std::size_t normal = 0;
  std::size_t r1 = 0;
  std::size_t facets = 0;
  std::size_t half_forms = 0;
  std::size_t singleton_mismatch_graphs = 0;
  std::size_t disagreements = 0;  ///< graphs with at least one failed check

  // Per-check failure counts.
  std::size_t criterion_oracle_failures = 0;
  std::size_t even_lattice_failures = 0;
  std::size_t height_one_failures = 0;
  std::size_t pointwise_failures = 0;
  std::size_t decomposition_failures = 0;
  std::size_t normality_failures = 0;
  std::size_t facet_support_failures = 0;

  /// Lowest-index failing graph (graph6) and its failure messages.
  std::optional<std::string> first_failure_graph6;
  std::vector<std::string> first_failure_messages;
};

struct SweepOptions {
  unsigned jobs = 0;  ///< 0 = hardware concurrency
  bool early_exit = false;  ///< stop handing out work after the first failure
};

/// Checks graphs 0..count-1 produced by `make`. Counts are independent of the
/// number of workers, and the reported failure is the one with the lowest
/// index among those examined.
SweepSummary run_sweep(std::size_t count, const std::function<Graph(std::size_t)>& make,
                       const SweepOptions& options = {});

/// All labelled graphs with 1..max_vertices vertices (max_vertices <= 7).
SweepSummary sweep_labelled(int max_vertices, const SweepOptions& options = {});

SweepSummary sweep_graphs(const std::vector<Graph>& graphs, const SweepOptions& options = {});

}  // namespace edgering
