#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgering/vertex_set.hpp"

namespace edgering {

/// An undirected edge between 0-based vertices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr bool operator==(const Edge&) const = default;
};

/// Finite simple graph on the vertices 0..d-1 (labelled 1..d in all I/O).
///
/// Edges keep their insertion order so that serialization is byte-exact.
/// Equality compares the vertex count and the edge *set*.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, duplicate edges, out-of-range
  /// endpoints, or d outside [0, 64].
  Graph(int d, std::span<const Edge> edges);
  Graph(int d, std::initializer_list<Edge> edges)
      : Graph(d, std::span<const Edge>(edges.begin(), edges.size())) {}
  /// Convenience constructor from 1-based pairs.
  static Graph from_labels(int d, std::initializer_list<std::pair<int, int>> pairs);

  int order() const { return d_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  VertexSet vertices() const { return VertexSet::full(d_); }

  bool operator==(const Graph& o) const { return d_ == o.d_ && adj_ == o.adj_; }

 private:
  int d_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
};

/// Cyclic vertex sequence (0-based) of odd length >= 3.
struct OddCycle {
  std::vector<int> vertices;

  VertexSet vertex_set() const;
  /// "(1,2,3)" with 1-based labels.
  std::string to_string() const;
  bool operator==(const OddCycle&) const = default;
};

/// A graph on a vertex subset, relabelled 0..|s|-1. `original[k]` is the
/// host vertex behind new vertex k.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;
};

bool is_connected(const Graph& g);
/// Connectivity of the induced subgraph on s. The empty set counts as connected.
bool is_connected(const Graph& g, VertexSet s);

/// Components of g, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of the induced subgraph on s, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet s);

bool is_bipartite(const Graph& g);
bool is_bipartite(const Graph& g, VertexSet s);

/// An odd cycle inside the induced subgraph on s, or nullopt when that
/// subgraph is 2-colourable. Throws std::invalid_argument if s does not
/// induce a connected subgraph.
std::optional<OddCycle> odd_cycle_witness(const Graph& g, VertexSet s);

/// Throws std::invalid_argument on empty s.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// N(G;T): every vertex adjacent to some member of t. Throws on empty t.
VertexSet neighborhood(const Graph& g, VertexSet t);

/// Every chordless (induced) odd cycle, each once, with the rotation that
/// starts at its smallest vertex and continues to the smaller neighbour.
/// Sorted lexicographically by vertex set.
std::vector<OddCycle> chordless_odd_cycles(const Graph& g);

enum class Family { kBridge, kCycle, kComplete, kCompleteBipartite };

/// Parses "bridge", "cycle", "complete", "complete_bipartite".
std::optional<Family> family_from_name(std::string_view name);

/// bridge(k): triangles {1,2,3}, {4,5,6} and k vertices 7..k+6 each adjacent
/// to exactly 3 and 4. cycle(n), complete(n), complete_bipartite(a,b) are the
/// usual graphs. Throws std::invalid_argument on bad parameters.
Graph generate_family(Family family, std::span<const int> params);

}  // namespace edgering
