#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

/// Names one facet of the edge polytope: either the facet cut out by a
/// regular vertex or the one cut out by a fundamental set.
class FacetDescriptor {
 public:
  enum class Kind { kRegularVertex, kFundamental };

  static FacetDescriptor regular_vertex(int v) { return FacetDescriptor(Kind::kRegularVertex, v, {}); }
  static FacetDescriptor fundamental(VertexSet t) { return FacetDescriptor(Kind::kFundamental, -1, t); }

  Kind kind() const { return kind_; }
  bool is_regular_vertex() const { return kind_ == Kind::kRegularVertex; }
  /// 0-based vertex; only meaningful for regular-vertex facets.
  int vertex() const { return vertex_; }
  /// Only meaningful for fundamental-set facets.
  VertexSet set() const { return set_; }

  /// "RegularVertex(7)" or "Fundamental({1,3})", 1-based.
  std::string to_string() const;
  bool operator==(const FacetDescriptor&) const = default;

 private:
  FacetDescriptor(Kind kind, int vertex, VertexSet set) : kind_(kind), vertex_(vertex), set_(set) {}

  Kind kind_;
  int vertex_;
  VertexSet set_;
};

/// Integer linear form together with a denominator of 1 or 2. The normalized
/// form is coeffs / denom.
struct SupportForm {
  std::vector<std::int64_t> coeffs;
  int denom = 1;

  /// Raw value coeffs . rho(e) of the edge vector of e.
  std::int64_t raw_value(Edge e) const { return coeffs[e.u] + coeffs[e.v]; }
  bool operator==(const SupportForm&) const = default;
};

/// Pre: g connected and nonbipartite (UnsupportedInput otherwise).
/// Throws std::out_of_range for a bad vertex.
bool is_regular_vertex(const Graph& g, int v);
std::vector<int> regular_vertices(const Graph& g);

bool is_independent(const Graph& g, VertexSet t);

/// Vertex set T u N(G;T) of the bipartite graph induced by an independent t.
VertexSet bipartite_closure(const Graph& g, VertexSet t);

/// Whether the bipartite graph induced by an independent t (edges with one
/// end in t, the other in N(G;t)) is connected.
bool induced_bipartite_connected(const Graph& g, VertexSet t);

/// Pre: g connected and nonbipartite. Throws std::invalid_argument on empty t.
bool is_fundamental(const Graph& g, VertexSet t);

/// Visits fundamental sets in lexicographic order; the visitor returns false
/// to stop early.
void for_each_fundamental_set(const Graph& g, const std::function<bool(VertexSet)>& visit);
std::vector<VertexSet> enumerate_fundamental_sets(const Graph& g);

/// Throws std::invalid_argument if the descriptor is not a facet of g.
SupportForm support_form(const Graph& g, const FacetDescriptor& f);

/// Regular vertices ascending, then fundamental sets in lexicographic order.
std::vector<FacetDescriptor> facets(const Graph& g);

/// Throws UnsupportedInput unless g is connected and has an odd cycle.
void require_connected_nonbipartite(const Graph& g);

}  // namespace edgering
