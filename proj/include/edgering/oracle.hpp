#pragma once

#include <vector>

#include "edgering/facets.hpp"
#include "edgering/graph.hpp"
#include "edgering/lattice.hpp"
#include "edgering/serre.hpp"

namespace edgering {

/// rho(e) = e_i + e_j in Z^d. Throws std::invalid_argument for loops or
/// out-of-range endpoints.
IntVec edge_vector(Edge e, int d);

/// The lattice generated by the edge vectors of g. Checks that it is the
/// even-coordinate-sum lattice and throws InternalInconsistency otherwise.
/// Pre: g connected and nonbipartite (UnsupportedInput).
IntegerLattice group_of_monoid(const Graph& g);

/// Rebuilds the even-sum lattice from an odd cycle (via the alternating sum
/// that yields 2 e_i) plus a spanning tree, and compares it to the edge span.
bool verify_even_lattice_basis(const Graph& g);

/// Some edge takes value exactly 1 under the normalized support form.
/// Throws InternalInconsistency if a denominator-2 form is not integral on
/// every generator.
bool check_condition_one(const Graph& g, const FacetDescriptor& f);

/// span{rho(e) : form vanishes} == gp(M_G) meet the form's hyperplane.
bool check_condition_two(const Graph& g, const FacetDescriptor& f);

/// Form nonnegative on every generator and the generators it kills span an
/// affine space of dimension d - 2.
bool verify_facet_rank(const Graph& g, const FacetDescriptor& f);

/// The face lattice of a fundamental set splits into the even-sum lattices of
/// the complement components plus the span of the induced bipartite graph.
/// Throws std::invalid_argument if t is not fundamental.
bool verify_decomposition(const Graph& g, VertexSet t);

struct FacetCheck {
  FacetDescriptor facet;
  SupportForm form;
  bool condition_one = false;
  bool condition_two = false;

  bool passed() const { return condition_one && condition_two; }
};

/// Both lattice conditions for every facet, in facet order. A failed
/// condition one contradicts the facet list and callers treat it as a bug.
std::vector<FacetCheck> oracle_facet_checks(const Graph& g);

/// (R1) by the lattice conditions on every facet. Bipartite or disconnected
/// input throws UnsupportedInput.
R1Result oracle_r1(const Graph& g);

}  // namespace edgering
