#include "edgering/oracle.hpp"

#include <random>

#include "doctest.h"
#include "edgering/errors.hpp"
#include "fixtures.hpp"

using namespace edgering;
using fixtures::labels;

TEST_CASE("edge vectors") {
  CHECK(edge_vector({0, 1}, 3) == IntVec{1, 1, 0});
  CHECK(edge_vector({2, 6}, 8) == IntVec{0, 0, 1, 0, 0, 0, 1, 0});
  CHECK_THROWS_AS(edge_vector({0, 0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(edge_vector({0, 3}, 3), std::invalid_argument);
}

TEST_CASE("group of the edge monoid") {
  const IntegerLattice k3 = group_of_monoid(fixtures::k3());
  CHECK(k3.rank() == 3);
  CHECK(k3.determinant() == 2);
  CHECK(k3 == even_sum_lattice(3));
  CHECK(group_of_monoid(fixtures::two_triangles()) == even_sum_lattice(8));
  CHECK_THROWS_AS(group_of_monoid(fixtures::c4()), UnsupportedInput);
}

TEST_CASE("alternating sum around an odd cycle") {
  // rho{1,2} - rho{2,3} + rho{3,1} = 2 e_1
  const IntVec sum = edge_vector({0, 1}, 3) - edge_vector({1, 2}, 3) + edge_vector({0, 2}, 3);
  CHECK(sum == IntVec{2, 0, 0});
  CHECK(verify_even_lattice_basis(fixtures::k3()));
  CHECK(verify_even_lattice_basis(fixtures::c5()));
  CHECK(verify_even_lattice_basis(fixtures::two_triangles()));
}

TEST_CASE("condition one") {
  const Graph f = fixtures::two_triangles();
  CHECK(check_condition_one(f, FacetDescriptor::regular_vertex(6)));
  CHECK(check_condition_one(fixtures::k3(), FacetDescriptor::fundamental(labels({1}))));
  CHECK(check_condition_one(f, FacetDescriptor::fundamental(labels({1}))));

  // K3: the raw form takes only the values 0 and 2 on edges.
  const Graph k3 = fixtures::k3();
  const SupportForm form = support_form(k3, FacetDescriptor::fundamental(labels({1})));
  for (Edge e : k3.edges()) CHECK((form.raw_value(e) == 0 || form.raw_value(e) == 2));
}

TEST_CASE("condition two") {
  CHECK_FALSE(check_condition_two(fixtures::bridge(1), FacetDescriptor::regular_vertex(6)));
  CHECK(check_condition_two(fixtures::two_triangles(), FacetDescriptor::regular_vertex(6)));
  CHECK(check_condition_two(fixtures::k3(), FacetDescriptor::fundamental(labels({1}))));
}

TEST_CASE("oracle verdicts") {
  CHECK(oracle_r1(fixtures::two_triangles()) == R1Result{true, {}});
  CHECK(oracle_r1(fixtures::bridge(1)) == R1Result{false, {FacetDescriptor::regular_vertex(6)}});
  CHECK(oracle_r1(fixtures::k3()) == R1Result{true, {}});
  CHECK_THROWS_AS(oracle_r1(fixtures::c4()), UnsupportedInput);
}

TEST_CASE("facet rank") {
  CHECK(verify_facet_rank(fixtures::k3(), FacetDescriptor::fundamental(labels({1}))));
  CHECK(verify_facet_rank(fixtures::two_triangles(), FacetDescriptor::regular_vertex(6)));
  CHECK(verify_facet_rank(fixtures::bridge(1), FacetDescriptor::regular_vertex(6)));
}

TEST_CASE("face lattice decomposition") {
  CHECK(verify_decomposition(fixtures::two_triangles(), labels({1})));
  CHECK(verify_decomposition(fixtures::k3(), labels({1})));
  for (VertexSet t : enumerate_fundamental_sets(fixtures::bridge(3))) CHECK(verify_decomposition(fixtures::bridge(3), t));
  CHECK_THROWS_AS(verify_decomposition(fixtures::two_triangles(), labels({7, 8})), std::invalid_argument);
}

TEST_CASE("lattice conditions track connectivity on random graphs") {
  std::mt19937 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    const int d = 3 + trial % 7;
    const Graph g = fixtures::random_graph(rng, d, 0.4);
    if (!is_connected(g) || is_bipartite(g)) continue;
    ++checked;
    CHECK(group_of_monoid(g).determinant() == 2);
    CHECK(verify_even_lattice_basis(g));
    for (const FacetCheck& c : oracle_facet_checks(g)) {
      CHECK(c.condition_one);
      VertexSet rest = g.vertices();
      if (c.facet.is_regular_vertex()) {
        rest.erase(c.facet.vertex());
      } else {
        rest -= bipartite_closure(g, c.facet.set());
        CHECK(verify_decomposition(g, c.facet.set()));
      }
      CHECK(c.condition_two == (rest.empty() || is_connected(g, rest)));
      CHECK(verify_facet_rank(g, c.facet));
    }
    CHECK(oracle_r1(g) == satisfies_r1(g));
  }
  CHECK(checked >= 100);
}
