#include "edgering/sweep.hpp"

#include "doctest.h"
#include "edgering/graph_io.hpp"
#include "fixtures.hpp"

using namespace edgering;

TEST_CASE("labelled graphs follow graph6 bit order") {
  CHECK(labelled_graph_count(3) == 8);
  CHECK(labelled_graph(3, 0b111) == fixtures::k3());
  for (std::uint64_t mask = 0; mask < labelled_graph_count(5); mask += 37) {
    const Graph g = labelled_graph(5, mask);
    CHECK(g.size() == std::popcount(mask));
    CHECK(parse_graph6(serialize_graph6(g))[0] == g);
  }
  CHECK_THROWS_AS(labelled_graph_count(9), std::invalid_argument);
}

TEST_CASE("invariant report on two bridged triangles") {
  const InvariantReport r = check_invariants(fixtures::two_triangles());
  CHECK(r.ok());
  CHECK_FALSE(r.normal);
  CHECK(r.r1);
  CHECK(r.facet_count == 17);
}

TEST_CASE("sweep totals do not depend on the worker count") {
  const SweepSummary one = sweep_labelled(5, {1, false});
  const SweepSummary many = sweep_labelled(5, {4, false});
  CHECK(one.graphs == 1 + 2 + 8 + 64 + 1024);
  CHECK(one.graphs == many.graphs);
  CHECK(one.checked == many.checked);
  CHECK(one.normal == many.normal);
  CHECK(one.r1 == many.r1);
  CHECK(one.facets == many.facets);
  CHECK(one.disagreements == 0);
  CHECK(many.disagreements == 0);
  CHECK(one.checked + one.skipped == one.graphs);
}

TEST_CASE("sweep of an explicit list") {
  const std::vector<Graph> graphs{fixtures::two_triangles(), fixtures::c4(), fixtures::bridge(1), Graph(2, {})};
  const SweepSummary s = sweep_graphs(graphs, {2, false});
  CHECK(s.graphs == 4);
  CHECK(s.checked == 2);
  CHECK(s.skipped == 2);
  CHECK(s.r1 == 1);
  CHECK(s.normal == 0);
  CHECK(s.disagreements == 0);
  CHECK_FALSE(s.first_failure_graph6);
}
