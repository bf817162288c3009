#include "edgering/report.hpp"

#include <random>

#include "doctest.h"
#include "edgering/oracle.hpp"
#include "fixtures.hpp"

using namespace edgering;

TEST_CASE("JSON schema for two bridged triangles") {
  const Graph g = fixtures::two_triangles();
  const Report r = make_report("fig1.el", g, classify(g));
  const nlohmann::json j = to_json(r);
  CHECK(j.at("r1_violations") == nlohmann::json::array());
  CHECK(j.at("normal") == false);
  CHECK(j.at("r1") == true);
  CHECK(j.at("occ_violation") == nlohmann::json::parse("[[1,2,3],[4,5,6]]"));
  CHECK(j.at("d") == 8);
  CHECK(j.at("n") == 10);
  // Keys come out sorted.
  CHECK(j.dump().rfind("{\"bipartite\":false,\"d\":8,", 0) == 0);

  const std::string text = render_text(r);
  CHECK(text.find("normal: false\n") != std::string::npos);
  CHECK(text.find("R1: true\n") != std::string::npos);
}

TEST_CASE("violation descriptors in JSON") {
  const Graph b1 = fixtures::bridge(1);
  const nlohmann::json j = to_json(make_report("b1", b1, classify(b1)));
  CHECK(j.at("r1_violations") == nlohmann::json::parse(R"([{"kind":"regular_vertex","vertex":7}])"));
  CHECK(to_json(FacetDescriptor::fundamental(fixtures::labels({1, 3}))) ==
        nlohmann::json::parse(R"({"kind":"fundamental","set":[1,3]})"));
  CHECK_THROWS(facet_from_json(nlohmann::json::parse(R"({"kind":"edge"})")));
}

TEST_CASE("reports round-trip through JSON") {
  std::mt19937 rng(31);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 60; ++trial) {
    const Graph g = fixtures::random_graph(rng, 3 + trial % 6, 0.45);
    if (!is_connected(g)) continue;
    ++done;
    Report r = make_report("random#" + std::to_string(trial), g, classify(g));
    if (!r.classification.bipartite && trial % 2 == 0) {
      r.facets.emplace();
      for (const FacetCheck& c : oracle_facet_checks(g)) r.facets->push_back({c.facet, c.form, c.condition_one, c.condition_two});
      r.oracle_r1 = oracle_r1(g).satisfied;
      r.agreement = true;
    }
    const std::string dumped = to_json(r).dump();
    const Report back = report_from_json(nlohmann::json::parse(dumped));
    CHECK(back == r);
    CHECK(to_json(back).dump() == dumped);
  }
}
