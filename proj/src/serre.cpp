#include "edgering/serre.hpp"

#include "edgering/errors.hpp"

namespace edgering {

namespace {

void require_connected(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw UnsupportedInput("graph is not connected");
}

bool joined(const Graph& g, VertexSet a, VertexSet b) {
  bool hit = false;
  a.for_each([&](int v) { hit = hit || g.neighbors(v).intersects(b); });
  return hit;
}

}  // namespace

std::optional<OddCyclePair> satisfies_odd_cycle_condition(const Graph& g) {
  require_connected(g);
  const std::vector<OddCycle> cycles = chordless_odd_cycles(g);
  std::vector<VertexSet> sets;
  sets.reserve(cycles.size());
  for (const OddCycle& c : cycles) sets.push_back(c.vertex_set());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (sets[i].intersects(sets[j])) continue;
      if (!joined(g, sets[i], sets[j])) return OddCyclePair{cycles[i], cycles[j]};
    }
  }
  return std::nullopt;
}

R1Result satisfies_r1(const Graph& g, bool early_exit) {
  require_connected(g);
  R1Result result;
  if (is_bipartite(g)) return result;

  const VertexSet all = g.vertices();
  auto record = [&](FacetDescriptor f) {
    result.satisfied = false;
    result.violations.push_back(f);
    return !early_exit;
  };
  for (int v : regular_vertices(g)) {
    VertexSet rest = all;
    rest.erase(v);
    if (!is_connected(g, rest) && !record(FacetDescriptor::regular_vertex(v))) return result;
  }
  for_each_fundamental_set(g, [&](VertexSet t) {
    const VertexSet rest = all - bipartite_closure(g, t);
    if (rest.empty() || is_connected(g, rest)) return true;
    return record(FacetDescriptor::fundamental(t));
  });
  return result;
}

ClassificationReport classify(const Graph& g, bool early_exit) {
  require_connected(g);
  ClassificationReport report;
  report.bipartite = is_bipartite(g);
  if (report.bipartite) {
    report.normal = true;
    report.r1 = true;
  } else {
    report.occ_violation = satisfies_odd_cycle_condition(g);
    report.normal = !report.occ_violation.has_value();
    R1Result r1 = satisfies_r1(g, early_exit);
    report.r1 = r1.satisfied;
    report.r1_violations = std::move(r1.violations);
  }
  if (report.normal && !report.r1) {
    throw InternalInconsistency("normal edge ring reported as violating (R1)");
  }
  if (report.bipartite) {
    report.notes = "bipartite; normal hence Cohen–Macaulay";
  } else if (report.normal) {
    report.notes = "normal hence Cohen–Macaulay";
  } else if (report.r1) {
    report.notes = "satisfies (R1); normal iff Cohen–Macaulay";
  } else {
    report.notes = "violates (R1); not normal";
  }
  return report;
}

}  // namespace edgering
