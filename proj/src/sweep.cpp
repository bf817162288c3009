#include "edgering/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "edgering/facets.hpp"
#include "edgering/graph_io.hpp"
#include "edgering/oracle.hpp"
#include "edgering/serre.hpp"

namespace edgering {

namespace {

template <typename F>
void guarded(InvariantReport& report, bool& flag, const char* what, F&& body) {
  try {
    if (!body()) {
      flag = false;
      report.failures.push_back(what);
    }
  } catch (const std::exception& e) {
    flag = false;
    report.failures.push_back(std::string(what) + ": " + e.what());
  }
}

}  // namespace

InvariantReport check_invariants(const Graph& g) {
  require_connected_nonbipartite(g);
  InvariantReport report;
  const int d = g.order();
  const VertexSet all = g.vertices();

  std::vector<FacetCheck> checks;
  guarded(report, report.criterion_matches_oracle, "combinatorial test and lattice oracle disagree", [&] {
    checks = oracle_facet_checks(g);
    R1Result from_oracle;
    for (const FacetCheck& c : checks) {
      if (c.passed()) continue;
      from_oracle.satisfied = false;
      from_oracle.violations.push_back(c.facet);
    }
    const R1Result from_criterion = satisfies_r1(g);
    report.r1 = from_criterion.satisfied;
    return from_oracle == from_criterion && from_oracle == oracle_r1(g);
  });
  report.facet_count = static_cast<int>(checks.size());

  guarded(report, report.even_lattice, "edge span is not the even-sum lattice", [&] {
    const IntegerLattice group = group_of_monoid(g);
    return group.rank() == d && group.determinant() == 2 && verify_even_lattice_basis(g);
  });

  guarded(report, report.height_one, "facet without a generator at normalized height 1", [&] {
    bool ok = true;
    for (const FacetCheck& c : checks) {
      if (c.form.denom == 2) ++report.half_forms;
      ok = ok && c.condition_one && check_condition_one(g, c.facet);
    }
    return ok;
  });

  guarded(report, report.connectivity_pointwise, "lattice condition two differs from connectivity", [&] {
    bool ok = true;
    for (const FacetCheck& c : checks) {
      VertexSet rest = all;
      if (c.facet.is_regular_vertex()) {
        rest.erase(c.facet.vertex());
      } else {
        rest -= bipartite_closure(g, c.facet.set());
      }
      const bool connected = rest.empty() || is_connected(g, rest);
      ok = ok && c.condition_two == connected;
    }
    return ok;
  });

  guarded(report, report.decomposition, "face lattice decomposition fails", [&] {
    bool ok = true;
    for (const FacetCheck& c : checks)
      if (!c.facet.is_regular_vertex()) ok = ok && verify_decomposition(g, c.facet.set());
    return ok;
  });

  guarded(report, report.normal_implies_r1, "normal graph violates (R1)", [&] {
    report.normal = !satisfies_odd_cycle_condition(g).has_value();
    return !report.normal || report.r1;
  });

  guarded(report, report.facet_support, "support form or facet rank check fails", [&] {
    bool ok = true;
    for (const FacetCheck& c : checks) {
      bool vanishes = false;
      for (Edge e : g.edges()) {
        const auto v = c.form.raw_value(e);
        ok = ok && v >= 0;
        vanishes = vanishes || v == 0;
      }
      ok = ok && vanishes && verify_facet_rank(g, c.facet);
    }
    return ok;
  });

  for (int v = 0; v < d; ++v) {
    if (is_regular_vertex(g, v) != is_fundamental(g, VertexSet::single(v))) ++report.singleton_mismatches;
  }
  return report;
}

std::uint64_t labelled_graph_count(int d) {
  if (d < 1 || d > 8) throw std::invalid_argument("labelled enumeration supports 1 <= d <= 8");
  return std::uint64_t{1} << (d * (d - 1) / 2);
}

Graph labelled_graph(int d, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < d; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) edges.push_back({i, j});
  return Graph(d, edges);
}

namespace {

void absorb(SweepSummary& into, const SweepSummary& from) {
  into.graphs += from.graphs;
  into.skipped += from.skipped;
  into.checked += from.checked;
  into.normal += from.normal;
  into.r1 += from.r1;
  into.facets += from.facets;
  into.half_forms += from.half_forms;
  into.singleton_mismatch_graphs += from.singleton_mismatch_graphs;
  into.disagreements += from.disagreements;
  into.criterion_oracle_failures += from.criterion_oracle_failures;
  into.even_lattice_failures += from.even_lattice_failures;
  into.height_one_failures += from.height_one_failures;
  into.pointwise_failures += from.pointwise_failures;
  into.decomposition_failures += from.decomposition_failures;
  into.normality_failures += from.normality_failures;
  into.facet_support_failures += from.facet_support_failures;
}

void tally(SweepSummary& s, const InvariantReport& r) {
  ++s.checked;
  s.normal += r.normal;
  s.r1 += r.r1;
  s.facets += static_cast<std::size_t>(r.facet_count);
  s.half_forms += static_cast<std::size_t>(r.half_forms);
  s.singleton_mismatch_graphs += r.singleton_mismatches > 0;
  s.criterion_oracle_failures += !r.criterion_matches_oracle;
  s.even_lattice_failures += !r.even_lattice;
  s.height_one_failures += !r.height_one;
  s.pointwise_failures += !r.connectivity_pointwise;
  s.decomposition_failures += !r.decomposition;
  s.normality_failures += !r.normal_implies_r1;
  s.facet_support_failures += !r.facet_support;
  s.disagreements += !r.ok();
}

}  // namespace

SweepSummary run_sweep(std::size_t count, const std::function<Graph(std::size_t)>& make,
                       const SweepOptions& options) {
  constexpr std::size_t kChunk = 64;
  unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, count / kChunk + 1)));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex merge;
  SweepSummary total;
  std::size_t failure_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr error;

  auto work = [&] {
    SweepSummary local;
    std::size_t local_index = std::numeric_limits<std::size_t>::max();
    Graph local_graph;
    std::vector<std::string> local_messages;
    try {
      while (!stop.load(std::memory_order_relaxed)) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= count) break;
        const std::size_t end = std::min(count, begin + kChunk);
        for (std::size_t i = begin; i < end; ++i) {
          const Graph g = make(i);
          ++local.graphs;
          if (!is_connected(g) || is_bipartite(g)) {
            ++local.skipped;
            continue;
          }
          const InvariantReport r = check_invariants(g);
          tally(local, r);
          if (!r.ok() && i < local_index) {
            local_index = i;
            local_graph = g;
            local_messages = r.failures;
            if (options.early_exit) stop = true;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(merge);
      if (!error) error = std::current_exception();
      stop = true;
    }
    std::lock_guard lock(merge);
    absorb(total, local);
    if (local_index < failure_index) {
      failure_index = local_index;
      total.first_failure_graph6 = serialize_graph6(local_graph);
      total.first_failure_messages = std::move(local_messages);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return total;
}

SweepSummary sweep_labelled(int max_vertices, const SweepOptions& options) {
  if (max_vertices > 7) throw std::invalid_argument("labelled sweep supports at most 7 vertices; use a graph6 source");
  SweepSummary total;
  for (int d = 1; d <= max_vertices; ++d) {
    SweepSummary part = run_sweep(labelled_graph_count(d), [d](std::size_t mask) { return labelled_graph(d, mask); }, options);
    if (part.first_failure_graph6 && !total.first_failure_graph6) {
      total.first_failure_graph6 = part.first_failure_graph6;
      total.first_failure_messages = part.first_failure_messages;
    }
    absorb(total, part);
    if (options.early_exit && part.disagreements > 0) break;
  }
  return total;
}

SweepSummary sweep_graphs(const std::vector<Graph>& graphs, const SweepOptions& options) {
  return run_sweep(graphs.size(), [&](std::size_t i) { return graphs[i]; }, options);
}

}  // namespace edgering
