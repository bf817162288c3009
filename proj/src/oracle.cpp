#include "edgering/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "edgering/errors.hpp"

namespace edgering {

IntVec edge_vector(Edge e, int d) {
  if (e.u == e.v) throw std::invalid_argument("edge vector of a loop");
  if (e.u < 0 || e.v < 0 || e.u >= d || e.v >= d) throw std::invalid_argument("edge endpoint out of range");
  IntVec v(d, 0);
  v[e.u] = 1;
  v[e.v] = 1;
  return v;
}

namespace {

IntVec unit(int d, int i, std::int64_t scale = 1) {
  IntVec v(d, 0);
  v[i] = scale;
  return v;
}

std::vector<IntVec> edge_vectors(const Graph& g, std::span<const Edge> edges) {
  std::vector<IntVec> out;
  out.reserve(edges.size());
  for (Edge e : edges) out.push_back(edge_vector(e, g.order()));
  return out;
}

IntegerLattice edge_span(const Graph& g) { return hnf(g.order(), edge_vectors(g, g.edges())); }

std::vector<Edge> zero_edges(const Graph& g, const SupportForm& form) {
  std::vector<Edge> out;
  for (Edge e : g.edges())
    if (form.raw_value(e) == 0) out.push_back(e);
  return out;
}

// BFS spanning forest over the edges accepted by `use`, restricted to s.
template <typename Pred>
std::vector<Edge> spanning_tree(const Graph& g, VertexSet s, Pred use) {
  std::vector<Edge> tree;
  VertexSet seen;
  s.for_each([&](int root) {
    if (seen.contains(root)) return;
    seen.insert(root);
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      (g.neighbors(u) & s).for_each([&](int w) {
        if (seen.contains(w) || !use(u, w)) return;
        seen.insert(w);
        tree.push_back({std::min(u, w), std::max(u, w)});
        queue.push_back(w);
      });
    }
  });
  return tree;
}

// {x : supp(x) in s, sum of x even}, from 2e_a and e_a + e_b.
std::vector<IntVec> even_sum_generators(int d, VertexSet s) {
  std::vector<IntVec> gens;
  if (s.empty()) return gens;
  const int a = s.min();
  gens.push_back(unit(d, a, 2));
  (s - VertexSet::single(a)).for_each([&](int b) { gens.push_back(unit(d, a) + unit(d, b)); });
  return gens;
}

bool condition_one(const Graph& g, const SupportForm& form) {
  bool hit = false;
  for (Edge e : g.edges()) {
    const std::int64_t raw = form.raw_value(e);
    if (raw % form.denom != 0) {
      throw InternalInconsistency("normalized support form is not integral on an edge vector");
    }
    hit = hit || raw == form.denom;
  }
  return hit;
}

bool condition_two(const Graph& g, const SupportForm& form, const IntegerLattice& group) {
  const IntegerLattice face = hnf(g.order(), edge_vectors(g, zero_edges(g, form)));
  const IntegerLattice cut = intersect(group, integer_kernel(form.coeffs));
  return face == cut;
}

}  // namespace

IntegerLattice group_of_monoid(const Graph& g) {
  require_connected_nonbipartite(g);
  IntegerLattice lattice = edge_span(g);
  if (!(lattice == even_sum_lattice(g.order()))) {
    throw InternalInconsistency("edge vectors do not span the even-coordinate-sum lattice: " + lattice.to_string());
  }
  return lattice;
}

bool verify_even_lattice_basis(const Graph& g) {
  require_connected_nonbipartite(g);
  const int d = g.order();
  const auto cycle = odd_cycle_witness(g, g.vertices());
  if (!cycle) return false;
  const std::vector<int>& c = cycle->vertices;
  const std::size_t len = c.size();

  // Edges e_1 .. e_len run around the cycle; e_1 and e_len meet at c[0].
  IntVec alternating(d, 0);
  for (std::size_t j = 0; j < len; ++j) {
    const int a = c[j], b = c[(j + 1) % len];
    if (!g.adjacent(a, b)) return false;
    const IntVec rho = edge_vector({std::min(a, b), std::max(a, b)}, d);
    alternating = j % 2 == 0 ? alternating + rho : alternating - rho;
  }
  if (alternating != unit(d, c[0], 2)) return false;

  std::vector<IntVec> basis = edge_vectors(g, spanning_tree(g, g.vertices(), [](int, int) { return true; }));
  basis.push_back(alternating);
  if (static_cast<int>(basis.size()) != d) return false;
  const IntegerLattice lattice = hnf(d, basis);
  return lattice.rank() == d && lattice == edge_span(g) && lattice == even_sum_lattice(d);
}

bool check_condition_one(const Graph& g, const FacetDescriptor& f) {
  return condition_one(g, support_form(g, f));
}

bool check_condition_two(const Graph& g, const FacetDescriptor& f) {
  const SupportForm form = support_form(g, f);
  return condition_two(g, form, group_of_monoid(g));
}

bool verify_facet_rank(const Graph& g, const FacetDescriptor& f) {
  const SupportForm form = support_form(g, f);
  if (group_of_monoid(g).rank() != g.order()) return false;
  for (Edge e : g.edges())
    if (form.raw_value(e) < 0) return false;
  const std::vector<Edge> zeros = zero_edges(g, form);
  if (zeros.empty()) return false;
  // Edge vectors lie on the hyperplane "coordinate sum = 2", so affine
  // dimension is linear rank minus one.
  return hnf(g.order(), edge_vectors(g, zeros)).rank() == g.order() - 1;
}

bool verify_decomposition(const Graph& g, VertexSet t) {
  if (t.empty() || !is_fundamental(g, t)) throw std::invalid_argument("not a fundamental set: " + t.to_string());
  const int d = g.order();
  const SupportForm form = support_form(g, FacetDescriptor::fundamental(t));
  const IntegerLattice face = hnf(d, edge_vectors(g, zero_edges(g, form)));

  const VertexSet closure = bipartite_closure(g, t);
  std::vector<IntVec> gens;
  for (VertexSet comp : connected_components(g, g.vertices() - closure)) {
    auto part = even_sum_generators(d, comp);
    gens.insert(gens.end(), part.begin(), part.end());
  }
  const auto tree = spanning_tree(g, closure, [&](int u, int w) { return t.contains(u) != t.contains(w); });
  if (static_cast<int>(tree.size()) != closure.size() - 1) return false;
  auto bipartite = edge_vectors(g, tree);
  gens.insert(gens.end(), bipartite.begin(), bipartite.end());
  return face == hnf(d, gens);
}

std::vector<FacetCheck> oracle_facet_checks(const Graph& g) {
  const IntegerLattice group = group_of_monoid(g);
  std::vector<FacetCheck> out;
  for (const FacetDescriptor& f : facets(g)) {
    FacetCheck check{f, support_form(g, f)};
    check.condition_one = condition_one(g, check.form);
    check.condition_two = condition_two(g, check.form, group);
    out.push_back(std::move(check));
  }
  return out;
}

R1Result oracle_r1(const Graph& g) {
  R1Result result;
  for (const FacetCheck& check : oracle_facet_checks(g)) {
    if (check.passed()) continue;
    result.satisfied = false;
    result.violations.push_back(check.facet);
  }
  return result;
}

}  // namespace edgering
