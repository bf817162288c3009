#include "edgering/facets.hpp"

#include <stdexcept>

#include "edgering/errors.hpp"

namespace edgering {

std::string FacetDescriptor::to_string() const {
  if (is_regular_vertex()) return "RegularVertex(" + std::to_string(vertex_ + 1) + ")";
  return "Fundamental(" + set_.to_string() + ")";
}

void require_connected_nonbipartite(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw UnsupportedInput("graph is not connected");
  if (is_bipartite(g)) throw UnsupportedInput("graph is bipartite");
}

namespace {

// Every component of the induced subgraph on s contains an odd cycle.
bool all_components_odd(const Graph& g, VertexSet s) {
  for (VertexSet c : connected_components(g, s)) {
    if (is_bipartite(g, c)) return false;
  }
  return true;
}

bool regular_unchecked(const Graph& g, int v) {
  VertexSet rest = g.vertices();
  rest.erase(v);
  return all_components_odd(g, rest);
}

// Conditions (b) and (c) for an independent nonempty t.
bool fundamental_independent(const Graph& g, VertexSet t) {
  if (!induced_bipartite_connected(g, t)) return false;
  return all_components_odd(g, g.vertices() - bipartite_closure(g, t));
}

}  // namespace

bool is_regular_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  require_connected_nonbipartite(g);
  return regular_unchecked(g, v);
}

std::vector<int> regular_vertices(const Graph& g) {
  require_connected_nonbipartite(g);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (regular_unchecked(g, v)) out.push_back(v);
  return out;
}

bool is_independent(const Graph& g, VertexSet t) {
  bool ok = true;
  t.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(t); });
  return ok;
}

VertexSet bipartite_closure(const Graph& g, VertexSet t) { return t | neighborhood(g, t); }

bool induced_bipartite_connected(const Graph& g, VertexSet t) {
  // Alternate between the two sides; only edges touching t are used.
  VertexSet seen = VertexSet::single(t.min());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) {
      next |= t.contains(v) ? g.neighbors(v) : (g.neighbors(v) & t);
    });
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen == bipartite_closure(g, t);
}

bool is_fundamental(const Graph& g, VertexSet t) {
  if (t.empty()) throw std::invalid_argument("fundamental-set test on the empty set");
  if (!t.subset_of(g.vertices())) throw std::out_of_range("vertex set exceeds graph");
  require_connected_nonbipartite(g);
  return is_independent(g, t) && fundamental_independent(g, t);
}

void for_each_fundamental_set(const Graph& g, const std::function<bool(VertexSet)>& visit) {
  require_connected_nonbipartite(g);
  // Preorder over independent sets, extending only by larger vertices, which
  // yields lexicographic order of the sorted member lists.
  auto extend = [&](auto&& self, VertexSet t, VertexSet candidates) -> bool {
    bool keep_going = true;
    candidates.for_each([&](int v) {
      if (!keep_going) return;
      VertexSet next = t;
      next.insert(v);
      if (fundamental_independent(g, next) && !visit(next)) {
        keep_going = false;
        return;
      }
      VertexSet rest = (candidates - g.neighbors(v)) - VertexSet::full(v + 1);
      keep_going = self(self, next, rest);
    });
    return keep_going;
  };
  extend(extend, VertexSet{}, g.vertices());
}

std::vector<VertexSet> enumerate_fundamental_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_fundamental_set(g, [&](VertexSet t) {
    out.push_back(t);
    return true;
  });
  return out;
}

SupportForm support_form(const Graph& g, const FacetDescriptor& f) {
  SupportForm form;
  form.coeffs.assign(g.order(), 0);
  if (f.is_regular_vertex()) {
    if (!is_regular_vertex(g, f.vertex())) throw std::invalid_argument("not a regular vertex: " + f.to_string());
    form.coeffs[f.vertex()] = 1;
    return form;
  }
  const VertexSet t = f.set();
  if (t.empty() || !is_fundamental(g, t)) throw std::invalid_argument("not a fundamental set: " + f.to_string());
  const VertexSet n = neighborhood(g, t);
  n.for_each([&](int v) { form.coeffs[v] = 1; });
  t.for_each([&](int v) { form.coeffs[v] = -1; });
  form.denom = (t | n) == g.vertices() ? 2 : 1;
  return form;
}

std::vector<FacetDescriptor> facets(const Graph& g) {
  std::vector<FacetDescriptor> out;
  for (int v : regular_vertices(g)) out.push_back(FacetDescriptor::regular_vertex(v));
  for (VertexSet t : enumerate_fundamental_sets(g)) out.push_back(FacetDescriptor::fundamental(t));
  return out;
}

}  // namespace edgering
