#pragma once

// Brute-force reference implementations used as test oracles. They read only
// the edge list and never call the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "edgering/graph.hpp"

namespace naive {

using edgering::Graph;

struct Matrix {
  int d;
  std::vector<std::vector<bool>> adj;

  explicit Matrix(const Graph& g) : d(g.order()), adj(g.order(), std::vector<bool>(g.order(), false)) {
    for (auto e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  }
};

inline std::vector<int> members(std::uint64_t mask, int d) {
  std::vector<int> out;
  for (int v = 0; v < d; ++v)
    if ((mask >> v) & 1U) out.push_back(v);
  return out;
}

/// Components of the induced subgraph on `mask`, by union-find; each as a
/// sorted vertex list, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g, std::uint64_t mask) {
  const int d = g.order();
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto e : g.edges()) {
    if (((mask >> e.u) & 1U) && ((mask >> e.v) & 1U)) parent[find(e.u)] = find(e.v);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(d, -1);
  for (int v : members(mask, d)) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

inline std::uint64_t to_mask(const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= std::uint64_t{1} << v;
  return m;
}

/// Tries every 2-colouring (|mask| <= ~16).
inline bool bipartite(const Graph& g, std::uint64_t mask) {
  auto vs = members(mask, g.order());
  const std::uint64_t colourings = std::uint64_t{1} << vs.size();
  for (std::uint64_t c = 0; c < colourings; ++c) {
    std::vector<int> colour(g.order(), -1);
    for (std::size_t k = 0; k < vs.size(); ++k) colour[vs[k]] = (c >> k) & 1U;
    bool proper = true;
    for (auto e : g.edges()) {
      if (colour[e.u] >= 0 && colour[e.v] >= 0 && colour[e.u] == colour[e.v]) proper = false;
    }
    if (proper) return true;
  }
  return false;
}

inline bool all_components_odd(const Graph& g, std::uint64_t mask) {
  for (const auto& c : components(g, mask))
    if (bipartite(g, to_mask(c))) return false;
  return true;
}

inline bool connected(const Graph& g, std::uint64_t mask) { return components(g, mask).size() <= 1; }

inline std::uint64_t full(int d) { return d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1; }

inline bool regular(const Graph& g, int v) {
  return all_components_odd(g, full(g.order()) & ~(std::uint64_t{1} << v));
}

inline std::uint64_t neighbourhood(const Graph& g, std::uint64_t t) {
  std::uint64_t n = 0;
  for (auto e : g.edges()) {
    if ((t >> e.u) & 1U) n |= std::uint64_t{1} << e.v;
    if ((t >> e.v) & 1U) n |= std::uint64_t{1} << e.u;
  }
  return n;
}

inline bool fundamental(const Graph& g, std::uint64_t t) {
  const Matrix m(g);
  auto vs = members(t, g.order());
  for (int a : vs)
    for (int b : vs)
      if (m.adj[a][b]) return false;
  const std::uint64_t n = neighbourhood(g, t);
  // Bipartite graph induced by t: only edges with exactly one end in t.
  std::vector<edgering::Edge> cross;
  for (auto e : g.edges()) {
    if (((t >> e.u) & 1U) != ((t >> e.v) & 1U) && (((t | n) >> e.u) & 1U) && (((t | n) >> e.v) & 1U)) cross.push_back(e);
  }
  Graph b(g.order(), cross);
  if (!connected(b, t | n)) return false;
  const std::uint64_t rest = full(g.order()) & ~(t | n);
  return rest == 0 || all_components_odd(g, rest);
}

/// All fundamental sets as sorted 0-based lists, in lexicographic order.
inline std::vector<std::vector<int>> fundamental_sets(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t t = 1; t <= full(g.order()); ++t)
    if (fundamental(g, t)) out.push_back(members(t, g.order()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Chordless odd cycles as sorted vertex lists: odd subsets whose induced
/// subgraph is connected and 2-regular.
inline std::vector<std::vector<int>> chordless_odd_cycle_sets(const Graph& g) {
  const Matrix m(g);
  std::vector<std::vector<int>> out;
  for (std::uint64_t s = 1; s <= full(g.order()); ++s) {
    auto vs = members(s, g.order());
    if (vs.size() < 3 || vs.size() % 2 == 0) continue;
    bool two_regular = true;
    for (int a : vs) {
      int deg = 0;
      for (int b : vs) deg += m.adj[a][b];
      two_regular = two_regular && deg == 2;
    }
    if (two_regular && connected(g, s)) out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<std::vector<int>> triangles(const Graph& g) {
  const Matrix m(g);
  std::set<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      for (int c = b + 1; c < g.order(); ++c)
        if (m.adj[a][b] && m.adj[b][c] && m.adj[a][c]) out.insert({a, b, c});
  return out;
}

}  // namespace naive
