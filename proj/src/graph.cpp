#include "edgering/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgering {

Graph::Graph(int d, std::span<const Edge> edges) : d_(d), adj_(static_cast<std::size_t>(std::max(d, 0))) {
  if (d < 0 || d > kMaxVertices) throw std::invalid_argument("vertex count out of range: " + std::to_string(d));
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u + 1));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= d) throw std::invalid_argument("edge endpoint out of range");
    if (adj_[e.u].contains(e.v)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}");
    }
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
    edges_.push_back(e);
  }
}

Graph Graph::from_labels(int d, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [i, j] : pairs) edges.push_back({i - 1, j - 1});
  return Graph(d, edges);
}

VertexSet OddCycle::vertex_set() const {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

std::string OddCycle::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(vertices[k] + 1);
  }
  return s + ')';
}

namespace {

// Vertices of s reachable from `start` inside s.
VertexSet reach(const Graph& g, VertexSet s, int start) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= g.neighbors(v); });
    next = (next & s) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

bool is_connected(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  return reach(g, s, s.min()) == s;
}

std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.vertices()); }

std::vector<VertexSet> connected_components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  while (!s.empty()) {
    VertexSet c = reach(g, s, s.min());
    out.push_back(c);
    s -= c;
  }
  return out;
}

namespace {

struct Colouring {
  std::vector<int> parent;
  std::vector<int> depth;
  // Endpoints of an edge joining two vertices of equal colour, if any.
  int clash_u = -1;
  int clash_v = -1;
};

// BFS 2-colouring of every component of the induced subgraph on s.
Colouring colour(const Graph& g, VertexSet s) {
  Colouring c;
  c.parent.assign(g.order(), -1);
  c.depth.assign(g.order(), -1);
  VertexSet todo = s;
  while (!todo.empty()) {
    int root = todo.min();
    std::vector<int> queue{root};
    c.depth[root] = 0;
    todo.erase(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      bool stop = false;
      (g.neighbors(u) & s).for_each([&](int w) {
        if (stop) return;
        if (c.depth[w] < 0) {
          c.depth[w] = c.depth[u] + 1;
          c.parent[w] = u;
          todo.erase(w);
          queue.push_back(w);
        } else if ((c.depth[w] - c.depth[u]) % 2 == 0) {
          c.clash_u = u;
          c.clash_v = w;
          stop = true;
        }
      });
      if (stop) return c;
    }
  }
  return c;
}

}  // namespace

bool is_bipartite(const Graph& g) { return is_bipartite(g, g.vertices()); }

bool is_bipartite(const Graph& g, VertexSet s) { return colour(g, s).clash_u < 0; }

std::optional<OddCycle> odd_cycle_witness(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("vertex set exceeds graph");
  if (!is_connected(g, s)) throw std::invalid_argument("vertex set does not induce a connected subgraph");
  if (s.empty()) return std::nullopt;
  Colouring c = colour(g, s);
  if (c.clash_u < 0) return std::nullopt;
  // Walk both tree paths up to their lowest common ancestor.
  std::vector<int> left{c.clash_u}, right{c.clash_v};
  int a = c.clash_u, b = c.clash_v;
  while (c.depth[a] > c.depth[b]) left.push_back(a = c.parent[a]);
  while (c.depth[b] > c.depth[a]) right.push_back(b = c.parent[b]);
  while (a != b) {
    left.push_back(a = c.parent[a]);
    right.push_back(b = c.parent[b]);
  }
  right.pop_back();  // the ancestor is already the last entry of `left`
  OddCycle cycle;
  cycle.vertices = std::move(left);
  cycle.vertices.insert(cycle.vertices.end(), right.rbegin(), right.rend());
  return cycle;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph on the empty set");
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("vertex set exceeds graph");
  InducedSubgraph out;
  out.original = s.members();
  std::vector<int> index(g.order(), -1);
  for (std::size_t k = 0; k < out.original.size(); ++k) index[out.original[k]] = static_cast<int>(k);
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) edges.push_back({index[e.u], index[e.v]});
  }
  out.graph = Graph(static_cast<int>(out.original.size()), edges);
  return out;
}

VertexSet neighborhood(const Graph& g, VertexSet t) {
  if (t.empty()) throw std::invalid_argument("neighborhood of the empty set");
  VertexSet n;
  t.for_each([&](int v) { n |= g.neighbors(v); });
  return n;
}

std::vector<OddCycle> chordless_odd_cycles(const Graph& g) {
  // Grow chordless paths s = p0, p1, ..., pk over vertices above s. A new
  // vertex must touch pk and no earlier interior vertex; touching s closes
  // an induced cycle. Each cycle is met once per direction, so keep p1 < last.
  std::vector<OddCycle> out;
  std::vector<int> path;
  for (int s = 0; s < g.order(); ++s) {
    const VertexSet above = g.vertices() - VertexSet::full(s + 1);
    path.assign({s});
    auto grow = [&](auto&& self, VertexSet used, VertexSet blocked) -> void {
      const int last = path.back();
      VertexSet next = (g.neighbors(last) & above) - used - blocked;
      next.for_each([&](int w) {
        if (path.size() >= 2 && g.adjacent(w, s)) {
          if (path[1] < w && (path.size() + 1) % 2 == 1) {
            OddCycle c;
            c.vertices = path;
            c.vertices.push_back(w);
            out.push_back(std::move(c));
          }
          return;
        }
        // Interior vertices other than the newest one may not gain neighbours.
        VertexSet newly_blocked = path.size() >= 2 ? g.neighbors(last) : VertexSet{};
        path.push_back(w);
        used.insert(w);
        self(self, used, blocked | newly_blocked);
        used.erase(w);
        path.pop_back();
      });
    };
    grow(grow, VertexSet::single(s), VertexSet{});
  }
  std::sort(out.begin(), out.end(),
            [](const OddCycle& a, const OddCycle& b) { return lex_less(a.vertex_set(), b.vertex_set()); });
  return out;
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "bridge") return Family::kBridge;
  if (name == "cycle") return Family::kCycle;
  if (name == "complete") return Family::kComplete;
  if (name == "complete_bipartite") return Family::kCompleteBipartite;
  return std::nullopt;
}

Graph generate_family(Family family, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) throw std::invalid_argument("wrong number of family parameters");
  };
  std::vector<Edge> edges;
  switch (family) {
    case Family::kBridge: {
      need(1);
      const int k = params[0];
      if (k < 1 || k + 6 > kMaxVertices) throw std::invalid_argument("bridge family needs 1 <= k <= 58");
      edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
      for (int b = 6; b < k + 6; ++b) {
        edges.push_back({2, b});
        edges.push_back({3, b});
      }
      return Graph(k + 6, edges);
    }
    case Family::kCycle: {
      need(1);
      const int n = params[0];
      if (n < 3 || n > kMaxVertices) throw std::invalid_argument("cycle needs 3 <= n <= 64");
      for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      edges.push_back({0, n - 1});
      return Graph(n, edges);
    }
    case Family::kComplete: {
      need(1);
      const int n = params[0];
      if (n < 1 || n > kMaxVertices) throw std::invalid_argument("complete graph needs 1 <= n <= 64");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
      return Graph(n, edges);
    }
    case Family::kCompleteBipartite: {
      need(2);
      const int a = params[0], b = params[1];
      if (a < 1 || b < 1 || a + b > kMaxVertices) throw std::invalid_argument("complete bipartite needs a, b >= 1");
      for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.push_back({u, v});
      return Graph(a + b, edges);
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace edgering
