#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/graph_io.hpp"

namespace fixtures {

using edgering::Graph;

inline constexpr std::string_view kTwoTriangles = "8 10\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n3 7\n7 4\n3 8\n8 4\n";

inline Graph two_triangles() { return edgering::parse_edge_list(kTwoTriangles); }
inline Graph k3() { return Graph::from_labels(3, {{1, 2}, {2, 3}, {1, 3}}); }
inline Graph c4() { return Graph::from_labels(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }
inline Graph c5() { return Graph::from_labels(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }
inline Graph k4() {
  return Graph::from_labels(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}
inline Graph bridge(int k) {
  const int params[] = {k};
  return edgering::generate_family(edgering::Family::kBridge, params);
}

/// Random graph with edge probability p, fixed seed per call site.
inline Graph random_graph(std::mt19937& rng, int d, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<edgering::Edge> edges;
  for (int u = 0; u < d; ++u)
    for (int v = u + 1; v < d; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(d, edges);
}

/// 1-based label set.
inline edgering::VertexSet labels(std::initializer_list<int> vs) {
  edgering::VertexSet s;
  for (int v : vs) s.insert(v - 1);
  return s;
}

}  // namespace fixtures
