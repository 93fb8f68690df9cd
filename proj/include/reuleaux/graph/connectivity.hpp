#pragma once

#include <bit>
#include <vector>

#include "reuleaux/graph/simple_graph.hpp"

namespace reuleaux::graph {

/// Vertex connectivity capped at 3. `kappa == 3` means "3 or more".
struct Connectivity {
  int kappa = 0;
  std::vector<int> cut;                       // a minimum cut when kappa <= 2
  std::vector<std::vector<int>> minimum_cuts;  // all minimum cuts, lexicographic
};

inline bool connected_without(const Graph& g, Graph::Mask removed) {
  const int n = g.size();
  Graph::Mask alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!((removed >> v) & 1U)) alive |= Graph::bit(v);
  }
  if (alive == 0) return true;
  Graph::Mask seen = Graph::bit(std::countr_zero(alive));
  Graph::Mask frontier = seen;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Graph::Mask fresh = g.neighbors(v) & alive & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == alive;
}

inline bool is_connected(const Graph& g) { return connected_without(g, 0); }

/// Exact vertex connectivity up to 3 by exhaustive removal of 0, 1 and 2
/// vertices. A complete graph K_n has connectivity n - 1.
inline Connectivity vertex_connectivity(const Graph& g) {
  const int n = g.size();
  Connectivity out;
  if (n <= 1 || !is_connected(g)) {
    out.kappa = 0;
    if (n > 1) out.minimum_cuts.push_back({});
    return out;
  }
  auto complete_bound = [&](int k) { return n - 1 <= k; };

  for (int v = 0; v < n; ++v) {
    if (n - 1 >= 2 && !connected_without(g, Graph::bit(v))) out.minimum_cuts.push_back({v});
  }
  if (!out.minimum_cuts.empty()) {
    out.kappa = 1;
    out.cut = out.minimum_cuts.front();
    return out;
  }
  if (complete_bound(1)) {
    out.kappa = 1;
    return out;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (n - 2 >= 2 && !connected_without(g, Graph::bit(u) | Graph::bit(v))) {
        out.minimum_cuts.push_back({u, v});
      }
    }
  }
  if (!out.minimum_cuts.empty()) {
    out.kappa = 2;
    out.cut = out.minimum_cuts.front();
    return out;
  }
  out.kappa = complete_bound(2) ? 2 : 3;
  return out;
}

}  // namespace reuleaux::graph
