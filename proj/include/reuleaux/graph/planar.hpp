#pragma once

#include <algorithm>
#include <vector>

#include "reuleaux/graph/embedded_graph.hpp"

namespace reuleaux::graph {

/// Dual map. Face f of `g` becomes vertex f; primal dart d becomes the dual
/// dart from face(d) to face(reverse(d)), so the rotation at a dual vertex is
/// the boundary walk of the face.
inline EmbeddedGraph dual(const EmbeddedGraph& g) {
  if (!g.is_connected()) throw ArgumentError("dual: graph is not connected");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) edges.emplace_back(g.face_of(2 * e), g.face_of(2 * e + 1));
  std::vector<std::vector<int>> rot = g.face_darts();
  return EmbeddedGraph(g.num_faces(), std::move(edges), std::move(rot));
}

namespace detail {

// BFS encoding of a connected map from a root dart. With `mirror` the
// rotations are read clockwise.
inline std::vector<int> encode_from(const EmbeddedGraph& g, int root, bool mirror) {
  const int n = g.size();
  std::vector<int> number(n, -1);
  std::vector<int> start(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  std::vector<int> code{n, g.num_edges()};
  code.reserve(2 + 2 * g.num_edges() + n);
  int v0 = g.tail(root);
  number[v0] = 0;
  start[v0] = root;
  queue.push_back(v0);
  int counter = 1;
  for (std::size_t idx = 0; idx < queue.size(); ++idx) {
    int v = queue[idx];
    int d = start[v];
    for (int k = 0; k < g.degree(v); ++k) {
      int w = g.head(d);
      if (number[w] < 0) {
        number[w] = counter++;
        start[w] = EmbeddedGraph::reverse(d);
        queue.push_back(w);
      }
      code.push_back(number[w] + 1);
      d = mirror ? g.rotation_prev(d) : g.rotation_next(d);
    }
    code.push_back(0);
  }
  return code;
}

}  // namespace detail

/// Canonical code of a connected embedded graph: the lexicographically least
/// BFS encoding over every root dart and both orientations. Two connected
/// simple maps have equal codes iff they are isomorphic up to reflection.
inline std::vector<int> canonical_code(const EmbeddedGraph& g) {
  if (g.size() == 0) return {0, 0};
  if (!g.is_connected()) throw ArgumentError("canonical_code: graph is not connected");
  if (g.num_darts() == 0) return {1, 0, 0};
  std::vector<int> best;
  for (int d = 0; d < g.num_darts(); ++d) {
    for (bool mirror : {false, true}) {
      auto code = detail::encode_from(g, d, mirror);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

/// Embedded-graph isomorphism up to reflection. Disconnected graphs are
/// compared by the multiset of their component codes.
inline bool are_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  if (a.size() != b.size() || a.num_edges() != b.num_edges()) return false;
  auto component_codes = [](const EmbeddedGraph& g) {
    std::vector<int> comp = g.components();
    int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<int>> codes;
    for (int c = 0; c < count; ++c) {
      std::vector<int> local(g.size(), -1);
      int m = 0;
      for (int v = 0; v < g.size(); ++v) {
        if (comp[v] == c) local[v] = m++;
      }
      std::vector<std::pair<int, int>> edges;
      std::vector<int> edge_local(g.num_edges(), -1);
      for (int e = 0; e < g.num_edges(); ++e) {
        auto [x, y] = g.edges()[e];
        if (comp[x] == c) {
          edge_local[e] = static_cast<int>(edges.size());
          edges.emplace_back(local[x], local[y]);
        }
      }
      std::vector<std::vector<int>> rot(m);
      for (int v = 0; v < g.size(); ++v) {
        if (comp[v] != c) continue;
        for (int d : g.rotation_darts(v)) rot[local[v]].push_back(2 * edge_local[d / 2] + d % 2);
      }
      codes.push_back(canonical_code(EmbeddedGraph(m, std::move(edges), std::move(rot))));
    }
    std::sort(codes.begin(), codes.end());
    return codes;
  };
  return component_codes(a) == component_codes(b);
}

/// Tries to extend `root_a -> root_b` to a graph isomorphism by walking both
/// rotations in lockstep (b clockwise when `mirror`). Returns the vertex map,
/// or an empty vector when the walk is inconsistent.
inline std::vector<int> map_isomorphism(const EmbeddedGraph& a, int root_a, const EmbeddedGraph& b, int root_b,
                                        bool mirror) {
  const int n = a.size();
  if (n != b.size() || a.num_edges() != b.num_edges()) return {};
  std::vector<int> vmap(n, -1);
  std::vector<char> used(n, 0);
  struct Item {
    int v, da, db;
  };
  std::vector<Item> queue{{a.tail(root_a), root_a, root_b}};
  vmap[a.tail(root_a)] = b.tail(root_b);
  used[b.tail(root_b)] = 1;
  for (std::size_t idx = 0; idx < queue.size(); ++idx) {
    auto [v, da, db] = queue[idx];
    if (a.degree(v) != b.degree(vmap[v])) return {};
    for (int k = 0; k < a.degree(v); ++k) {
      int wa = a.head(da);
      int wb = b.head(db);
      if (vmap[wa] < 0) {
        if (used[wb]) return {};
        vmap[wa] = wb;
        used[wb] = 1;
        queue.push_back({wa, EmbeddedGraph::reverse(da), EmbeddedGraph::reverse(db)});
      } else if (vmap[wa] != wb) {
        return {};
      }
      da = a.rotation_next(da);
      db = mirror ? b.rotation_prev(db) : b.rotation_next(db);
    }
  }
  if (static_cast<int>(queue.size()) != n) return {};
  return vmap;
}

}  // namespace reuleaux::graph
