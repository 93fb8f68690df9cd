#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reuleaux/graph/coloring.hpp"
#include "reuleaux/graph/embedded_graph.hpp"
#include "reuleaux/graph/planar.hpp"

namespace reuleaux::graph {

/// Vertex -> face map; `tau[v]` is the cyclic vertex sequence of the face F_v.
struct Involution {
  std::vector<std::vector<int>> tau;
  bool operator==(const Involution&) const = default;
};

/// Human-readable list of everything wrong with (g, tau); empty when tau is
/// a valid involution: a bijection onto the faces that is a self-duality
/// (adjacent vertices go to faces sharing an edge), with v not in F_v and
/// u in F_v exactly when v in F_u.
inline std::vector<std::string> involution_defects(const EmbeddedGraph& g, const Involution& inv) {
  std::vector<std::string> defects;
  const int n = g.size();
  if (static_cast<int>(inv.tau.size()) != n) {
    defects.push_back("tau is not total");
    return defects;
  }
  std::vector<int> face(n, -1);
  std::set<int> hit;
  for (int v = 0; v < n; ++v) {
    face[v] = g.find_face(inv.tau[v]);
    if (face[v] < 0) {
      defects.push_back("tau(" + std::to_string(v) + ") is not a face");
    } else if (!hit.insert(face[v]).second) {
      defects.push_back("tau is not injective at " + std::to_string(v));
    }
  }
  if (!defects.empty()) return defects;
  if (g.num_faces() != n) defects.push_back("tau is not onto the faces");

  std::vector<std::set<int>> members(n);
  for (int v = 0; v < n; ++v) members[v].insert(inv.tau[v].begin(), inv.tau[v].end());
  for (int v = 0; v < n; ++v) {
    if (members[v].count(v)) defects.push_back("axiom 1 fails at " + std::to_string(v));
    for (int u : members[v]) {
      if (!members[u].count(v)) {
        defects.push_back("axiom 2 fails for " + std::to_string(u) + " in tau(" + std::to_string(v) + ")");
      }
    }
  }

  std::set<std::pair<int, int>> face_adjacent;
  for (int e = 0; e < g.num_edges(); ++e) face_adjacent.insert(std::minmax(g.face_of(2 * e), g.face_of(2 * e + 1)));
  for (auto [u, v] : g.edges()) {
    if (!face_adjacent.count(std::minmax(face[u], face[v]))) {
      defects.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not sent to a dual edge");
    }
  }
  return defects;
}

inline bool verify_involution(const EmbeddedGraph& g, const Involution& inv) {
  return involution_defects(g, inv).empty();
}

/// All involutions of a polyhedral graph, found by enumerating duality
/// isomorphisms G -> G* (every root dart of G* in both orientations) and
/// keeping those that satisfy both axioms. Deterministic order, no repeats.
inline std::vector<Involution> all_involutions(const EmbeddedGraph& g) {
  if (!g.is_polyhedral()) throw ArgumentError("find_involution: graph is not simple, 3-connected and planar");
  std::vector<Involution> found;
  if (g.num_faces() != g.size()) return found;
  EmbeddedGraph star = dual(g);
  std::set<std::vector<int>> seen;
  for (int db = 0; db < star.num_darts(); ++db) {
    for (bool mirror : {false, true}) {
      auto vmap = map_isomorphism(g, 0, star, db, mirror);
      if (vmap.empty() || !seen.insert(vmap).second) continue;
      Involution inv;
      for (int v = 0; v < g.size(); ++v) inv.tau.push_back(g.face_vertices(vmap[v]));
      if (verify_involution(g, inv)) found.push_back(std::move(inv));
    }
  }
  return found;
}

inline std::optional<Involution> find_involution(const EmbeddedGraph& g) {
  auto all = all_involutions(g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// Diagonal graph: [a, x] is an edge whenever x lies on F_a.
inline Graph diagonal_graph(const EmbeddedGraph& g, const Involution& inv) {
  if (!verify_involution(g, inv)) throw ArgumentError("diagonal_graph: involution does not verify");
  Graph diag(g.size());
  for (int a = 0; a < g.size(); ++a) {
    for (int x : inv.tau[a]) diag.add_edge(a, x);
  }
  return diag;
}

}  // namespace reuleaux::graph
