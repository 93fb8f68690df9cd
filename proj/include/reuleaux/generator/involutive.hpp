#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reuleaux/core.hpp"
#include "reuleaux/graph/coloring.hpp"
#include "reuleaux/graph/embedded_graph.hpp"
#include "reuleaux/graph/involution.hpp"
#include "reuleaux/graph/planar.hpp"

namespace reuleaux::generator {

using graph::EmbeddedGraph;
using graph::Involution;

/// Split of the dual face F_v at two non-consecutive vertices x and y.
/// P1 runs from x to y along the boundary walk of F_v, P2 from y back to x.
struct ExpansionStep {
  int v = -1;
  int x = -1;
  int y = -1;
  bool operator==(const ExpansionStep&) const = default;
};

struct Provenance {
  int seed_rim = 0;                  // odd wheel W_r the graph grew from
  std::vector<ExpansionStep> steps;  // vertex ids refer to the graph before each step
};

struct InvolutiveGraph {
  EmbeddedGraph g;
  Involution tau;
  Provenance provenance;

  int size() const { return g.size(); }
};

/// Problems with an involutive graph: polyhedrality, |V| = |F| and the
/// involution axioms. Empty when valid.
inline std::vector<std::string> involutive_defects(const InvolutiveGraph& ig) {
  std::vector<std::string> out;
  if (!ig.g.is_simple()) out.push_back("graph is not simple");
  if (!ig.g.is_planar_embedding()) out.push_back("embedding is not planar");
  if (ig.g.is_simple() && graph::vertex_connectivity(ig.g.simple_graph()).kappa < 3) {
    out.push_back("graph is not 3-connected");
  }
  if (ig.g.num_faces() != ig.g.size()) out.push_back("vertex and face counts differ");
  for (auto& d : graph::involution_defects(ig.g, ig.tau)) out.push_back(d);
  return out;
}

inline graph::Graph diagonal_graph(const InvolutiveGraph& ig) { return graph::diagonal_graph(ig.g, ig.tau); }

/// Hub 0 joined to the rim cycle 1..r. The hub goes to the rim face and rim
/// vertex i to the triangle on rim vertices i + (r-1)/2 and i + (r+1)/2.
inline InvolutiveGraph odd_wheel(int r) {
  if (r < 3 || r % 2 == 0) throw ArgumentError("odd_wheel: rim size must be odd and at least 3");
  auto rim = [r](int i) { return ((i - 1) % r + r) % r + 1; };
  std::vector<std::vector<int>> rotation(r + 1);
  for (int i = 1; i <= r; ++i) {
    rotation[0].push_back(i);
    rotation[i] = {rim(i + 1), 0, rim(i - 1)};
  }
  InvolutiveGraph ig;
  ig.g = EmbeddedGraph::from_rotation(rotation);
  ig.provenance.seed_rim = r;
  std::vector<int> outer;
  for (int i = 1; i <= r; ++i) outer.push_back(i);
  ig.tau.tau.resize(r + 1);
  ig.tau.tau[0] = ig.g.face_vertices(ig.g.find_face(outer));
  const int h = (r - 1) / 2;
  for (int i = 1; i <= r; ++i) {
    int f = ig.g.find_face({0, rim(i + h), rim(i + h + 1)});
    ig.tau.tau[i] = ig.g.face_vertices(f);
  }
  if (!graph::verify_involution(ig.g, ig.tau)) throw ConsistencyError("odd_wheel: involution does not verify");
  return ig;
}

inline bool is_wheel(const EmbeddedGraph& g) {
  const int n = g.size();
  if (n < 4 || g.num_edges() != 2 * (n - 1) || !g.is_simple()) return false;
  int hubs = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      ++hubs;
    } else if (g.degree(v) != 3) {
      return false;
    }
  }
  return hubs >= 1;
}

namespace detail {

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Face lookup keyed by vertex set after applying `rename` to every vertex.
inline std::map<std::vector<int>, int> faces_by_key(const EmbeddedGraph& g, const std::vector<int>& rename) {
  std::map<std::vector<int>, int> out;
  for (int f = 0; f < g.num_faces(); ++f) {
    std::vector<int> key;
    for (int u : g.face_vertices(f)) key.push_back(rename[u]);
    out.emplace(sorted(key), f);
  }
  return out;
}

inline std::vector<int> face_walk(const InvolutiveGraph& ig, int v) {
  int f = ig.g.find_face(ig.tau.tau[v]);
  if (f < 0) throw ArgumentError("tau(v) is not a face");
  return ig.g.face_vertices(f);
}

}  // namespace detail

/// Add-expansion: draw the diagonal xy across F_v and split v into v (keeping
/// the neighbors whose dual edges lie on P1) and a new vertex n (the rest),
/// joined by an edge. The new involution sends v to P1 + xy, the new vertex
/// to P2 + xy, and every other vertex to its old face as it now appears.
inline InvolutiveGraph add_expansion(const InvolutiveGraph& ig, const ExpansionStep& step) {
  const EmbeddedGraph& g = ig.g;
  const int n = g.size();
  const int v = step.v;
  if (v < 0 || v >= n) throw ArgumentError("add_expansion: vertex out of range");
  if (g.degree(v) < 4) throw ArgumentError("add_expansion: vertex degree below 4");
  const std::vector<int> face = detail::face_walk(ig, v);
  const int k = static_cast<int>(face.size());
  auto ix = std::find(face.begin(), face.end(), step.x);
  auto iy = std::find(face.begin(), face.end(), step.y);
  if (ix == face.end() || iy == face.end() || step.x == step.y) {
    throw ArgumentError("add_expansion: split vertices are not on F_v");
  }
  const int px = static_cast<int>(ix - face.begin());
  const int py = static_cast<int>(iy - face.begin());
  const int len1 = (py - px + k) % k + 1;  // vertices on P1
  const int len2 = k + 2 - len1;
  if (len1 < 3 || len2 < 3) throw ArgumentError("add_expansion: both paths need at least three vertices");

  std::set<std::pair<int, int>> p1_edges;
  std::vector<int> p1, p2;
  for (int i = 0; i < len1; ++i) p1.push_back(face[(px + i) % k]);
  for (int i = 0; i < len2; ++i) p2.push_back(face[(py + i) % k]);
  for (int i = 0; i + 1 < len1; ++i) p1_edges.insert(std::minmax(p1[i], p1[i + 1]));

  // Which side each neighbor of v attaches to, read off its dual edge.
  const std::vector<int> around = g.neighbors(v);
  const std::set<int> fv(face.begin(), face.end());
  std::vector<char> side1;
  for (int w : around) {
    std::vector<int> common;
    for (int u : ig.tau.tau[w]) {
      if (fv.count(u)) common.push_back(u);
    }
    if (common.size() != 2) throw ArgumentError("add_expansion: neighbor without a dual edge on F_v");
    side1.push_back(p1_edges.count(std::minmax(common[0], common[1])) ? 1 : 0);
  }
  const int deg = static_cast<int>(around.size());
  int start = -1;
  for (int i = 0; i < deg; ++i) {
    if (side1[i] && !side1[(i + deg - 1) % deg]) {
      if (start >= 0) throw ArgumentError("add_expansion: attachment is not contiguous in the rotation");
      start = i;
    }
  }
  if (start < 0) throw ArgumentError("add_expansion: attachment rule not satisfiable");

  const int v2 = n;
  std::vector<std::vector<int>> rot = g.rotation();
  rot.emplace_back();
  std::vector<int> a1, a2;
  for (int i = 0; i < deg; ++i) {
    int w = around[(start + i) % deg];
    (side1[(start + i) % deg] ? a1 : a2).push_back(w);
  }
  rot[v] = a1;
  rot[v].push_back(v2);
  rot[v2] = a2;
  rot[v2].push_back(v);
  for (int w : a2) std::replace(rot[w].begin(), rot[w].end(), v, v2);
  auto insert_chord = [&](int at, int to) {
    int pos = static_cast<int>(std::find(face.begin(), face.end(), at) - face.begin());
    int before = face[(pos + k - 1) % k];
    if (before == v) throw ConsistencyError("add_expansion: F_v contains v");
    auto& r = rot[at];
    auto it = std::find(r.begin(), r.end(), before);
    r.insert(it + 1, to);
  };
  insert_chord(step.x, step.y);
  insert_chord(step.y, step.x);

  InvolutiveGraph out;
  try {
    out.g = EmbeddedGraph::from_rotation(rot);
  } catch (const ArgumentError&) {
    throw ArgumentError("add_expansion: result is not simple");
  }
  out.provenance = ig.provenance;
  out.provenance.steps.push_back(step);

  std::vector<int> rename(n + 1);
  for (int u = 0; u <= n; ++u) rename[u] = u;
  rename[v2] = v;
  auto by_key = detail::faces_by_key(out.g, rename);
  auto lookup = [&](const std::vector<int>& key) {
    auto it = by_key.find(detail::sorted(key));
    if (it == by_key.end()) throw ArgumentError("add_expansion: expected face missing after expansion");
    return out.g.face_vertices(it->second);
  };
  out.tau.tau.resize(n + 1);
  for (int w = 0; w < n; ++w) {
    if (w != v) out.tau.tau[w] = lookup(ig.tau.tau[w]);
  }
  out.tau.tau[v] = lookup(p1);
  out.tau.tau[v2] = lookup(p2);
  auto defects = involutive_defects(out);
  if (!defects.empty()) throw ArgumentError("add_expansion: " + defects.front());
  return out;
}

/// Delete-contraction: contract e = ab and delete its dual edge
/// tau(a) ∩ tau(b). Throws RejectionError when the result is not an
/// involutive polyhedral graph.
inline InvolutiveGraph delete_contraction(const InvolutiveGraph& ig, int a, int b) {
  const EmbeddedGraph& g = ig.g;
  const int n = g.size();
  if (a < 0 || b < 0 || a >= n || b >= n || a == b || !g.has_edge(a, b)) {
    throw ArgumentError("delete_contraction: not an edge");
  }
  std::vector<int> dual_edge;
  {
    std::set<int> ta(ig.tau.tau[a].begin(), ig.tau.tau[a].end());
    for (int u : ig.tau.tau[b]) {
      if (ta.count(u)) dual_edge.push_back(u);
    }
  }
  if (dual_edge.size() != 2 || !g.has_edge(dual_edge[0], dual_edge[1])) {
    throw ConsistencyError("delete_contraction: edge has no dual edge");
  }
  const int x = dual_edge[0];
  const int y = dual_edge[1];
  const int keep = std::min(a, b);
  const int gone = std::max(a, b);

  std::vector<std::vector<int>> rot = g.rotation();
  auto after = [&](int at, int skip) {
    const auto& r = rot[at];
    auto it = std::find(r.begin(), r.end(), skip);
    std::vector<int> out;
    for (std::size_t i = 1; i < r.size(); ++i) out.push_back(r[(it - r.begin() + i) % r.size()]);
    return out;
  };
  std::vector<int> merged = after(a, b);
  for (int w : after(b, a)) merged.push_back(w);
  rot[a].clear();
  rot[b].clear();
  rot[keep] = merged;
  for (int u = 0; u < n; ++u) {
    if (u == a || u == b) continue;
    std::replace(rot[u].begin(), rot[u].end(), a, keep);
    std::replace(rot[u].begin(), rot[u].end(), b, keep);
  }
  auto drop = [&](int at, int other) {
    auto& r = rot[at];
    r.erase(std::find(r.begin(), r.end(), other));
  };
  drop(x, y);
  drop(y, x);

  std::vector<int> rename(n);
  for (int u = 0; u < n; ++u) {
    int w = (u == gone) ? keep : u;
    rename[u] = w > gone ? w - 1 : w;
  }
  std::vector<std::vector<int>> compact(n - 1);
  for (int u = 0; u < n; ++u) {
    if (u == gone) continue;
    for (int w : rot[u]) compact[rename[u]].push_back(rename[w]);
  }

  InvolutiveGraph out;
  try {
    out.g = EmbeddedGraph::from_rotation(compact);
  } catch (const ArgumentError&) {
    throw RejectionError("delete_contraction: result is not simple");
  }
  if (!out.g.is_polyhedral()) throw RejectionError("delete_contraction: result is not polyhedral");
  out.provenance = ig.provenance;
  if (!out.provenance.steps.empty()) out.provenance.steps.pop_back();

  std::vector<int> identity(n - 1);
  for (int u = 0; u < n - 1; ++u) identity[u] = u;
  auto by_key = detail::faces_by_key(out.g, identity);
  auto lookup = [&](const std::vector<int>& old) {
    std::vector<int> key;
    for (int u : old) key.push_back(rename[u]);
    auto it = by_key.find(detail::sorted(key));
    if (it == by_key.end()) throw RejectionError("delete_contraction: face lost");
    return out.g.face_vertices(it->second);
  };
  out.tau.tau.resize(n - 1);
  for (int w = 0; w < n; ++w) {
    if (w == a || w == b) continue;
    out.tau.tau[rename[w]] = lookup(ig.tau.tau[w]);
  }
  std::vector<int> joined = ig.tau.tau[a];
  joined.insert(joined.end(), ig.tau.tau[b].begin(), ig.tau.tau[b].end());
  out.tau.tau[keep] = lookup(joined);
  if (!graph::involution_defects(out.g, out.tau).empty()) {
    throw RejectionError("delete_contraction: patched involution does not verify");
  }
  return out;
}

/// An edge whose delete-contraction succeeds; empty for wheels.
inline std::optional<std::pair<int, int>> find_reducible_edge(const InvolutiveGraph& ig) {
  if (is_wheel(ig.g)) return std::nullopt;
  for (auto [a, b] : ig.g.edges()) {
    try {
      delete_contraction(ig, a, b);
      return std::make_pair(a, b);
    } catch (const RejectionError&) {
    }
  }
  return std::nullopt;
}

/// All add-expansion steps of `ig` in enumeration order: vertices ascending,
/// then split positions along the boundary walk of F_v.
inline std::vector<ExpansionStep> expansion_steps(const InvolutiveGraph& ig) {
  std::vector<ExpansionStep> out;
  for (int v = 0; v < ig.size(); ++v) {
    if (ig.g.degree(v) < 4) continue;
    auto face = detail::face_walk(ig, v);
    const int k = static_cast<int>(face.size());
    for (int i = 0; i < k; ++i) {
      for (int j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        out.push_back({v, face[i], face[j]});
      }
    }
  }
  return out;
}

struct EnumerationOptions {
  int n_max = 8;
  bool verify_criticality = true;
};

inline constexpr int kMaxEnumerationOrder = 14;

/// Full check used on every enumerated graph: involutive and the diagonal
/// graph is vertex- and edge-4-critical.
inline std::vector<std::string> full_verification(const InvolutiveGraph& ig) {
  auto out = involutive_defects(ig);
  if (!out.empty()) return out;
  graph::Graph diag = diagonal_graph(ig);
  if (diag.num_edges() != 2 * ig.size() - 2) out.push_back("diagonal graph does not have 2n-2 edges");
  if (!graph::is_vertex_4_critical(diag)) out.push_back("diagonal graph is not vertex-4-critical");
  if (!graph::is_edge_4_critical(diag)) out.push_back("diagonal graph is not edge-4-critical");
  return out;
}

/// Isomorph-free involutive polyhedral graphs with at most `n_max` vertices,
/// grown breadth-first from the odd wheels by add-expansion and deduplicated
/// by canonical code. Ordered by vertex count, then discovery order.
inline std::vector<InvolutiveGraph> enumerate(const EnumerationOptions& opts) {
  if (opts.n_max > kMaxEnumerationOrder) throw ResourceError("enumerate: n_max above 14");
  std::vector<std::vector<InvolutiveGraph>> levels(std::max(opts.n_max + 1, 0));
  std::set<std::vector<int>> seen;
  auto admit = [&](InvolutiveGraph ig) {
    auto code = graph::canonical_code(ig.g);
    if (!seen.insert(std::move(code)).second) return;
    if (opts.verify_criticality) {
      auto defects = full_verification(ig);
      if (!defects.empty()) throw ConsistencyError("enumerate: " + defects.front());
    }
    levels[ig.size()].push_back(std::move(ig));
  };
  for (int n = 4; n <= opts.n_max; ++n) {
    if ((n - 1) % 2 == 1) admit(odd_wheel(n - 1));
    if (n == opts.n_max) break;
    for (std::size_t i = 0; i < levels[n].size(); ++i) {
      for (const auto& step : expansion_steps(levels[n][i])) {
        try {
          admit(add_expansion(levels[n][i], step));
        } catch (const ArgumentError&) {
        }
      }
    }
  }
  std::vector<InvolutiveGraph> out;
  for (auto& level : levels) {
    for (auto& ig : level) out.push_back(std::move(ig));
  }
  return out;
}

inline std::vector<InvolutiveGraph> enumerate(int n_max) { return enumerate(EnumerationOptions{n_max, true}); }

}  // namespace reuleaux::generator
