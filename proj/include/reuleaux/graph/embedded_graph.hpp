#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reuleaux/core.hpp"
#include "reuleaux/graph/connectivity.hpp"
#include "reuleaux/graph/simple_graph.hpp"

namespace reuleaux::graph {

/// A graph cellularly embedded in the sphere, given by a rotation system.
///
/// Edges are stored as endpoint pairs; edge `e` owns the two darts `2e`
/// (first -> second) and `2e + 1` (second -> first). The rotation at a vertex
/// is the cyclic order of the darts leaving it. Loops and parallel edges are
/// representable, which the ball-polyhedron skeleton needs for degenerate
/// inputs; `is_simple()` reports them.
///
/// Faces are traced with the rule next(u->v) = (v -> successor of u at v).
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  /// General constructor. `rotation[v]` lists dart ids leaving v.
  EmbeddedGraph(int n, std::vector<std::pair<int, int>> edges, std::vector<std::vector<int>> rotation)
      : n_(n), edges_(std::move(edges)), rot_(std::move(rotation)) {
    build();
  }

  /// Simple graph from neighbor lists in cyclic order.
  static EmbeddedGraph from_rotation(const std::vector<std::vector<int>>& neighbors) {
    const int n = static_cast<int>(neighbors.size());
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> edge_id;
    for (int u = 0; u < n; ++u) {
      std::set<int> seen;
      for (int v : neighbors[u]) {
        if (v < 0 || v >= n) throw ArgumentError("rotation: neighbor out of range");
        if (v == u) throw ArgumentError("rotation: loop in simple rotation system");
        if (!seen.insert(v).second) throw ArgumentError("rotation: repeated neighbor");
        auto key = std::minmax(u, v);
        if (!edge_id.count(key)) {
          edge_id[key] = static_cast<int>(edges.size());
          edges.push_back(key);
        }
      }
    }
    std::vector<std::vector<int>> rot(n);
    for (int u = 0; u < n; ++u) {
      for (int v : neighbors[u]) {
        int e = edge_id.at(std::minmax(u, v));
        rot[u].push_back(2 * e + (edges[e].first == u ? 0 : 1));
      }
    }
    return EmbeddedGraph(n, std::move(edges), std::move(rot));
  }

  int size() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(face_darts_.size()); }
  int num_darts() const { return 2 * num_edges(); }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& rotation_darts(int v) const { return rot_[v]; }

  int tail(int d) const { return d % 2 == 0 ? edges_[d / 2].first : edges_[d / 2].second; }
  int head(int d) const { return tail(d ^ 1); }
  static int reverse(int d) { return d ^ 1; }
  int edge_of(int d) const { return d / 2; }

  /// Dart after `d` in the rotation at tail(d).
  int rotation_next(int d) const {
    const auto& r = rot_[tail(d)];
    return r[(pos_[d] + 1) % r.size()];
  }
  int rotation_prev(int d) const {
    const auto& r = rot_[tail(d)];
    return r[(pos_[d] + r.size() - 1) % r.size()];
  }
  /// Successor of dart d along its face.
  int face_next(int d) const { return rotation_next(reverse(d)); }

  int degree(int v) const { return static_cast<int>(rot_[v].size()); }

  /// Neighbor ids of v in cyclic order (repeated for parallel edges).
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int d : rot_[v]) out.push_back(head(d));
    return out;
  }
  std::vector<std::vector<int>> rotation() const {
    std::vector<std::vector<int>> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = neighbors(v);
    return out;
  }

  const std::vector<std::vector<int>>& face_darts() const { return face_darts_; }
  int face_of(int d) const { return face_of_[d]; }

  /// Cyclic vertex sequence of face f.
  std::vector<int> face_vertices(int f) const {
    std::vector<int> out;
    for (int d : face_darts_[f]) out.push_back(tail(d));
    return out;
  }
  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    for (int f = 0; f < num_faces(); ++f) out.push_back(face_vertices(f));
    return out;
  }

  /// Index of the face whose vertex set equals `vertices`, or -1.
  int find_face(std::vector<int> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    for (int f = 0; f < num_faces(); ++f) {
      auto fv = face_vertices(f);
      std::sort(fv.begin(), fv.end());
      if (fv == vertices) return f;
    }
    return -1;
  }

  bool has_edge(int u, int v) const {
    for (int d : rot_[u]) {
      if (head(d) == v) return true;
    }
    return false;
  }

  bool is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges_) {
      if (a == b) return false;
      if (!seen.insert(std::minmax(a, b)).second) return false;
    }
    return true;
  }

  int euler_characteristic() const { return n_ - num_edges() + num_faces(); }

  /// Genus-zero test for a connected embedding.
  bool is_planar_embedding() const { return is_connected() && euler_characteristic() == 2; }

  /// Underlying simple graph (parallel edges merged, loops dropped).
  Graph simple_graph() const {
    Graph g(n_);
    for (auto [a, b] : edges_) {
      if (a != b) g.add_edge(a, b);
    }
    return g;
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    std::vector<int> comp = components();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
  }

  /// Component index per vertex.
  std::vector<int> components() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    for (int s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = next;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : rot_[v]) {
          int w = head(d);
          if (comp[w] < 0) {
            comp[w] = next;
            stack.push_back(w);
          }
        }
      }
      ++next;
    }
    return comp;
  }

  /// Simple, 3-connected and planar.
  bool is_polyhedral() const {
    if (n_ < 4 || !is_simple() || !is_planar_embedding()) return false;
    return vertex_connectivity(simple_graph()).kappa >= 3;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
      throw ArgumentError("EmbeddedGraph: label count mismatch");
    }
    labels_ = std::move(labels);
  }
  std::string label(int v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

 private:
  void build() {
    if (n_ < 0 || static_cast<int>(rot_.size()) != n_) {
      throw ArgumentError("EmbeddedGraph: rotation size does not match vertex count");
    }
    const int darts = num_darts();
    pos_.assign(darts, -1);
    for (auto [a, b] : edges_) {
      if (a < 0 || a >= n_ || b < 0 || b >= n_) throw ArgumentError("EmbeddedGraph: edge endpoint out of range");
    }
    for (int v = 0; v < n_; ++v) {
      for (std::size_t i = 0; i < rot_[v].size(); ++i) {
        int d = rot_[v][i];
        if (d < 0 || d >= darts) throw ArgumentError("EmbeddedGraph: dart out of range");
        if (tail(d) != v) throw ArgumentError("EmbeddedGraph: dart listed at a vertex that is not its tail");
        if (pos_[d] >= 0) throw ArgumentError("EmbeddedGraph: dart listed twice");
        pos_[d] = static_cast<int>(i);
      }
    }
    for (int d = 0; d < darts; ++d) {
      if (pos_[d] < 0) throw ArgumentError("EmbeddedGraph: dart missing from rotation");
    }
    face_of_.assign(darts, -1);
    face_darts_.clear();
    for (int d0 = 0; d0 < darts; ++d0) {
      if (face_of_[d0] >= 0) continue;
      const int f = static_cast<int>(face_darts_.size());
      face_darts_.emplace_back();
      int d = d0;
      do {
        face_of_[d] = f;
        face_darts_[f].push_back(d);
        d = face_next(d);
      } while (d != d0);
    }
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> pos_;
  std::vector<int> face_of_;
  std::vector<std::vector<int>> face_darts_;
  std::vector<std::string> labels_;
};

}  // namespace reuleaux::graph
