#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "reuleaux/core.hpp"

namespace reuleaux::graph {

/// Undirected simple graph on at most 64 vertices, adjacency stored as
/// bitmasks. Used for diameter and diagonal graphs and for coloring.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;
  using Mask = std::uint64_t;

  Graph() = default;
  explicit Graph(int n) : adj_(check_size(n), 0) {}

  int size() const { return static_cast<int>(adj_.size()); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("Graph: loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  Mask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  int num_edges() const {
    int twice = 0;
    for (Mask m : adj_) twice += std::popcount(m);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u) {
      for (int v = u + 1; v < size(); ++v) {
        if (adjacent(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// Induced subgraph on the vertices in `keep`, renumbered in the given order.
  Graph induced(const std::vector<int>& keep) const {
    Graph sub(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        if (adjacent(keep[i], keep[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
    return sub;
  }

  Graph without_vertex(int v) const {
    std::vector<int> keep;
    for (int u = 0; u < size(); ++u) {
      if (u != v) keep.push_back(u);
    }
    return induced(keep);
  }

  Graph without_edge(int u, int v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
  }

  bool operator==(const Graph&) const = default;

  static Mask bit(int v) { return Mask{1} << v; }

 private:
  static std::size_t check_size(int n) {
    if (n < 0) throw ArgumentError("Graph: negative vertex count");
    if (n > kMaxVertices) throw ResourceError("Graph: more than 64 vertices");
    return static_cast<std::size_t>(n);
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= size()) throw ArgumentError("Graph: vertex out of range");
  }

  std::vector<Mask> adj_;
};

}  // namespace reuleaux::graph
