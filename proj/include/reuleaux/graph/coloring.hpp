#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "reuleaux/graph/simple_graph.hpp"

namespace reuleaux::graph {

/// A proper coloring with colors in {0,1,2,3}. When `special_vertex` is set
/// it is the only vertex carrying color 3.
struct ColoringCertificate {
  std::vector<int> assignment;
  std::optional<int> special_vertex;
};

namespace detail {

// DSATUR backtracking for a k-coloring. New colors are only opened in order
// (max used + 1), so the first colored vertex always gets color 0.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, int k) : g_(g), k_(k), color_(g.size(), -1) {}

  bool run() { return extend(0, 0); }
  std::vector<int> colors() const { return color_; }

 private:
  int saturation(int v) const {
    Graph::Mask used = 0;
    Graph::Mask nb = g_.neighbors(v);
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (color_[u] >= 0) used |= Graph::bit(color_[u]);
    }
    return std::popcount(used);
  }

  bool extend(int colored, int used_colors) {
    const int n = g_.size();
    if (colored == n) return true;
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color_[v] >= 0) continue;
      int sat = saturation(v);
      int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    const int limit = std::min(k_, used_colors + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      Graph::Mask nb = g_.neighbors(best);
      while (nb && !clash) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        clash = color_[u] == c;
      }
      if (clash) continue;
      color_[best] = c;
      if (extend(colored + 1, std::max(used_colors, c + 1))) return true;
      color_[best] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
};

inline int greedy_clique_size(const Graph& g) {
  int best = g.size() > 0 ? 1 : 0;
  for (int start = 0; start < g.size(); ++start) {
    Graph::Mask candidates = g.neighbors(start);
    int size = 1;
    while (candidates) {
      int pick = -1;
      int pick_deg = -1;
      Graph::Mask scan = candidates;
      while (scan) {
        int u = std::countr_zero(scan);
        scan &= scan - 1;
        int d = std::popcount(g.neighbors(u) & candidates);
        if (d > pick_deg) {
          pick = u;
          pick_deg = d;
        }
      }
      ++size;
      candidates &= g.neighbors(pick);
    }
    best = std::max(best, size);
  }
  return best;
}

inline std::vector<int> greedy_dsatur(const Graph& g) {
  const int n = g.size();
  std::vector<int> color(n, -1);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      Graph::Mask used = 0;
      for (int u = 0; u < n; ++u) {
        if (g.adjacent(u, v) && color[u] >= 0) used |= Graph::bit(color[u]);
      }
      int sat = std::popcount(used);
      if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = g.degree(v);
      }
    }
    Graph::Mask used = 0;
    for (int u = 0; u < n; ++u) {
      if (g.adjacent(u, best) && color[u] >= 0) used |= Graph::bit(color[u]);
    }
    color[best] = std::countr_one(used);
  }
  return color;
}

}  // namespace detail

/// A proper k-coloring of `g` if one exists.
inline std::optional<std::vector<int>> k_coloring(const Graph& g, int k) {
  if (g.size() == 0) return std::vector<int>{};
  if (k <= 0) return std::nullopt;
  detail::KColorSearch search(g, k);
  if (!search.run()) return std::nullopt;
  return search.colors();
}

struct OptimalColoring {
  int chromatic_number = 0;
  std::vector<int> colors;
};

/// Exact chromatic number by branch and bound: a greedy clique gives the
/// lower bound, greedy DSATUR the upper bound, and k-colorability is decided
/// by exhaustive DSATUR search for every k in between.
inline OptimalColoring optimal_coloring(const Graph& g) {
  if (g.size() == 0) return {};
  std::vector<int> upper = detail::greedy_dsatur(g);
  int hi = *std::max_element(upper.begin(), upper.end()) + 1;
  int lo = detail::greedy_clique_size(g);
  for (int k = lo; k < hi; ++k) {
    if (auto c = k_coloring(g, k)) return {k, *c};
  }
  return {hi, upper};
}

inline int chromatic_number(const Graph& g) { return optimal_coloring(g).chromatic_number; }

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.size()) return false;
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

/// Checks the certificate invariants: proper, colors in {0..3}, and the
/// special vertex (if any) is the unique vertex of color 3.
inline bool check_certificate(const Graph& g, const ColoringCertificate& cert) {
  if (!is_proper_coloring(g, cert.assignment)) return false;
  for (int c : cert.assignment) {
    if (c < 0 || c > 3) return false;
  }
  if (cert.special_vertex) {
    int s = *cert.special_vertex;
    if (s < 0 || s >= g.size() || cert.assignment[s] != 3) return false;
    for (int v = 0; v < g.size(); ++v) {
      if (v != s && cert.assignment[v] == 3) return false;
    }
  }
  return true;
}

/// Proper 4-coloring in which `v` is the only vertex of color 3, built from a
/// 3-coloring of g - v. Empty when g - v is not 3-colorable.
inline std::optional<ColoringCertificate> isolating_coloring(const Graph& g, int v) {
  auto sub = k_coloring(g.without_vertex(v), 3);
  if (!sub) return std::nullopt;
  ColoringCertificate cert;
  cert.assignment.assign(g.size(), 3);
  for (int u = 0, j = 0; u < g.size(); ++u) {
    if (u != v) cert.assignment[u] = (*sub)[j++];
  }
  cert.special_vertex = v;
  return cert;
}

struct VertexCriticality {
  bool critical = false;
  int chromatic_number = 0;
  std::vector<ColoringCertificate> certificates;  // one per vertex when critical
  std::vector<int> non_critical_vertices;
};

inline VertexCriticality vertex_4_criticality(const Graph& g) {
  VertexCriticality out;
  out.chromatic_number = chromatic_number(g);
  if (out.chromatic_number != 4) return out;
  for (int v = 0; v < g.size(); ++v) {
    if (auto cert = isolating_coloring(g, v)) {
      out.certificates.push_back(std::move(*cert));
    } else {
      out.non_critical_vertices.push_back(v);
    }
  }
  out.critical = out.non_critical_vertices.empty();
  if (!out.critical) out.certificates.clear();
  return out;
}

inline bool is_vertex_4_critical(const Graph& g) { return vertex_4_criticality(g).critical; }

inline bool is_edge_4_critical(const Graph& g) {
  if (chromatic_number(g) != 4) return false;
  for (auto [u, v] : g.edges()) {
    if (!k_coloring(g.without_edge(u, v), 3)) return false;
  }
  return true;
}

}  // namespace reuleaux::graph
