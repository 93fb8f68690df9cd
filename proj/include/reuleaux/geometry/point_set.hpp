#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reuleaux/core.hpp"
#include "reuleaux/graph/simple_graph.hpp"

namespace reuleaux::geometry {

inline constexpr double kDefaultTolerance = 1e-9;

/// Labeled points in R^3 with a relative tolerance. Every predicate runs on
/// the normalized copy (translated to the centroid, scaled to diameter 1);
/// `to_original` maps normalized coordinates back.
class PointSet {
 public:
  PointSet() = default;

  PointSet(std::vector<std::string> labels, std::vector<Vec3> points, double tol = kDefaultTolerance)
      : labels_(std::move(labels)), points_(std::move(points)), tol_(tol) {
    if (labels_.size() != points_.size()) throw ArgumentError("PointSet: label and point counts differ");
    if (!(tol_ > 0.0) || !std::isfinite(tol_)) throw ArgumentError("PointSet: tolerance must be positive");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) throw ArgumentError("PointSet: duplicate label '" + l + "'");
    }
    for (const auto& p : points_) {
      if (!p.allFinite()) throw ArgumentError("PointSet: non-finite coordinate");
    }
    normalize();
  }

  /// Points labeled "0", "1", ...
  static PointSet unlabeled(std::vector<Vec3> points, double tol = kDefaultTolerance) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < points.size(); ++i) labels.push_back(std::to_string(i));
    return PointSet(std::move(labels), std::move(points), tol);
  }

  int size() const { return static_cast<int>(points_.size()); }
  double tol() const { return tol_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<Vec3>& points() const { return points_; }
  const Vec3& point(int i) const { return points_[i]; }
  const std::vector<Vec3>& normalized() const { return normalized_; }
  const Vec3& normalized(int i) const { return normalized_[i]; }

  /// Diameter in original units (0 for fewer than two points).
  double scale() const { return scale_; }
  Vec3 to_original(const Vec3& x) const { return origin_ + scale_ * x; }
  Vec3 to_normalized(const Vec3& x) const { return (x - origin_) / scale_; }

  int index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ArgumentError("PointSet: unknown label '" + label + "'");
    return static_cast<int>(it - labels_.begin());
  }

  PointSet subset(const std::vector<int>& indices) const {
    std::vector<std::string> l;
    std::vector<Vec3> p;
    for (int i : indices) {
      l.push_back(labels_.at(i));
      p.push_back(points_.at(i));
    }
    return PointSet(std::move(l), std::move(p), tol_);
  }

  PointSet with_tolerance(double tol) const { return PointSet(labels_, points_, tol); }

 private:
  void normalize() {
    origin_ = Vec3::Zero();
    if (!points_.empty()) {
      for (const auto& p : points_) origin_ += p;
      origin_ /= static_cast<double>(points_.size());
    }
    scale_ = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (std::size_t j = i + 1; j < points_.size(); ++j) scale_ = std::max(scale_, (points_[i] - points_[j]).norm());
    }
    if (points_.size() >= 2 && scale_ == 0.0) throw ArgumentError("PointSet: all points coincide");
    const double s = scale_ > 0.0 ? scale_ : 1.0;
    if (scale_ == 0.0) scale_ = 1.0;
    normalized_.clear();
    for (const auto& p : points_) normalized_.push_back((p - origin_) / s);
  }

  std::vector<std::string> labels_;
  std::vector<Vec3> points_;
  std::vector<Vec3> normalized_;
  Vec3 origin_ = Vec3::Zero();
  double scale_ = 1.0;
  double tol_ = kDefaultTolerance;
};

struct Diameter {
  double value = 0.0;                       // original units
  std::vector<std::pair<int, int>> pairs;  // index pairs, i < j, lexicographic
};

/// Maximum pairwise distance and every pair within the relative tolerance of it.
inline Diameter diameter(const PointSet& ps) {
  if (ps.size() < 2) throw ArgumentError("diameter: fewer than two points");
  Diameter out;
  out.value = ps.scale();
  for (int i = 0; i < ps.size(); ++i) {
    for (int j = i + 1; j < ps.size(); ++j) {
      double d = (ps.normalized(i) - ps.normalized(j)).norm();
      if (std::abs(d - 1.0) <= ps.tol()) out.pairs.emplace_back(i, j);
    }
  }
  return out;
}

struct DiameterGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;
  int edge_count() const { return static_cast<int>(edges.size()); }

  graph::Graph to_graph() const {
    graph::Graph g(static_cast<int>(vertices.size()));
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }
  std::vector<int> degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (auto [a, b] : edges) {
      ++deg[a];
      ++deg[b];
    }
    return deg;
  }
};

inline DiameterGraph diameter_graph(const PointSet& ps) {
  return DiameterGraph{ps.labels(), diameter(ps).pairs};
}

}  // namespace reuleaux::geometry
