#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "reuleaux/core.hpp"
#include "reuleaux/geometry/point_set.hpp"

namespace reuleaux::geometry {

struct Circumball {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
};

namespace detail {

// Smallest ball whose boundary passes through all of `support` (the
// circumscribed ball inside their affine hull). Empty for affinely
// dependent supports.
inline std::optional<Circumball> ball_through(std::span<const Vec3> support) {
  const std::size_t k = support.size();
  if (k == 0) return Circumball{Vec3::Zero(), -1.0};
  const Vec3& p0 = support[0];
  if (k == 1) return Circumball{p0, 0.0};
  // center = p0 + sum_i lambda_i (p_i - p0) with |c - p_i| = |c - p0|
  const int m = static_cast<int>(k) - 1;
  Eigen::MatrixXd A(m, m);
  Eigen::VectorXd b(m);
  std::vector<Vec3> u(m);
  for (int i = 0; i < m; ++i) u[i] = support[i + 1] - p0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) A(i, j) = 2.0 * u[i].dot(u[j]);
    b(i) = u[i].squaredNorm();
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  double scale = A.cwiseAbs().maxCoeff();
  lu.setThreshold(1e-12);
  if (scale == 0.0 || lu.rank() < m) return std::nullopt;
  Eigen::VectorXd lambda = lu.solve(b);
  Vec3 c = p0;
  for (int i = 0; i < m; ++i) c += lambda(i) * u[i];
  double r = 0.0;
  for (const auto& p : support) r = std::max(r, (p - c).norm());
  return Circumball{c, r};
}

inline bool contains(const Circumball& ball, const Vec3& p, double slack) {
  return ball.radius >= 0.0 && (p - ball.center).norm() <= ball.radius + slack;
}

// Gärtner's move-to-front variant of Welzl's algorithm; recursion depth is
// bounded by the support size.
class MoveToFront {
 public:
  explicit MoveToFront(std::span<const Vec3> points) : pts_(points.begin(), points.end()) {
    double extent = 0.0;
    for (const auto& p : pts_) extent = std::max(extent, p.cwiseAbs().maxCoeff());
    slack_ = 1e-12 * std::max(1.0, extent);
  }

  Circumball run() {
    std::vector<Vec3> support;
    mtf(pts_.size(), support);
    return ball_;
  }

 private:
  void mtf(std::size_t end, std::vector<Vec3>& support) {
    ball_ = make_ball(support);
    if (support.size() == 4) return;
    for (std::size_t i = 0; i < end; ++i) {
      if (contains(ball_, pts_[i], slack_)) continue;
      Vec3 p = pts_[i];
      support.push_back(p);
      mtf(i, support);
      support.pop_back();
      std::rotate(pts_.begin(), pts_.begin() + static_cast<std::ptrdiff_t>(i), pts_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
  }

  Circumball make_ball(const std::vector<Vec3>& support) const {
    if (auto b = ball_through(support)) return *b;
    // Affinely dependent support (ties): smallest sub-support ball holding all.
    std::optional<Circumball> best;
    const std::size_t k = support.size();
    for (std::size_t skip = 0; skip < k; ++skip) {
      std::vector<Vec3> sub;
      for (std::size_t i = 0; i < k; ++i) {
        if (i != skip) sub.push_back(support[i]);
      }
      auto b = ball_through(sub);
      if (!b || !contains(*b, support[skip], slack_)) continue;
      if (!best || b->radius < best->radius) best = b;
    }
    if (!best) throw ConsistencyError("circumball: degenerate support");
    return *best;
  }

  std::vector<Vec3> pts_;
  Circumball ball_;
  double slack_ = 0.0;
};

}  // namespace detail

/// Minimal enclosing ball of a finite point set.
inline Circumball min_enclosing_ball(std::span<const Vec3> points) {
  if (points.empty()) throw ArgumentError("circumball: empty point set");
  return detail::MoveToFront(points).run();
}

/// Circumball of the point set, in original units.
inline Circumball circumball(const PointSet& ps) {
  if (ps.size() < 1) throw ArgumentError("circumball: empty point set");
  Circumball b = min_enclosing_ball(ps.normalized());
  return Circumball{ps.to_original(b.center), b.radius * ps.scale()};
}

/// Circumradius of the diameter-normalized set.
inline double normalized_circumradius(const PointSet& ps) { return min_enclosing_ball(ps.normalized()).radius; }

}  // namespace reuleaux::geometry
