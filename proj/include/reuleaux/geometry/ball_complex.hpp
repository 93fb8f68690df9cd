#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reuleaux/core.hpp"
#include "reuleaux/geometry/min_ball.hpp"
#include "reuleaux/geometry/point_set.hpp"
#include "reuleaux/graph/embedded_graph.hpp"
#include "reuleaux/graph/involution.hpp"

namespace reuleaux::geometry {

// ---------------------------------------------------------------------------
// Unit-sphere primitives. Everything below works in normalized coordinates
// (diameter 1, unit balls) with an absolute tolerance equal to the point
// set's relative tolerance.

/// Circle S(p) ∩ S(q) of two unit spheres.
struct Circle {
  Vec3 center;
  Vec3 axis;  // unit, from p towards q
  Vec3 e1, e2;  // orthonormal basis of the circle plane, e1 x e2 = axis
  double radius = 0.0;

  Vec3 at(double angle) const { return center + radius * (std::cos(angle) * e1 + std::sin(angle) * e2); }
  double angle_of(const Vec3& x) const {
    Vec3 r = x - center;
    return std::atan2(r.dot(e2), r.dot(e1));
  }
  /// Unit tangent in the direction of increasing angle.
  Vec3 tangent(double angle) const { return -std::sin(angle) * e1 + std::cos(angle) * e2; }
};

inline std::optional<Circle> unit_sphere_circle(const Vec3& p, const Vec3& q) {
  Vec3 d = q - p;
  double len = d.norm();
  if (len <= 0.0 || len >= 2.0) return std::nullopt;
  Circle c;
  c.center = 0.5 * (p + q);
  c.axis = d / len;
  c.radius = std::sqrt(1.0 - 0.25 * len * len);
  Vec3 helper = std::abs(c.axis.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  c.e1 = (helper - helper.dot(c.axis) * c.axis).normalized();
  c.e2 = c.axis.cross(c.e1);
  return c;
}

/// Intersection points of three unit spheres (zero, one or two).
inline std::vector<Vec3> unit_sphere_triple(const Vec3& p, const Vec3& q, const Vec3& r) {
  Vec3 u = q - p;
  double d = u.norm();
  if (d == 0.0) return {};
  Vec3 ex = u / d;
  Vec3 w = r - p;
  double i = ex.dot(w);
  Vec3 perp = w - i * ex;
  double j = perp.norm();
  if (j < 1e-12) return {};  // collinear centers: no isolated intersection
  Vec3 ey = perp / j;
  Vec3 ez = ex.cross(ey);
  double x = 0.5 * d;
  double y = (i * i + j * j) / (2.0 * j) - (i / j) * x;
  double z2 = 1.0 - x * x - y * y;
  if (z2 < -1e-12) return {};
  Vec3 base = p + x * ex + y * ey;
  if (z2 <= 1e-12) return {base};
  double z = std::sqrt(z2);
  return {base + z * ez, base - z * ez};
}

inline bool in_ball_set(std::span<const Vec3> centers, const Vec3& x, double eps) {
  for (const auto& c : centers) {
    if ((x - c).norm() > 1.0 + eps) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Essential points and tightness.

namespace detail {

// Candidate maximizers of the distance to `from` over B(centers): vertices,
// the farthest point of every pair circle and the far pole of every sphere.
inline double farthest_in_ball_set(std::span<const Vec3> centers, const Vec3& from, double eps) {
  if (centers.empty()) return std::numeric_limits<double>::infinity();
  double best = 0.0;
  auto consider = [&](const Vec3& x) {
    if (in_ball_set(centers, x, eps)) best = std::max(best, (x - from).norm());
  };
  const std::size_t n = centers.size();
  for (std::size_t a = 0; a < n; ++a) {
    Vec3 dir = centers[a] - from;
    double len = dir.norm();
    consider(centers[a] + (len > 0.0 ? Vec3(dir / len) : Vec3::UnitX()));
    for (std::size_t b = a + 1; b < n; ++b) {
      auto circle = unit_sphere_circle(centers[a], centers[b]);
      if (!circle) continue;
      Vec3 away = circle->center - from;
      away -= away.dot(circle->axis) * circle->axis;
      Vec3 unit = away.norm() > 1e-14 ? Vec3(away.normalized()) : circle->e1;
      consider(circle->center + circle->radius * unit);
      for (std::size_t c = b + 1; c < n; ++c) {
        for (const auto& x : unit_sphere_triple(centers[a], centers[b], centers[c])) consider(x);
      }
    }
  }
  return best;
}

}  // namespace detail

/// Labels of the points whose removal strictly enlarges the ball set.
inline std::vector<std::string> essential_points(const PointSet& ps) {
  if (ps.size() < 1) throw ArgumentError("essential_points: empty point set");
  if (normalized_circumradius(ps) >= 1.0) throw PreconditionError("essential_points: circumradius is not below 1");
  std::vector<std::string> out;
  const auto& pts = ps.normalized();
  for (int v = 0; v < ps.size(); ++v) {
    std::vector<Vec3> others;
    for (int u = 0; u < ps.size(); ++u) {
      if (u != v) others.push_back(pts[u]);
    }
    if (detail::farthest_in_ball_set(others, pts[v], ps.tol()) > 1.0 + ps.tol()) out.push_back(ps.label(v));
  }
  return out;
}

inline bool is_tight(const PointSet& ps) {
  if (ps.size() < 1) return false;
  if (normalized_circumradius(ps) >= 1.0) return false;
  return static_cast<int>(essential_points(ps).size()) == ps.size();
}

// ---------------------------------------------------------------------------
// Facial structure.

enum class VertexKind { Principal, Dangling };

class BallComplex;
inline BallComplex ball_complex(const PointSet& ps);

struct ComplexVertex {
  Vec3 position;                 // normalized coordinates
  std::vector<int> support;      // centers at unit distance, ascending
  VertexKind kind = VertexKind::Principal;
  int point = -1;                // index of the coinciding input point, or -1
};

struct ComplexEdge {
  std::array<int, 2> centers;    // {p, q}, p < q; the arc lies on S(p) ∩ S(q)
  int from = -1;                 // arc runs counterclockwise about (q - p)
  int to = -1;
  double from_angle = 0.0;
  double span = 0.0;             // radians, in (0, 2π]
  Vec3 midpoint;
};

struct Facet {
  int center = -1;
  std::vector<std::vector<int>> boundary_cycles;  // closed edge sequences
  std::vector<int> vertices;                      // sorted vertex ids on the boundary
};

/// Facial structure of B(V) for a tight set V.
class BallComplex {
 public:
  const PointSet& points() const { return points_; }
  const std::vector<ComplexVertex>& vertices() const { return vertices_; }
  const std::vector<ComplexEdge>& edges() const { return edges_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Full pair circles lying on the boundary with no vertex on them.
  int vertexless_circles() const { return vertexless_circles_; }
  /// Input points at unit distance from exactly one other point: they are
  /// not vertices and are only reported.
  const std::vector<int>& single_contact_points() const { return single_contact_; }

  Circle circle_of(const ComplexEdge& e) const {
    return *unit_sphere_circle(points_.normalized(e.centers[0]), points_.normalized(e.centers[1]));
  }

  /// Points along an edge arc, `step` radians apart (end points included).
  std::vector<Vec3> sample_edge(const ComplexEdge& e, double step) const {
    Circle c = circle_of(e);
    int pieces = std::max(1, static_cast<int>(std::ceil(e.span / step)));
    std::vector<Vec3> out;
    for (int k = 0; k <= pieces; ++k) out.push_back(c.at(e.from_angle + e.span * k / pieces));
    return out;
  }

  /// True when every vertex coincides with an input point and every input
  /// point is a vertex.
  bool vertices_equal_points() const {
    if (static_cast<int>(vertices_.size()) != points_.size()) return false;
    std::set<int> hit;
    for (const auto& v : vertices_) {
      if (v.point < 0) return false;
      hit.insert(v.point);
    }
    return static_cast<int>(hit.size()) == points_.size();
  }

  friend BallComplex ball_complex(const PointSet& ps);

 private:
  PointSet points_;
  std::vector<ComplexVertex> vertices_;
  std::vector<ComplexEdge> edges_;
  std::vector<Facet> facets_;
  int vertexless_circles_ = 0;
  std::vector<int> single_contact_;
};

inline BallComplex ball_complex(const PointSet& ps) {
  if (ps.size() < 2) throw PreconditionError("ball_complex: fewer than two points");
  if (!is_tight(ps)) throw PreconditionError("ball_complex: point set is not tight");
  const auto& P = ps.normalized();
  const int n = ps.size();
  const double eps = ps.tol();

  BallComplex bc;
  bc.points_ = ps;

  auto support_of = [&](const Vec3& x) {
    std::vector<int> s;
    for (int p = 0; p < n; ++p) {
      if (std::abs((x - P[p]).norm() - 1.0) <= eps) s.push_back(p);
    }
    return s;
  };

  // Candidate vertices: input points first (exact positions win merges),
  // then every triple-sphere intersection point inside B(V).
  struct Candidate {
    Vec3 x;
    int point;
  };
  std::vector<Candidate> candidates;
  for (int p = 0; p < n; ++p) candidates.push_back({P[p], p});
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (const auto& x : unit_sphere_triple(P[a], P[b], P[c])) {
          if (in_ball_set(P, x, eps)) candidates.push_back({x, -1});
        }
      }
    }
  }

  std::vector<ComplexVertex> merged;
  std::vector<std::set<int>> supports;
  for (const auto& cand : candidates) {
    auto s = support_of(cand.x);
    int hit = -1;
    for (std::size_t k = 0; k < merged.size(); ++k) {
      if ((merged[k].position - cand.x).norm() <= eps) {
        hit = static_cast<int>(k);
        break;
      }
    }
    if (hit < 0) {
      merged.push_back({cand.x, {}, VertexKind::Principal, cand.point});
      supports.emplace_back(s.begin(), s.end());
    } else {
      supports[hit].insert(s.begin(), s.end());
      if (merged[hit].point < 0 && cand.point >= 0) {
        merged[hit].position = cand.x;
        merged[hit].point = cand.point;
      }
    }
  }
  for (std::size_t k = 0; k < merged.size(); ++k) {
    auto& v = merged[k];
    v.support.assign(supports[k].begin(), supports[k].end());
    if (v.support.size() >= 3) {
      v.kind = VertexKind::Principal;
      bc.vertices_.push_back(v);
    } else if (v.point >= 0 && v.support.size() == 2) {
      v.kind = VertexKind::Dangling;
      bc.vertices_.push_back(v);
    } else if (v.point >= 0 && v.support.size() == 1) {
      bc.single_contact_.push_back(v.point);
    }
  }

  // Edges: maximal boundary arcs between consecutive vertices on each circle.
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      auto circle = unit_sphere_circle(P[p], P[q]);
      if (!circle) continue;
      std::vector<std::pair<double, int>> on_circle;
      for (int k = 0; k < static_cast<int>(bc.vertices_.size()); ++k) {
        const auto& s = bc.vertices_[k].support;
        if (std::binary_search(s.begin(), s.end(), p) && std::binary_search(s.begin(), s.end(), q)) {
          on_circle.emplace_back(circle->angle_of(bc.vertices_[k].position), k);
        }
      }
      if (on_circle.empty()) {
        if (in_ball_set(P, circle->at(0.0), eps)) ++bc.vertexless_circles_;
        continue;
      }
      std::sort(on_circle.begin(), on_circle.end());
      const std::size_t m = on_circle.size();
      for (std::size_t i = 0; i < m; ++i) {
        double a0 = on_circle[i].first;
        double a1 = on_circle[(i + 1) % m].first;
        double span = a1 - a0;
        if (m == 1 || span <= 0.0) span += 2.0 * std::numbers::pi;
        Vec3 mid = circle->at(a0 + 0.5 * span);
        if (!in_ball_set(P, mid, eps)) continue;
        bc.edges_.push_back({{p, q}, on_circle[i].second, on_circle[(i + 1) % m].second, a0, span, mid});
      }
    }
  }

  // Facets: boundary edges of each sphere, chained into closed sequences.
  for (int p = 0; p < n; ++p) {
    Facet f;
    f.center = p;
    std::vector<int> own;
    for (int e = 0; e < static_cast<int>(bc.edges_.size()); ++e) {
      const auto& c = bc.edges_[e].centers;
      if (c[0] == p || c[1] == p) own.push_back(e);
    }
    std::set<int> verts;
    for (int e : own) {
      verts.insert(bc.edges_[e].from);
      verts.insert(bc.edges_[e].to);
    }
    f.vertices.assign(verts.begin(), verts.end());
    std::vector<char> used(bc.edges_.size(), 0);
    for (int start : own) {
      if (used[start]) continue;
      std::vector<int> cycle;
      int e = start;
      int at = bc.edges_[start].to;
      used[e] = 1;
      cycle.push_back(e);
      while (at != bc.edges_[start].from) {
        int next = -1;
        for (int g : own) {
          if (!used[g] && (bc.edges_[g].from == at || bc.edges_[g].to == at)) {
            next = g;
            break;
          }
        }
        if (next < 0) break;
        used[next] = 1;
        cycle.push_back(next);
        at = bc.edges_[next].from == at ? bc.edges_[next].to : bc.edges_[next].from;
      }
      f.boundary_cycles.push_back(std::move(cycle));
    }
    bc.facets_.push_back(std::move(f));
  }
  return bc;
}

/// Graph of vertices and edges of the complex. The rotation at a vertex is
/// the counterclockwise order (seen from outside the body) of the arc
/// tangents leaving it.
inline graph::EmbeddedGraph one_skeleton(const BallComplex& bc) {
  const auto& P = bc.points().normalized();
  const int nv = static_cast<int>(bc.vertices().size());
  std::vector<std::pair<int, int>> edges;
  struct Leaving {
    int dart;
    Vec3 tangent;
  };
  std::vector<std::vector<Leaving>> leaving(nv);
  for (int e = 0; e < static_cast<int>(bc.edges().size()); ++e) {
    const auto& edge = bc.edges()[e];
    Circle c = bc.circle_of(edge);
    edges.emplace_back(edge.from, edge.to);
    leaving[edge.from].push_back({2 * e, c.tangent(edge.from_angle)});
    leaving[edge.to].push_back({2 * e + 1, -c.tangent(edge.from_angle + edge.span)});
  }
  std::vector<std::vector<int>> rotation(nv);
  for (int v = 0; v < nv; ++v) {
    const auto& vert = bc.vertices()[v];
    Vec3 normal = Vec3::Zero();
    for (int p : vert.support) normal += (vert.position - P[p]).normalized();
    normal.normalize();
    Vec3 helper = std::abs(normal.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    Vec3 b1 = (helper - helper.dot(normal) * normal).normalized();
    Vec3 b2 = normal.cross(b1);
    auto& out = leaving[v];
    std::sort(out.begin(), out.end(), [&](const Leaving& x, const Leaving& y) {
      return std::atan2(x.tangent.dot(b2), x.tangent.dot(b1)) < std::atan2(y.tangent.dot(b2), y.tangent.dot(b1));
    });
    for (const auto& l : out) rotation[v].push_back(l.dart);
  }
  graph::EmbeddedGraph g(nv, std::move(edges), std::move(rotation));
  std::vector<std::string> labels;
  for (int v = 0; v < nv; ++v) {
    int p = bc.vertices()[v].point;
    labels.push_back(p >= 0 ? bc.points().label(p) : "v" + std::to_string(v));
  }
  g.set_labels(std::move(labels));
  return g;
}

// ---------------------------------------------------------------------------
// Canonical involution of an extremal configuration.

struct CanonicalInvolution {
  /// map[v] = the facet dual to point v (facets are indexed by their center,
  /// so this is the center index itself, kept for clarity of the contract).
  std::vector<int> map;
  /// Dual edge pairing between complex edges.
  std::vector<int> edge_map;
  /// The same involution expressed on the one-skeleton (skeleton vertex ids).
  graph::Involution on_skeleton;
};

inline CanonicalInvolution canonical_involution(const BallComplex& bc) {
  const auto& ps = bc.points();
  const int n = ps.size();
  if (n < 4 || diameter(ps).pairs.size() != static_cast<std::size_t>(2 * n - 2)) {
    throw PreconditionError("canonical_involution: point set is not extremal");
  }
  if (!bc.vertices_equal_points()) throw PreconditionError("canonical_involution: vertices differ from the point set");

  CanonicalInvolution ci;
  ci.map.resize(n);
  ci.on_skeleton.tau.resize(n);
  graph::EmbeddedGraph skeleton = one_skeleton(bc);
  for (int v = 0; v < n; ++v) {
    int p = bc.vertices()[v].point;
    ci.map[p] = p;
    const Facet& f = bc.facets()[p];
    if (f.boundary_cycles.size() != 1) throw ConsistencyError("canonical_involution: facet boundary is not a single cycle");
    int face = skeleton.find_face(f.vertices);
    if (face < 0) throw ConsistencyError("canonical_involution: facet boundary is not a face of the skeleton");
    ci.on_skeleton.tau[v] = skeleton.face_vertices(face);
  }
  auto defects = graph::involution_defects(skeleton, ci.on_skeleton);
  if (!defects.empty()) throw ConsistencyError("canonical_involution: " + defects.front());

  const auto& edges = bc.edges();
  ci.edge_map.assign(edges.size(), -1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::array<int, 2> ends{bc.vertices()[edges[e].from].point, bc.vertices()[edges[e].to].point};
    std::sort(ends.begin(), ends.end());
    for (std::size_t g = 0; g < edges.size(); ++g) {
      std::array<int, 2> gends{bc.vertices()[edges[g].from].point, bc.vertices()[edges[g].to].point};
      std::sort(gends.begin(), gends.end());
      if (edges[g].centers == ends && gends == edges[e].centers) {
        ci.edge_map[e] = static_cast<int>(g);
        break;
      }
    }
    if (ci.edge_map[e] < 0) throw ConsistencyError("canonical_involution: edge without a dual edge");
  }
  return ci;
}

}  // namespace reuleaux::geometry
