#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "reuleaux/core.hpp"
#include "reuleaux/geometry/ball_complex.hpp"
#include "reuleaux/geometry/classify.hpp"
#include "reuleaux/geometry/min_ball.hpp"
#include "reuleaux/geometry/point_set.hpp"
#include "reuleaux/graph/coloring.hpp"

namespace reuleaux::borsuk {

using geometry::PointSet;

struct BorsukReport {
  int a = 0;                                           // Borsuk number = chromatic number of the diameter graph
  std::vector<std::vector<std::string>> partition;     // color classes
  std::vector<double> class_diameters;                 // normalized; each < 1
  std::optional<std::vector<std::string>> critical_subset;
};

/// Vertex-4-critical subset of the diameter graph, found by deleting points
/// in `order` while the chromatic number stays 4. Empty when the Borsuk
/// number is below 4. The subset must span a Reuleaux polyhedron; anything
/// else is reported as a ConsistencyError.
inline std::optional<std::vector<std::string>> strongly_critical_subset(const PointSet& ps,
                                                                        std::vector<int> order = {}) {
  const int n = ps.size();
  if (n < 2) return std::nullopt;
  graph::Graph g = geometry::diameter_graph(ps).to_graph();
  if (graph::chromatic_number(g) < 4) return std::nullopt;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<int> check = order;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(check.size()) != n || check[i] != i) throw ArgumentError("strongly_critical_subset: order is not a permutation");
  }
  std::vector<char> alive(n, 1);
  auto induced = [&]() {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
      if (alive[i]) keep.push_back(i);
    }
    return keep;
  };
  for (int v : order) {
    alive[v] = 0;
    if (graph::chromatic_number(g.induced(induced())) < 4) alive[v] = 1;
  }
  std::vector<int> keep = induced();
  PointSet sub = ps.subset(keep);
  if (sub.size() < 4 || !geometry::classify(sub).reuleaux) {
    throw ConsistencyError("strongly_critical_subset: critical subset does not span a Reuleaux polyhedron");
  }
  std::vector<std::string> labels;
  for (int i : keep) labels.push_back(ps.label(i));
  return labels;
}

inline BorsukReport borsuk_number(const PointSet& ps) {
  if (ps.size() < 2) throw ArgumentError("borsuk_number: fewer than two points");
  graph::Graph g = geometry::diameter_graph(ps).to_graph();
  auto opt = graph::optimal_coloring(g);
  BorsukReport rep;
  rep.a = opt.chromatic_number;
  rep.partition.resize(rep.a);
  std::vector<std::vector<int>> members(rep.a);
  for (int v = 0; v < ps.size(); ++v) {
    members[opt.colors[v]].push_back(v);
    rep.partition[opt.colors[v]].push_back(ps.label(v));
  }
  for (const auto& cls : members) {
    double d = 0.0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) d = std::max(d, (ps.normalized(cls[i]) - ps.normalized(cls[j])).norm());
    }
    if (!(d < 1.0 - ps.tol())) throw ConsistencyError("borsuk_number: color class reaches the diameter");
    rep.class_diameters.push_back(d);
  }
  if (rep.a == 4) rep.critical_subset = strongly_critical_subset(ps);
  return rep;
}

/// Proper 4-coloring of the diameter graph of a Reuleaux vertex set in which
/// `v` is the only vertex of color 3.
inline graph::ColoringCertificate critical_coloring(const PointSet& ps, const std::string& v) {
  int idx = ps.index_of(v);
  if (ps.size() < 4 || !geometry::classify(ps).reuleaux) {
    throw PreconditionError("critical_coloring: point set is not a Reuleaux vertex set");
  }
  graph::Graph g = geometry::diameter_graph(ps).to_graph();
  auto cert = graph::isolating_coloring(g, idx);
  if (!cert || !graph::check_certificate(g, *cert)) {
    throw ConsistencyError("critical_coloring: diameter graph is not vertex-4-critical");
  }
  return *cert;
}

// ---------------------------------------------------------------------------
// Wedges and the critical partition. Everything below works in normalized
// coordinates of the body (diameter 1).

struct Halfspace {
  Vec3 normal = Vec3::Zero();
  double offset = 0.0;
  double eval(const Vec3& x) const { return normal.dot(x) - offset; }
};

/// Wedge along the boundary arc with end vertices {c, d} whose supporting
/// spheres are centered at {a, b}: the body cut by the two half-spaces of
/// the planes (a, c, d) and (b, c, d) that contain the arc.
struct Wedge {
  int edge = -1;                  // complex edge id
  std::array<int, 2> ends{};      // point indices of the arc end vertices c, d
  std::array<int, 2> centers{};   // point indices a, b
  Halfspace h;                    // plane through a, c, d
  Halfspace l;                    // plane through b, c, d
  std::vector<Vec3> body;         // normalized centers of the body
};

inline bool in_body(const std::vector<Vec3>& centers, const Vec3& x, double eps) {
  for (const auto& c : centers) {
    if ((x - c).norm() > 1.0 + eps) return false;
  }
  return true;
}

inline bool wedge_membership(const Wedge& w, const Vec3& x, double eps = 1e-9) {
  return w.h.eval(x) >= -eps && w.l.eval(x) >= -eps && in_body(w.body, x, eps);
}

namespace detail {

inline Halfspace plane_through(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& positive) {
  Vec3 nrm = (q - p).cross(r - p);
  if (nrm.norm() < 1e-12) throw ConsistencyError("wedge: degenerate plane");
  nrm.normalize();
  Halfspace hs{nrm, nrm.dot(p)};
  if (hs.eval(positive) < 0.0) hs = Halfspace{-nrm, -nrm.dot(p)};
  return hs;
}

// Unit directions covering the sphere evenly (Fibonacci lattice).
inline std::vector<Vec3> sphere_directions(int count) {
  std::vector<Vec3> out;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / count;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = golden * i;
    out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

}  // namespace detail

/// Reuleaux polyhedron R(V) with its wedges and boundary samples.
class ReuleauxBody {
 public:
  explicit ReuleauxBody(const PointSet& ps, double sample_step_deg = 0.5) : ps_(ps), bc_(checked_complex(ps)) {
    centers_ = ps_.normalized();
    const double step = sample_step_deg * std::numbers::pi / 180.0;
    for (int e = 0; e < static_cast<int>(bc_.edges().size()); ++e) {
      const auto& edge = bc_.edges()[e];
      Wedge w;
      w.edge = e;
      w.ends = {bc_.vertices()[edge.from].point, bc_.vertices()[edge.to].point};
      w.centers = edge.centers;
      const Vec3& a = centers_[w.centers[0]];
      const Vec3& b = centers_[w.centers[1]];
      const Vec3& c = centers_[w.ends[0]];
      const Vec3& d = centers_[w.ends[1]];
      w.h = detail::plane_through(a, c, d, edge.midpoint);
      w.l = detail::plane_through(b, c, d, edge.midpoint);
      w.body = centers_;
      wedges_.push_back(std::move(w));
    }
    sample_wedge_boundaries(step);
    sample_boundary();
  }

  const PointSet& points() const { return ps_; }
  const geometry::BallComplex& complex() const { return bc_; }
  const std::vector<Wedge>& wedges() const { return wedges_; }
  const std::vector<Vec3>& centers() const { return centers_; }

  struct Sample {
    Vec3 x;
    int wedge;
  };
  /// Points on the body boundary that lie on the boundary of some wedge.
  const std::vector<Sample>& wedge_boundary() const { return wedge_samples_; }
  /// Roughly uniform boundary samples (facets and arcs).
  const std::vector<Vec3>& boundary_samples() const { return boundary_samples_; }

  bool contains(const Vec3& x, double eps = 1e-9) const { return in_body(centers_, x, eps); }
  bool on_boundary(const Vec3& x, double eps = 1e-9) const {
    double far = 0.0;
    for (const auto& c : centers_) far = std::max(far, (x - c).norm());
    return far >= 1.0 - eps;
  }

  /// Nearest boundary point to an interior point: the radial projection onto
  /// the sphere of the farthest center.
  Vec3 nearest_boundary_point(const Vec3& x) const {
    int far = 0;
    for (int i = 1; i < static_cast<int>(centers_.size()); ++i) {
      if ((x - centers_[i]).norm() > (x - centers_[far]).norm()) far = i;
    }
    Vec3 d = x - centers_[far];
    if (d.norm() < 1e-15) throw ArgumentError("nearest_boundary_point: query at a center");
    return centers_[far] + d.normalized();
  }

  /// Parameter t >= 0 where the ray origin + t dir leaves the body.
  double exit_parameter(const Vec3& origin, const Vec3& dir) const {
    double t = std::numeric_limits<double>::infinity();
    for (const auto& c : centers_) {
      Vec3 m = origin - c;
      double b = m.dot(dir);
      double disc = b * b - (m.squaredNorm() - 1.0);
      t = std::min(t, -b + std::sqrt(std::max(0.0, disc)));
    }
    return t;
  }

 private:
  static geometry::BallComplex checked_complex(const PointSet& ps) {
    if (ps.size() < 4 || !geometry::classify(ps).reuleaux) {
      throw PreconditionError("ReuleauxBody: point set does not span a Reuleaux polyhedron");
    }
    return geometry::ball_complex(ps);
  }

  void sample_wedge_boundaries(double step) {
    const int count = static_cast<int>(std::ceil(2.0 * std::numbers::pi / step));
    for (int wi = 0; wi < static_cast<int>(wedges_.size()); ++wi) {
      const Wedge& w = wedges_[wi];
      for (const Vec3& x : bc_.sample_edge(bc_.edges()[w.edge], step)) wedge_samples_.push_back({x, wi});
      for (const Halfspace* hs : {&w.h, &w.l}) {
        for (const auto& c : centers_) {
          // circle where the plane meets the sphere around c
          double dist = hs->eval(c);
          if (std::abs(dist) >= 1.0) continue;
          Vec3 center = c - dist * hs->normal;
          double r = std::sqrt(1.0 - dist * dist);
          Vec3 helper = std::abs(hs->normal.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
          Vec3 e1 = (helper - helper.dot(hs->normal) * hs->normal).normalized();
          Vec3 e2 = hs->normal.cross(e1);
          for (int k = 0; k < count; ++k) {
            double t = 2.0 * std::numbers::pi * k / count;
            Vec3 x = center + r * (std::cos(t) * e1 + std::sin(t) * e2);
            if (wedge_membership(w, x, 1e-9)) wedge_samples_.push_back({x, wi});
          }
        }
      }
    }
  }

  void sample_boundary() {
    auto dirs = detail::sphere_directions(4000);
    for (const auto& c : centers_) {
      for (const auto& u : dirs) {
        Vec3 x = c + u;
        if (contains(x, 1e-12)) boundary_samples_.push_back(x);
      }
    }
    for (const auto& e : bc_.edges()) {
      for (const Vec3& x : bc_.sample_edge(e, std::numbers::pi / 360.0)) boundary_samples_.push_back(x);
    }
  }

  PointSet ps_;
  geometry::BallComplex bc_;
  std::vector<Vec3> centers_;
  std::vector<Wedge> wedges_;
  std::vector<Sample> wedge_samples_;
  std::vector<Vec3> boundary_samples_;
};

enum class Rule { BallP1, Vertex, Wedge, Facet, Closure, Interior };

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::BallP1: return "ball-P1";
    case Rule::Vertex: return "vertex";
    case Rule::Wedge: return "wedge";
    case Rule::Facet: return "facet";
    case Rule::Closure: return "closure";
    case Rule::Interior: return "interior";
  }
  return "?";
}

struct PartitionAssignment {
  std::string v;
  double eps = 0.0;                 // requested, original units
  double eps1 = 0.0;                // ball radius actually used, original units
  std::vector<int> part;            // 1..4 per query
  std::vector<Rule> rule;
  std::vector<char> fallback;       // interior query at the ray apex, sent to its nearest boundary point
  std::vector<char> tie;            // wedge query equidistant to both ends
};

/// Point classifier realizing the critical partition P_{eps,v} of a
/// Reuleaux polyhedron: v alone in part 1, every other vertex in part
/// 2 + its color in a 3-coloring of Diam - v.
class CriticalPartition {
 public:
  CriticalPartition(const ReuleauxBody& body, const std::string& v, double eps)
      : body_(body), v_(body.points().index_of(v)), label_(v) {
    if (!(eps > 0.0)) throw ArgumentError("critical_partition: eps must be positive");
    const PointSet& ps = body.points();
    eps_ = eps;
    double r = std::numeric_limits<double>::infinity();
    for (int u = 0; u < ps.size(); ++u) {
      if (u != v_) r = std::min(r, (ps.normalized(u) - ps.normalized(v_)).norm());
    }
    eps1_ = std::min(r / 2.0, eps / ps.scale() / 2.0);
    auto cert = critical_coloring(ps, v);
    part_.resize(ps.size());
    for (int u = 0; u < ps.size(); ++u) part_[u] = u == v_ ? 1 : 2 + cert.assignment[u];
    labels_ = ps.labels();

    std::vector<Vec3> rim;
    for (const auto& x : body.boundary_samples()) {
      if ((x - vertex(v_)).norm() >= eps1_) rim.push_back(x);
    }
    center_ = geometry::min_enclosing_ball(rim).center;
  }

  double eps1() const { return eps1_ * body_.points().scale(); }
  const Vec3& circumcenter_normalized() const { return center_; }
  int vertex_part(int u) const { return part_[u]; }

  struct Verdict {
    int part = 0;
    Rule rule = Rule::Interior;
    bool fallback = false;
    bool tie = false;
  };

  /// Classifies a point given in original coordinates.
  Verdict classify(const Vec3& query) const {
    Vec3 x = body_.points().to_normalized(query);
    if (!body_.contains(x, kTol)) throw ArgumentError("critical_partition: query outside the body");
    Verdict out;
    if ((x - vertex(v_)).norm() < eps1_) return {1, Rule::BallP1, false, false};
    for (int u = 0; u < static_cast<int>(part_.size()); ++u) {
      if ((x - vertex(u)).norm() <= kTol) return {part_[u], Rule::Vertex, false, false};
    }
    if (auto w = on_wedge(x, out.tie)) {
      out.part = *w;
      out.rule = Rule::Wedge;
      return out;
    }
    if (body_.on_boundary(x, kTol)) return {nearest_wedge_part(x), Rule::Facet, false, false};
    if (std::abs((x - vertex(v_)).norm() - eps1_) <= kTol) {
      return {closure_part(x), Rule::Closure, false, false};
    }
    Vec3 dir = x - center_;
    if (dir.norm() <= kTol) {
      return {closure_part(x), Rule::Interior, true, false};
    }
    dir.normalize();
    return {ray_part(x, dir), Rule::Interior, false, false};
  }

  PartitionAssignment assign(const std::vector<Vec3>& queries) const {
    PartitionAssignment out;
    out.v = label_;
    out.eps = eps_;
    out.eps1 = eps1();
    for (const auto& q : queries) {
      Verdict vd = classify(q);
      out.part.push_back(vd.part);
      out.rule.push_back(vd.rule);
      out.fallback.push_back(vd.fallback);
      out.tie.push_back(vd.tie);
    }
    return out;
  }

 private:
  static constexpr double kTol = 1e-9;

  const Vec3& vertex(int u) const { return body_.centers()[u]; }

  // Part a point in wedge w receives: the nearer end vertex, or the other end
  // when one end is v. Ties go to the smaller label.
  int wedge_part(const Wedge& w, const Vec3& x, bool& tie) const {
    int c = w.ends[0];
    int d = w.ends[1];
    if (c == v_) return part_[d];
    if (d == v_) return part_[c];
    double dc = (x - vertex(c)).norm();
    double dd = (x - vertex(d)).norm();
    if (std::abs(dc - dd) <= kTol) {
      tie = true;
      return part_[labels_[c] < labels_[d] ? c : d];
    }
    return part_[dc < dd ? c : d];
  }

  std::optional<int> on_wedge(const Vec3& x, bool& tie) const {
    // Among wedges containing x pick the one whose arc is nearest, so the
    // choice is deterministic where wedges meet at a vertex.
    const Wedge* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& w : body_.wedges()) {
      if (!wedge_membership(w, x, kTol)) continue;
      double d = (x - body_.complex().edges()[w.edge].midpoint).norm();
      if (d < best_d) {
        best_d = d;
        best = &w;
      }
    }
    if (!best) return std::nullopt;
    return wedge_part(*best, x, tie);
  }

  int nearest_wedge_part(const Vec3& x) const {
    const ReuleauxBody::Sample* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& s : body_.wedge_boundary()) {
      if ((s.x - vertex(v_)).norm() < eps1_) continue;
      double d = (s.x - x).norm();
      if (d < best_d) {
        best_d = d;
        best = &s;
      }
    }
    if (!best) throw ConsistencyError("critical_partition: no wedge sample outside P1");
    bool tie = false;
    return wedge_part(body_.wedges()[best->wedge], best->x, tie);
  }

  // Part of a point on the boundary of R(V) outside P1.
  int surface_part(const Vec3& y) const {
    for (int u = 0; u < static_cast<int>(part_.size()); ++u) {
      if ((y - vertex(u)).norm() <= kTol) return part_[u];
    }
    bool tie = false;
    if (auto w = on_wedge(y, tie)) return *w;
    return nearest_wedge_part(y);
  }

  // Part of an interior point through its nearest boundary point outside P1.
  int closure_part(const Vec3& x) const {
    Vec3 y = body_.nearest_boundary_point(x);
    if ((y - vertex(v_)).norm() < eps1_) {
      double best = std::numeric_limits<double>::infinity();
      auto consider = [&](const Vec3& s) {
        if ((s - vertex(v_)).norm() < eps1_) return;
        double d = (s - x).norm();
        if (d < best) {
          best = d;
          y = s;
        }
      };
      for (const auto& s : body_.boundary_samples()) consider(s);
      for (const auto& s : body_.wedge_boundary()) consider(s.x);
    }
    return surface_part(y);
  }

  // First boundary event of R(V) \ P1 on the ray from the circumcenter
  // through x, beyond x.
  int ray_part(const Vec3& x, const Vec3& dir) const {
    double t_exit = body_.exit_parameter(x, dir);
    Vec3 m = x - vertex(v_);
    double b = m.dot(dir);
    double disc = b * b - (m.squaredNorm() - eps1_ * eps1_);
    if (disc > 0.0) {
      double t_in = -b - std::sqrt(disc);
      if (t_in > 0.0 && t_in < t_exit) return closure_part(x + t_in * dir);
    }
    return surface_part(x + t_exit * dir);
  }

  const ReuleauxBody& body_;
  int v_;
  std::string label_;
  double eps_ = 0.0;
  double eps1_ = 0.0;  // normalized
  std::vector<int> part_;
  std::vector<std::string> labels_;
  Vec3 center_ = Vec3::Zero();
};

inline PartitionAssignment critical_partition(const ReuleauxBody& body, const std::string& v, double eps,
                                              const std::vector<Vec3>& queries) {
  return CriticalPartition(body, v, eps).assign(queries);
}

/// Random points of the body in original coordinates: a `boundary_fraction`
/// share on the boundary, the rest uniform in the interior (rejection
/// sampling from the circumscribed ball).
inline std::vector<Vec3> sample_body(const ReuleauxBody& body, int count, double boundary_fraction,
                                     std::mt19937_64& rng) {
  std::vector<Vec3> out;
  const auto& centers = body.centers();
  auto ball = geometry::min_enclosing_ball(centers);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(centers.size()) - 1);
  const int on_boundary = static_cast<int>(std::round(count * boundary_fraction));
  while (static_cast<int>(out.size()) < on_boundary) {
    Vec3 d(u(rng), u(rng), u(rng));
    if (d.squaredNorm() > 1.0 || d.squaredNorm() < 1e-6) continue;
    Vec3 x = centers[pick(rng)] + d.normalized();
    if (body.contains(x, 1e-12)) out.push_back(body.points().to_original(x));
  }
  const double reach = ball.radius + 0.5;
  while (static_cast<int>(out.size()) < count) {
    Vec3 x = ball.center + reach * Vec3(u(rng), u(rng), u(rng));
    if (body.contains(x, -1e-9)) out.push_back(body.points().to_original(x));
  }
  return out;
}

}  // namespace reuleaux::borsuk
