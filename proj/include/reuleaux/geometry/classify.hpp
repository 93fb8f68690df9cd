#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reuleaux/geometry/ball_complex.hpp"
#include "reuleaux/graph/connectivity.hpp"

namespace reuleaux::geometry {

struct ClassificationReport {
  int n = 0;
  int diameter_count = 0;
  bool extremal = false;           // e(V) = 2n - 2
  bool critical = false;           // extremal and every point meets >= 3 diameters
  bool tight = false;
  bool vertices_equal_points = false;
  bool skeleton_simple = false;
  bool skeleton_planar = false;
  int skeleton_connectivity = -1;  // capped at 3; -1 when no complex was built
  std::vector<std::string> skeleton_cut;
  bool standard = false;           // simple, planar, 3-connected skeleton
  bool reuleaux = false;           // standard and V = vert B(V)
  bool strongly_critical = false;
  std::vector<std::string> single_contact_points;
};

/// Vázsonyi/ball-polyhedron classification. `strongly_critical` is decided
/// through the Reuleaux property, which is equivalent for extremal sets.
inline ClassificationReport classify(const PointSet& ps) {
  if (ps.size() < 4) throw ArgumentError("classify: fewer than four points");
  ClassificationReport r;
  r.n = ps.size();
  DiameterGraph dg = diameter_graph(ps);
  r.diameter_count = dg.edge_count();
  r.extremal = r.diameter_count == 2 * r.n - 2;
  auto deg = dg.degrees();
  r.critical = r.extremal && std::all_of(deg.begin(), deg.end(), [](int d) { return d >= 3; });
  r.tight = is_tight(ps);
  if (!r.tight) return r;

  BallComplex bc = ball_complex(ps);
  for (int p : bc.single_contact_points()) r.single_contact_points.push_back(ps.label(p));
  r.vertices_equal_points = bc.vertices_equal_points();
  graph::EmbeddedGraph skeleton = one_skeleton(bc);
  r.skeleton_simple = skeleton.is_simple();
  r.skeleton_planar = skeleton.is_planar_embedding() && bc.vertexless_circles() == 0;
  auto kappa = graph::vertex_connectivity(skeleton.simple_graph());
  r.skeleton_connectivity = kappa.kappa;
  for (int v : kappa.cut) r.skeleton_cut.push_back(skeleton.label(v));
  r.standard = r.skeleton_simple && r.skeleton_planar && skeleton.size() >= 4 && kappa.kappa >= 3;
  r.reuleaux = r.standard && r.vertices_equal_points;
  r.strongly_critical = r.extremal && r.reuleaux;
  return r;
}

}  // namespace reuleaux::geometry
