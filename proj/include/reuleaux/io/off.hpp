#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "reuleaux/geometry/ball_complex.hpp"

namespace reuleaux::io {

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
};

namespace detail {

// Closed polyline along one boundary cycle of a facet.
inline std::vector<Vec3> cycle_polyline(const geometry::BallComplex& bc, const std::vector<int>& cycle, double step) {
  std::vector<Vec3> out;
  const auto& edges = bc.edges();
  int at = edges[cycle.front()].from;
  if (cycle.size() > 1) {
    const auto& first = edges[cycle.front()];
    const auto& second = edges[cycle[1]];
    if (first.from == second.from || first.from == second.to) at = first.to;
  }
  for (int e : cycle) {
    auto pts = bc.sample_edge(edges[e], step);
    if (edges[e].from != at) std::reverse(pts.begin(), pts.end());
    at = edges[e].from == at ? edges[e].to : edges[e].from;
    pts.pop_back();
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

}  // namespace detail

/// Triangulated boundary of B(V) in original coordinates. Each facet cycle
/// is fanned from the facet's mean direction with `rings` subdivisions so the
/// mesh follows the sphere.
inline Mesh boundary_mesh(const geometry::BallComplex& bc, double step_deg = 2.0, int rings = 6) {
  Mesh mesh;
  const auto& ps = bc.points();
  const double step = step_deg * std::numbers::pi / 180.0;
  for (const auto& facet : bc.facets()) {
    const Vec3& c = ps.normalized(facet.center);
    for (const auto& cycle : facet.boundary_cycles) {
      auto rim = detail::cycle_polyline(bc, cycle, step);
      if (rim.size() < 3) continue;
      Vec3 mean = Vec3::Zero();
      for (const auto& x : rim) mean += (x - c).normalized();
      if (mean.norm() < 1e-12) continue;
      Vec3 apex = mean.normalized();
      const int m = static_cast<int>(rim.size());
      const int base = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back(ps.to_original(c + apex));
      for (int r = 1; r <= rings; ++r) {
        double t = static_cast<double>(r) / rings;
        for (const auto& x : rim) {
          Vec3 dir = ((1.0 - t) * apex + t * (x - c).normalized()).normalized();
          mesh.vertices.push_back(ps.to_original(c + dir));
        }
      }
      auto ring_vertex = [&](int r, int k) { return base + 1 + (r - 1) * m + (k % m); };
      for (int k = 0; k < m; ++k) mesh.triangles.push_back({base, ring_vertex(1, k), ring_vertex(1, k + 1)});
      for (int r = 1; r < rings; ++r) {
        for (int k = 0; k < m; ++k) {
          mesh.triangles.push_back({ring_vertex(r, k), ring_vertex(r + 1, k), ring_vertex(r + 1, k + 1)});
          mesh.triangles.push_back({ring_vertex(r, k), ring_vertex(r + 1, k + 1), ring_vertex(r, k + 1)});
        }
      }
    }
  }
  return mesh;
}

inline std::string to_off(const Mesh& mesh) {
  std::ostringstream out;
  out.precision(17);
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.triangles.size() << " 0\n";
  for (const auto& v : mesh.vertices) out << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  for (const auto& t : mesh.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return out.str();
}

}  // namespace reuleaux::io
