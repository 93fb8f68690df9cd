#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "reuleaux/generator/involutive.hpp"
#include "reuleaux/geometry/point_set.hpp"
#include "reuleaux/io/json.hpp"
#include "reuleaux/realize/realize.hpp"

namespace fixtures {

using reuleaux::Vec3;
using reuleaux::geometry::PointSet;

inline std::string data_path(const std::string& name) { return std::string(REULEAUX_DATA_DIR) + "/" + name; }

inline PointSet tetrahedron() { return reuleaux::io::load_point_set(data_path("tetrahedron.json")); }
inline PointSet vazsonyi8() { return reuleaux::io::load_point_set(data_path("vazsonyi8.json")); }

/// The 14 diameter pairs of the 8-point configuration, computed once with
/// an independent numpy script (pairwise distances within 5e-3 of the
/// maximum) and frozen here.
inline const std::vector<std::pair<std::string, std::string>>& vazsonyi8_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"w", "x"}, {"w", "y"}, {"w", "z"}, {"w", "c"}, {"x", "y"}, {"x", "z"}, {"x", "b"},
      {"y", "z"}, {"y", "a"}, {"z", "d"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}};
  return pairs;
}

struct Realized {
  reuleaux::generator::InvolutiveGraph graph;
  std::vector<Vec3> points;
};

/// Every enumerated graph up to n_max with its first verified realization
/// (seed 0). Graphs that do not realize are skipped.
inline std::vector<Realized> realized_graphs(int n_max) {
  std::vector<Realized> out;
  reuleaux::realize::RealizeOptions opt;
  opt.collect_all = false;
  for (auto& ig : reuleaux::generator::enumerate(n_max)) {
    auto res = reuleaux::realize::realize(ig, opt);
    if (res.converged) out.push_back({std::move(ig), res.points});
  }
  return out;
}

/// Uniform point strictly inside B(V): at most 1 - margin from every center.
inline Vec3 interior_point(const std::vector<Vec3>& centers, double margin, std::mt19937_64& rng) {
  Vec3 mean = Vec3::Zero();
  for (const auto& c : centers) mean += c;
  mean /= static_cast<double>(centers.size());
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    Vec3 x = mean + Vec3(u(rng), u(rng), u(rng));
    bool inside = true;
    for (const auto& c : centers) inside = inside && (x - c).norm() <= 1.0 - margin;
    if (inside) return x;
  }
}

/// Every point moved by an independent random offset of length in [lo, hi].
inline std::vector<Vec3> perturb(std::vector<Vec3> pts, double lo, double hi, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> len(lo, hi);
  for (auto& p : pts) p += len(rng) * Vec3(g(rng), g(rng), g(rng)).normalized();
  return pts;
}

inline double diameter_of(const std::vector<Vec3>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, (pts[i] - pts[j]).norm());
  }
  return d;
}

}  // namespace fixtures
