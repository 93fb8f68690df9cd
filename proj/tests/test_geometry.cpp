#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "reuleaux/geometry/ball_complex.hpp"
#include "reuleaux/geometry/classify.hpp"
#include "reuleaux/geometry/min_ball.hpp"
#include "reuleaux/graph/connectivity.hpp"
#include "reuleaux/graph/involution.hpp"
#include "reuleaux/graph/planar.hpp"

using namespace reuleaux;
using geometry::PointSet;

namespace {

std::set<std::pair<std::string, std::string>> labeled_pairs(const PointSet& ps) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [a, b] : geometry::diameter(ps).pairs) out.insert(std::minmax(ps.label(a), ps.label(b)));
  return out;
}

PointSet tetra_with_centroid() {
  auto t = fixtures::tetrahedron();
  std::vector<Vec3> pts = t.points();
  Vec3 c = Vec3::Zero();
  for (const auto& p : pts) c += p / 4.0;
  pts.push_back(c);
  return PointSet({"a", "b", "c", "d", "o"}, pts);
}

}  // namespace

TEST(Diameter, Tetrahedron) {
  auto d = geometry::diameter(fixtures::tetrahedron());
  EXPECT_NEAR(d.value, 1.0, 1e-12);
  EXPECT_EQ(d.pairs.size(), 6u);
}

TEST(Diameter, EightPointConfiguration) {
  auto ps = fixtures::vazsonyi8();
  auto d = geometry::diameter(ps);
  EXPECT_NEAR(d.value, std::sqrt(3.0), 5e-3);
  std::set<std::pair<std::string, std::string>> want;
  for (auto [a, b] : fixtures::vazsonyi8_pairs()) want.insert(std::minmax(a, b));
  EXPECT_EQ(labeled_pairs(ps), want);
}

TEST(Diameter, TwoPointsAndErrors) {
  auto d = geometry::diameter(PointSet::unlabeled({Vec3(0, 0, 0), Vec3(2, 0, 0)}));
  EXPECT_NEAR(d.value, 2.0, 1e-12);
  ASSERT_EQ(d.pairs.size(), 1u);
  EXPECT_THROW(geometry::diameter(PointSet::unlabeled({Vec3(0, 0, 0)})), ArgumentError);
}

TEST(DiameterGraph, CollinearPoints) {
  auto dg = geometry::diameter_graph(PointSet::unlabeled({Vec3(0, 0, 0), Vec3(0.5, 0, 0), Vec3(1, 0, 0)}));
  ASSERT_EQ(dg.edge_count(), 1);
  auto g = dg.to_graph();
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(DiameterGraph, TetrahedronIsK4) {
  auto g = geometry::diameter_graph(fixtures::tetrahedron()).to_graph();
  EXPECT_EQ(g.num_edges(), 6);
}

TEST(MinBall, ClosedForms) {
  auto t = geometry::circumball(fixtures::tetrahedron());
  EXPECT_NEAR(t.radius, std::sqrt(3.0 / 8.0), 1e-12);
  std::vector<Vec3> one = {Vec3(1, 2, 3)};
  EXPECT_NEAR(geometry::min_enclosing_ball(one).radius, 0.0, 1e-15);
  std::vector<Vec3> seg = {Vec3(0, 0, 0), Vec3(1, 0, 0)};
  auto b = geometry::min_enclosing_ball(seg);
  EXPECT_NEAR(b.radius, 0.5, 1e-12);
  EXPECT_NEAR((b.center - Vec3(0.5, 0, 0)).norm(), 0.0, 1e-12);
}

TEST(MinBall, MatchesBruteForceAndJungBound) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> size(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Vec3> pts;
    int n = size(rng);
    for (int i = 0; i < n; ++i) pts.emplace_back(g(rng), g(rng), 0.3 * g(rng));
    auto mine = geometry::min_enclosing_ball(pts);
    auto ref = oracle::min_ball(pts);
    EXPECT_NEAR(mine.radius, ref.radius, 1e-9) << "trial " << trial;
    EXPECT_NEAR((mine.center - ref.center).norm(), 0.0, 1e-6) << "trial " << trial;
    double diam = fixtures::diameter_of(pts);
    EXPECT_LE(mine.radius, diam * std::sqrt(3.0 / 8.0) + 1e-9);
  }
}

TEST(Tightness, EssentialPoints) {
  EXPECT_EQ(geometry::essential_points(fixtures::tetrahedron()).size(), 4u);
  EXPECT_TRUE(geometry::is_tight(fixtures::tetrahedron()));
  EXPECT_EQ(geometry::essential_points(fixtures::vazsonyi8()).size(), 8u);
  EXPECT_TRUE(geometry::is_tight(fixtures::vazsonyi8()));
  auto ess = geometry::essential_points(tetra_with_centroid());
  EXPECT_EQ(std::set<std::string>(ess.begin(), ess.end()), (std::set<std::string>{"a", "b", "c", "d"}));
  EXPECT_FALSE(geometry::is_tight(tetra_with_centroid()));
}

TEST(BallComplex, ReuleauxTetrahedron) {
  auto bc = geometry::ball_complex(fixtures::tetrahedron());
  EXPECT_EQ(bc.facets().size(), 4u);
  EXPECT_EQ(bc.edges().size(), 6u);
  ASSERT_EQ(bc.vertices().size(), 4u);
  for (const auto& v : bc.vertices()) EXPECT_EQ(v.kind, geometry::VertexKind::Principal);
  EXPECT_TRUE(bc.vertices_equal_points());
}

TEST(BallComplex, NonTightInputRejected) {
  EXPECT_THROW(geometry::ball_complex(tetra_with_centroid()), PreconditionError);
}

// Arc spans checked against dense sampling of every pair circle: the part of
// S(p) ∩ S(q) inside every other ball must equal the sum of the arcs on it.
TEST(BallComplex, ArcSpansMatchDenseSampling) {
  std::vector<PointSet> sets = {fixtures::tetrahedron(), fixtures::vazsonyi8()};
  for (const auto& r : fixtures::realized_graphs(7)) sets.push_back(PointSet::unlabeled(r.points, 1e-6));
  const int samples = 7200;
  for (const auto& ps : sets) {
    auto bc = geometry::ball_complex(ps);
    std::map<std::array<int, 2>, double> span;
    for (const auto& e : bc.edges()) span[e.centers] += e.span;
    const auto& P = ps.normalized();
    for (int p = 0; p < ps.size(); ++p) {
      for (int q = p + 1; q < ps.size(); ++q) {
        auto circle = geometry::unit_sphere_circle(P[p], P[q]);
        if (!circle) continue;
        int inside = 0;
        for (int k = 0; k < samples; ++k) {
          Vec3 x = circle->at(2 * std::numbers::pi * k / samples);
          bool in = true;
          for (const auto& c : P) in = in && (x - c).norm() <= 1.0 + 1e-9;
          inside += in;
        }
        double sampled = 2 * std::numbers::pi * inside / samples;
        double got = span.count({p, q}) ? span[{p, q}] : 0.0;
        EXPECT_NEAR(got, sampled, 4 * std::numbers::pi / samples) << "pair " << p << "," << q << " of n=" << ps.size();
      }
    }
  }
}

TEST(BallComplex, ThreeMutuallyUnitPoints) {
  double h = std::sqrt(3.0) / 2;
  auto ps = PointSet::unlabeled({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.5, h, 0)});
  auto bc = geometry::ball_complex(ps);
  int principal = 0;
  for (const auto& v : bc.vertices()) principal += v.kind == geometry::VertexKind::Principal;
  EXPECT_EQ(principal, 2);
  // brute force: the three unit spheres meet in exactly two points
  auto triple = geometry::unit_sphere_triple(ps.normalized(0), ps.normalized(1), ps.normalized(2));
  EXPECT_EQ(triple.size(), 2u);
  // each input point lies on two facets and becomes a dangling vertex that
  // splits its lens circle, so the skeleton is simple: 5 vertices, 6 arcs
  EXPECT_EQ(bc.vertices().size(), 5u);
  EXPECT_EQ(bc.edges().size(), 6u);
  auto skeleton = geometry::one_skeleton(bc);
  EXPECT_TRUE(skeleton.is_simple());
  for (int v = 0; v < skeleton.size(); ++v) {
    bool dangling = bc.vertices()[v].kind == geometry::VertexKind::Dangling;
    EXPECT_EQ(skeleton.degree(v), dangling ? 2 : 3);
  }
}

TEST(OneSkeleton, TetrahedronIsEmbeddedK4) {
  auto g = geometry::one_skeleton(geometry::ball_complex(fixtures::tetrahedron()));
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(g.num_edges(), 6);
  ASSERT_EQ(g.num_faces(), 4);
  for (const auto& f : g.faces()) EXPECT_EQ(f.size(), 3u);
}

TEST(OneSkeleton, EightPointsTwoConnectedWithCutZW) {
  auto g = geometry::one_skeleton(geometry::ball_complex(fixtures::vazsonyi8()));
  EXPECT_EQ(g.size(), 8);
  auto k = graph::vertex_connectivity(g.simple_graph());
  EXPECT_EQ(k.kappa, 2);
  EXPECT_EQ(oracle::connectivity(g.simple_graph()), 2);
  bool found = false;
  for (const auto& cut : k.minimum_cuts) {
    std::set<std::string> l;
    for (int v : cut) l.insert(g.label(v));
    found = found || l == std::set<std::string>{"z", "w"};
  }
  EXPECT_TRUE(found);
}

TEST(CanonicalInvolution, TetrahedronOppositeFacets) {
  auto bc = geometry::ball_complex(fixtures::tetrahedron());
  auto ci = geometry::canonical_involution(bc);
  auto g = geometry::one_skeleton(bc);
  EXPECT_TRUE(graph::verify_involution(g, ci.on_skeleton));
  for (int v = 0; v < 4; ++v) {
    const auto& f = ci.on_skeleton.tau[v];
    EXPECT_EQ(f.size(), 3u);
    EXPECT_EQ(std::count(f.begin(), f.end(), v), 0);
  }
  for (std::size_t e = 0; e < ci.edge_map.size(); ++e) EXPECT_EQ(ci.edge_map[ci.edge_map[e]], static_cast<int>(e));
}

TEST(CanonicalInvolution, RelabelingIsEquivariant) {
  auto t = fixtures::tetrahedron();
  std::vector<Vec3> pts = {t.point(2), t.point(0), t.point(3), t.point(1)};
  auto bc = geometry::ball_complex(PointSet({"c", "a", "d", "b"}, pts));
  auto ci = geometry::canonical_involution(bc);
  auto g = geometry::one_skeleton(bc);
  for (int v = 0; v < 4; ++v) {
    std::set<std::string> face;
    for (int u : ci.on_skeleton.tau[v]) face.insert(g.label(u));
    EXPECT_EQ(face.count(g.label(v)), 0u);
    EXPECT_EQ(face.size(), 3u);
  }
}

TEST(CanonicalInvolution, RealizedW5MatchesCombinatorialInvolution) {
  auto w5 = generator::odd_wheel(5);
  realize::RealizeOptions opt;
  opt.collect_all = false;
  auto res = realize::realize(w5, opt);
  ASSERT_TRUE(res.converged);
  auto bc = geometry::ball_complex(PointSet::unlabeled(res.points, 1e-6));
  auto ci = geometry::canonical_involution(bc);
  auto g = geometry::one_skeleton(bc);
  EXPECT_TRUE(graph::verify_involution(g, ci.on_skeleton));
  EXPECT_TRUE(graph::are_isomorphic(g, w5.g));
  // the diagonal graphs induced by both involutions are the same graph
  EXPECT_TRUE(oracle::isomorphic(graph::diagonal_graph(g, ci.on_skeleton), generator::diagonal_graph(w5)));
}

TEST(CanonicalInvolution, NonExtremalRejected) {
  auto bc = geometry::ball_complex(PointSet::unlabeled(
      {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.5, std::sqrt(3.0) / 2, 0), Vec3(0.5, 0.3, 0.6)}));
  EXPECT_THROW(geometry::canonical_involution(bc), PreconditionError);
}

TEST(Classify, Tetrahedron) {
  auto r = geometry::classify(fixtures::tetrahedron());
  EXPECT_TRUE(r.extremal && r.critical && r.tight && r.vertices_equal_points);
  EXPECT_TRUE(r.standard && r.reuleaux && r.strongly_critical);
}

TEST(Classify, EightPoints) {
  auto r = geometry::classify(fixtures::vazsonyi8());
  EXPECT_TRUE(r.extremal);
  EXPECT_TRUE(r.critical);
  EXPECT_FALSE(r.standard);
  EXPECT_FALSE(r.reuleaux);
  EXPECT_FALSE(r.strongly_critical);
  EXPECT_EQ(r.skeleton_connectivity, 2);
}

TEST(Classify, GenericPointsAllFalse) {
  auto ps = PointSet::unlabeled({Vec3(0, 0, 0), Vec3(1, 0.1, 0), Vec3(0.3, 0.5, 0.1), Vec3(0.6, -0.2, 0.3),
                                 Vec3(0.2, 0.1, -0.4)});
  auto r = geometry::classify(ps);
  EXPECT_EQ(r.diameter_count, 1);
  EXPECT_FALSE(r.extremal || r.critical || r.reuleaux || r.strongly_critical);
  EXPECT_FALSE(r.vertices_equal_points);
}

TEST(Classify, TooFewPoints) {
  EXPECT_THROW(geometry::classify(PointSet::unlabeled({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)})), ArgumentError);
}

// Every extremal realized set is tight with V = vert B(V).
TEST(Classify, ExtremalImpliesTightAndVertices) {
  for (const auto& r : fixtures::realized_graphs(8)) {
    auto rep = geometry::classify(PointSet::unlabeled(r.points, 1e-6));
    EXPECT_TRUE(rep.extremal);
    EXPECT_TRUE(rep.tight);
    EXPECT_TRUE(rep.vertices_equal_points);
  }
}
