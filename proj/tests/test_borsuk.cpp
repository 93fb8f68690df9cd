#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "reuleaux/borsuk/borsuk.hpp"
#include "reuleaux/geometry/min_ball.hpp"
#include "reuleaux/graph/coloring.hpp"

using namespace reuleaux;
using geometry::PointSet;

namespace {

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

PointSet realized_w5() {
  realize::RealizeOptions opt;
  opt.collect_all = false;
  auto res = realize::realize(generator::odd_wheel(5), opt);
  return PointSet::unlabeled(res.points, 1e-6);
}

}  // namespace

TEST(BorsukNumber, Examples) {
  EXPECT_EQ(borsuk::borsuk_number(fixtures::tetrahedron()).a, 4);
  auto square = PointSet::unlabeled({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(0, 1, 0)});
  auto r = borsuk::borsuk_number(square);
  EXPECT_EQ(r.a, 2);
  EXPECT_FALSE(r.critical_subset);
  auto v8 = borsuk::borsuk_number(fixtures::vazsonyi8());
  EXPECT_EQ(v8.a, 4);
  ASSERT_TRUE(v8.critical_subset);
  EXPECT_EQ(as_set(*v8.critical_subset), (std::set<std::string>{"w", "x", "y", "z"}));
}

TEST(BorsukNumber, ClassesHaveSmallerDiameter) {
  auto ps = fixtures::vazsonyi8();
  auto r = borsuk::borsuk_number(ps);
  ASSERT_EQ(r.partition.size(), 4u);
  std::size_t total = 0;
  for (std::size_t k = 0; k < r.partition.size(); ++k) {
    total += r.partition[k].size();
    std::vector<Vec3> pts;
    for (const auto& l : r.partition[k]) pts.push_back(ps.normalized(ps.index_of(l)));
    EXPECT_NEAR(fixtures::diameter_of(pts), r.class_diameters[k], 1e-12);
    EXPECT_LT(r.class_diameters[k], 1.0 - 1e-3);
  }
  EXPECT_EQ(total, 8u);
}

TEST(CriticalSubset, IndependentOfDeletionOrder) {
  auto ps = fixtures::vazsonyi8();
  std::mt19937_64 rng(20);
  std::vector<int> order(ps.size());
  std::iota(order.begin(), order.end(), 0);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    auto sub = borsuk::strongly_critical_subset(ps, order);
    ASSERT_TRUE(sub);
    EXPECT_EQ(as_set(*sub), (std::set<std::string>{"w", "x", "y", "z"}));
  }
  auto t = borsuk::strongly_critical_subset(fixtures::tetrahedron());
  ASSERT_TRUE(t);
  EXPECT_EQ(t->size(), 4u);
}

// Adding interior points never changes the Borsuk number or the subset.
TEST(CriticalSubset, StableUnderInteriorPoints) {
  auto base = fixtures::tetrahedron();
  std::mt19937_64 rng(21);
  std::vector<Vec3> pts = base.points();
  std::vector<std::string> labels = base.labels();
  for (int k = 0; k < 4; ++k) {
    Vec3 x = fixtures::interior_point(base.points(), 0.05, rng);
    bool clear = true;
    for (std::size_t i = 4; i < pts.size(); ++i) clear = clear && (x - pts[i]).norm() < 0.95;
    if (!clear) continue;
    pts.push_back(x);
    labels.push_back("p" + std::to_string(k));
    PointSet ps(labels, pts, 1e-6);
    auto r = borsuk::borsuk_number(ps);
    EXPECT_EQ(r.a, 4);
    ASSERT_TRUE(r.critical_subset);
    EXPECT_EQ(as_set(*r.critical_subset), as_set(base.labels()));
  }
}

TEST(CriticalColoring, Tetrahedron) {
  auto ps = fixtures::tetrahedron();
  for (const auto& v : ps.labels()) {
    auto cert = borsuk::critical_coloring(ps, v);
    int iv = ps.index_of(v);
    ASSERT_TRUE(cert.special_vertex);
    EXPECT_EQ(*cert.special_vertex, iv);
    EXPECT_EQ(cert.assignment[iv], 3);
    std::set<int> others;
    for (int u = 0; u < 4; ++u) {
      if (u != iv) others.insert(cert.assignment[u]);
    }
    EXPECT_EQ(others, (std::set<int>{0, 1, 2}));
  }
}

TEST(CriticalColoring, RealizedW5Hub) {
  auto ps = realized_w5();
  auto cert = borsuk::critical_coloring(ps, "0");
  EXPECT_EQ(cert.assignment[0], 3);
  auto g = geometry::diameter_graph(ps).to_graph();
  EXPECT_TRUE(graph::is_proper_coloring(g, cert.assignment));
  for (int u = 1; u < ps.size(); ++u) EXPECT_LT(cert.assignment[u], 3);
}

TEST(CriticalColoring, NonReuleauxRejected) {
  EXPECT_THROW(borsuk::critical_coloring(fixtures::vazsonyi8(), "w"), PreconditionError);
}

TEST(Wedge, MembershipExamples) {
  borsuk::ReuleauxBody body(fixtures::tetrahedron());
  const auto& bc = body.complex();
  ASSERT_EQ(body.wedges().size(), 6u);
  Vec3 center = geometry::min_enclosing_ball(body.centers()).center;
  for (const auto& w : body.wedges()) {
    EXPECT_TRUE(borsuk::wedge_membership(w, bc.edges()[w.edge].midpoint));
    EXPECT_FALSE(borsuk::wedge_membership(w, center));
    // the opposite arc runs between the centers of this one
    for (const auto& e : bc.edges()) {
      std::array<int, 2> ends{bc.vertices()[e.from].point, bc.vertices()[e.to].point};
      std::sort(ends.begin(), ends.end());
      if (ends == w.centers) EXPECT_FALSE(borsuk::wedge_membership(w, e.midpoint));
    }
  }
}

TEST(Partition, SpecialQueries) {
  auto ps = fixtures::tetrahedron();
  borsuk::ReuleauxBody body(ps);
  borsuk::CriticalPartition part(body, "a", 0.05);
  auto v = part.classify(ps.point(0));
  EXPECT_EQ(v.part, 1);
  EXPECT_EQ(v.rule, borsuk::Rule::BallP1);
  for (int u = 1; u < 4; ++u) {
    auto r = part.classify(ps.point(u));
    EXPECT_EQ(r.part, part.vertex_part(u));
    EXPECT_GE(r.part, 2);
  }
  auto c = part.classify(body.points().to_original(part.circumcenter_normalized()));
  EXPECT_TRUE(c.fallback);
  EXPECT_GE(c.part, 2);
  EXPECT_THROW(part.classify(Vec3(5, 5, 5)), ArgumentError);
  EXPECT_THROW(borsuk::CriticalPartition(body, "a", 0.0), ArgumentError);
  EXPECT_THROW(borsuk::CriticalPartition(body, "nope", 0.05), ArgumentError);
}

TEST(Partition, PartsHaveSmallDiameter) {
  auto ps = fixtures::tetrahedron();
  borsuk::ReuleauxBody body(ps);
  std::mt19937_64 rng(22);
  auto queries = borsuk::sample_body(body, 3000, 0.5, rng);
  for (const auto& v : ps.labels()) {
    auto as = borsuk::critical_partition(body, v, 0.05, queries);
    std::vector<std::vector<Vec3>> parts(5);
    for (std::size_t i = 0; i < queries.size(); ++i) {
      ASSERT_GE(as.part[i], 1);
      ASSERT_LE(as.part[i], 4);
      parts[as.part[i]].push_back(queries[i]);
    }
    EXPECT_LE(fixtures::diameter_of(parts[1]), 0.05);
    for (int p = 2; p <= 4; ++p) EXPECT_LT(fixtures::diameter_of(parts[p]), 1.0 - 1e-9);
  }
}

TEST(Partition, WorksOnRealizedW5) {
  auto ps = realized_w5();
  borsuk::ReuleauxBody body(ps, 1.0);
  std::mt19937_64 rng(23);
  auto queries = borsuk::sample_body(body, 2000, 0.5, rng);
  auto as = borsuk::critical_partition(body, "0", 0.05, queries);
  std::vector<std::vector<Vec3>> parts(5);
  for (std::size_t i = 0; i < queries.size(); ++i) parts[as.part[i]].push_back(queries[i]);
  EXPECT_LE(fixtures::diameter_of(parts[1]), 0.05);
  for (int p = 2; p <= 4; ++p) EXPECT_LT(fixtures::diameter_of(parts[p]), 1.0);
}
