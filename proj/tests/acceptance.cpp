// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "reuleaux/borsuk/borsuk.hpp"
#include "reuleaux/generator/involutive.hpp"
#include "reuleaux/geometry/ball_complex.hpp"
#include "reuleaux/geometry/classify.hpp"
#include "reuleaux/graph/coloring.hpp"
#include "reuleaux/graph/connectivity.hpp"
#include "reuleaux/graph/involution.hpp"
#include "reuleaux/realize/realize.hpp"

using namespace reuleaux;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

const std::vector<generator::InvolutiveGraph>& graphs10() {
  static const auto g = generator::enumerate(10);
  return g;
}

const std::vector<fixtures::Realized>& realized10() {
  static const auto r = fixtures::realized_graphs(10);
  return r;
}

Outcome criterion1() {
  Outcome o;
  auto ps = fixtures::vazsonyi8();
  auto d = geometry::diameter(ps);
  std::set<std::pair<std::string, std::string>> got, want;
  for (auto [a, b] : d.pairs) got.insert(std::minmax(ps.label(a), ps.label(b)));
  for (auto [a, b] : fixtures::vazsonyi8_pairs()) want.insert(std::minmax(a, b));
  o.require(d.pairs.size() == 14, "14 diameter pairs");
  o.require(got == want, "pairs match");
  auto rep = geometry::classify(ps);
  o.require(rep.extremal, "extremal");
  o.require(rep.critical, "critical");
  auto skeleton = geometry::one_skeleton(geometry::ball_complex(ps));
  auto kappa = graph::vertex_connectivity(skeleton.simple_graph());
  o.require(kappa.kappa == 2, "skeleton 2-connected");
  bool zw = false;
  for (const auto& cut : kappa.minimum_cuts) {
    std::set<std::string> labels;
    for (int v : cut) labels.insert(skeleton.label(v));
    zw = zw || labels == std::set<std::string>{"z", "w"};
  }
  o.require(zw, "{z,w} is a minimum cut");
  o.require(!rep.strongly_critical, "not strongly critical");
  auto sub = borsuk::strongly_critical_subset(ps);
  o.require(sub && std::set<std::string>(sub->begin(), sub->end()) == std::set<std::string>{"w", "x", "y", "z"},
            "critical subset {w,x,y,z}");
  int a = borsuk::borsuk_number(ps).a;
  o.require(a == 4, "Borsuk number 4");
  o.detail << "e=" << d.pairs.size() << " kappa=" << kappa.kappa << " a=" << a;
  return o;
}

Outcome criterion2() {
  Outcome o;
  int mismatches = 0;
  for (const auto& r : realized10()) {
    auto rep = geometry::classify(geometry::PointSet::unlabeled(r.points, 1e-6));
    bool rhs = rep.tight && rep.vertices_equal_points;
    if (rep.extremal != rhs || !rep.extremal) ++mismatches;
  }
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(realized10().size()) - 1);
  int perturbed = 0;
  while (perturbed < 50) {
    auto pts = fixtures::perturb(realized10()[pick(rng)].points, 1e-3, 5e-2, rng);
    auto rep = geometry::classify(geometry::PointSet::unlabeled(pts));
    if (rep.extremal) continue;
    ++perturbed;
    bool rhs = rep.tight && rep.vertices_equal_points;
    if (rep.extremal != rhs) ++mismatches;
  }
  o.require(realized10().size() == graphs10().size(), "every graph with n <= 10 realized");
  o.require(mismatches == 0, "exact agreement");
  o.detail << "realized=" << realized10().size() << "/" << graphs10().size() << " perturbed=" << perturbed
           << " mismatches=" << mismatches;
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto graphs = generator::enumerate(generator::EnumerationOptions{12, false});
  int failures = 0;
  for (const auto& ig : graphs) {
    auto diag = generator::diagonal_graph(ig);
    bool ok = graph::chromatic_number(diag) == 4 && graph::is_vertex_4_critical(diag) && graph::is_edge_4_critical(diag);
    failures += !ok;
  }
  std::map<int, int> counts;
  for (const auto& ig : graphs) ++counts[ig.size()];
  o.require(failures == 0, "all diagonal graphs 4-critical");
  o.detail << "graphs=" << graphs.size() << " failures=" << failures << " counts=";
  for (auto [n, k] : counts) o.detail << n << ":" << k << " ";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::map<int, std::set<std::vector<int>>> oracle_codes, gen_codes;
  auto all = oracle::polyhedral_graphs(9, 16, 7);
  for (const auto& g : all) {
    if (g.num_edges() != 2 * g.size() - 2) continue;
    if (graph::find_involution(g)) oracle_codes[g.size()].insert(graph::canonical_code(g));
  }
  for (const auto& ig : generator::enumerate(9)) gen_codes[ig.size()].insert(graph::canonical_code(ig.g));
  o.require(oracle_codes == gen_codes, "isomorphism classes equal");
  o.detail << "polyhedral=" << all.size() << " involutive by n:";
  for (auto& [n, s] : oracle_codes) o.detail << " " << n << ":" << s.size() << "/" << gen_codes[n].size();
  return o;
}

Outcome criterion5() {
  Outcome o;
  realize::RealizeOptions opt;
  auto k4 = realize::realize(generator::odd_wheel(3), opt);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) worst = std::max(worst, std::abs((k4.points[i] - k4.points[j]).norm() - 1.0));
  }
  o.require(k4.converged && worst < 1e-9, "K4 unit tetrahedron");
  auto w5g = generator::odd_wheel(5);
  auto w5 = realize::realize(w5g, opt);
  auto rep = realize::verify_realization(w5.points, w5g, 1e-6);
  o.require(w5.converged && w5.diagonal_residual < 1e-6, "W5 diagonal residual");
  o.require(rep.passed(), "W5 verify_realization");

  auto prob = realize::RealizationProblem::from_graph(w5g, opt.delta);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  double worst_rel = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd x(3 * prob.n);
    for (int i = 0; i < x.size(); ++i) x(i) = u(rng);
    Eigen::VectorXd g = realize::gradient(prob, x);
    Eigen::VectorXd fd(x.size());
    const double h = 1e-6;
    for (int i = 0; i < x.size(); ++i) {
      Eigen::VectorXd xp = x, xm = x;
      xp(i) += h;
      xm(i) -= h;
      fd(i) = (realize::objective(prob, xp) - realize::objective(prob, xm)) / (2 * h);
    }
    worst_rel = std::max(worst_rel, (g - fd).norm() / std::max(1.0, g.norm()));
  }
  o.require(worst_rel < 1e-6, "gradient matches finite differences");
  o.detail << std::scientific << std::setprecision(2) << "K4 residual=" << worst << " W5 residual=" << w5.diagonal_residual
           << " grad rel err=" << worst_rel;
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  int positives = 0, discrepancies = 0;
  for (const auto& r : realized10()) {
    for (int extra = 0; extra <= 4; ++extra) {
      std::vector<Vec3> pts = r.points;
      while (static_cast<int>(pts.size()) < r.graph.size() + extra) {
        Vec3 x = fixtures::interior_point(r.points, 1e-3, rng);
        bool clear = true;
        for (std::size_t i = r.points.size(); i < pts.size(); ++i) clear = clear && (x - pts[i]).norm() < 1.0 - 1e-3;
        if (clear) pts.push_back(x);
      }
      auto ps = geometry::PointSet::unlabeled(pts, 1e-6);
      bool a4 = false, present = false, reuleaux = false;
      try {
        a4 = borsuk::borsuk_number(ps).a == 4;
        auto sub = borsuk::strongly_critical_subset(ps);
        present = sub.has_value();
        if (sub) {
          std::vector<int> idx;
          for (const auto& l : *sub) idx.push_back(ps.index_of(l));
          reuleaux = geometry::classify(ps.subset(idx)).reuleaux;
        }
      } catch (const ConsistencyError&) {
        ++discrepancies;
        continue;
      }
      ++positives;
      if (!(a4 && present && reuleaux)) ++discrepancies;
    }
  }
  int negatives = 0;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> size(4, 10);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(realized10().size()) - 1);
  while (negatives < 50) {
    std::vector<Vec3> pts;
    if (negatives % 2 == 0) {
      int n = size(rng);
      for (int i = 0; i < n; ++i) pts.emplace_back(u(rng), u(rng), u(rng));
    } else {
      pts = fixtures::perturb(realized10()[pick(rng)].points, 1e-3, 2e-2, rng);
    }
    auto ps = geometry::PointSet::unlabeled(pts);
    if (graph::chromatic_number(geometry::diameter_graph(ps).to_graph()) > 3) continue;
    ++negatives;
    bool a4 = borsuk::borsuk_number(ps).a == 4;
    bool present = borsuk::strongly_critical_subset(ps).has_value();
    if (a4 || present) ++discrepancies;
  }
  o.require(positives == 5 * static_cast<int>(graphs10().size()), "every augmented set checked");
  o.require(discrepancies == 0, "zero discrepancies");
  o.detail << "positive sets=" << positives << " negative sets=" << negatives << " discrepancies=" << discrepancies;
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto ps = fixtures::tetrahedron();
  borsuk::ReuleauxBody body(ps);
  std::mt19937_64 rng(7);
  auto queries = borsuk::sample_body(body, 10000, 0.5, rng);
  double worst1 = 0.0, worst = 0.0;
  int unassigned = 0;
  for (const auto& v : ps.labels()) {
    auto as = borsuk::critical_partition(body, v, 0.05, queries);
    std::vector<std::vector<Vec3>> parts(5);
    for (std::size_t i = 0; i < queries.size(); ++i) {
      if (as.part[i] < 1 || as.part[i] > 4) {
        ++unassigned;
        continue;
      }
      parts[as.part[i]].push_back(queries[i]);
    }
    worst1 = std::max(worst1, fixtures::diameter_of(parts[1]));
    for (int p = 2; p <= 4; ++p) worst = std::max(worst, fixtures::diameter_of(parts[p]));
  }
  o.require(unassigned == 0, "all samples assigned");
  o.require(worst1 <= 0.05, "part 1 diameter <= 0.05");
  o.require(worst <= 0.999, "parts 2-4 diameter <= 0.999");
  o.detail << std::fixed << std::setprecision(4) << "samples=" << queries.size() << " part1 diam=" << worst1
           << " parts2-4 diam=" << worst;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "8-point configuration reproduction", 5.0, criterion1},
      {2, "extremal <=> tight and V = vert B(V)", 120.0, criterion2},
      {3, "diagonal graphs 4-critical (n <= 12)", 600.0, criterion3},
      {4, "generator equals brute-force oracle (n <= 9)", 0.0, criterion4},
      {5, "realization of K4 and W5, gradient check", 60.0, criterion5},
      {6, "Borsuk number 4 <=> critical subset <=> Reuleaux", 0.0, criterion6},
      {7, "critical partition of the Reuleaux tetrahedron", 60.0, criterion7},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0.0 && secs >= c.budget_s) {
      o.pass = false;
      o.detail << " FAILED[runtime budget " << c.budget_s << " s]";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  (" << std::fixed
              << std::setprecision(2) << secs << " s)  " << o.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
