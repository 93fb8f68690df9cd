#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/LevenbergMarquardt>

#include "reuleaux/core.hpp"
#include "reuleaux/generator/involutive.hpp"
#include "reuleaux/geometry/ball_complex.hpp"
#include "reuleaux/geometry/classify.hpp"
#include "reuleaux/geometry/min_ball.hpp"
#include "reuleaux/graph/planar.hpp"

namespace reuleaux::realize {

using Pair = std::pair<int, int>;

inline constexpr int kMaxRealizationOrder = 14;

/// Diagonal pairs must sit at distance 1, every other pair at most 1 - delta.
struct RealizationProblem {
  int n = 0;
  std::vector<Pair> diagonal;
  std::vector<Pair> other;
  double delta = 1e-3;

  static RealizationProblem from_pairs(int n, const std::vector<Pair>& diagonal, double delta) {
    if (n < 3) throw ArgumentError("realize: need at least three vertices");
    RealizationProblem p;
    p.n = n;
    p.delta = delta;
    std::vector<std::vector<char>> is_diag(n, std::vector<char>(n, 0));
    for (auto [a, b] : diagonal) {
      if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw ArgumentError("realize: bad diagonal pair");
      if (is_diag[a][b]) continue;
      is_diag[a][b] = is_diag[b][a] = 1;
      p.diagonal.push_back(std::minmax(a, b));
    }
    std::sort(p.diagonal.begin(), p.diagonal.end());
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!is_diag[a][b]) p.other.emplace_back(a, b);
      }
    }
    return p;
  }

  static RealizationProblem from_graph(const generator::InvolutiveGraph& ig, double delta) {
    return from_pairs(ig.size(), generator::diagonal_graph(ig).edges(), delta);
  }
};

/// Penalty objective on flat coordinates (x0 y0 z0 x1 ...).
inline double objective(const RealizationProblem& p, const Eigen::VectorXd& x) {
  auto pt = [&](int i) { return x.segment<3>(3 * i); };
  double f = 0.0;
  for (auto [a, b] : p.diagonal) {
    double r = (pt(a) - pt(b)).norm() - 1.0;
    f += r * r;
  }
  for (auto [a, b] : p.other) {
    double r = std::max(0.0, (pt(a) - pt(b)).norm() - (1.0 - p.delta));
    f += r * r;
  }
  return f;
}

inline Eigen::VectorXd gradient(const RealizationProblem& p, const Eigen::VectorXd& x) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
  auto add = [&](int a, int b, double target, bool hinge) {
    Vec3 d = x.segment<3>(3 * a) - x.segment<3>(3 * b);
    double len = d.norm();
    double r = len - target;
    if (hinge && r <= 0.0) return;
    if (len == 0.0) return;
    Vec3 t = (2.0 * r / len) * d;
    g.segment<3>(3 * a) += t;
    g.segment<3>(3 * b) -= t;
  };
  for (auto [a, b] : p.diagonal) add(a, b, 1.0, false);
  for (auto [a, b] : p.other) add(a, b, 1.0 - p.delta, true);
  return g;
}

struct RealizeOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  double delta = 1e-3;
  double solver_tol = 1e-9;   // max diagonal residual for convergence
  double verify_tol = 1e-6;   // tolerance handed to verify_realization
  double init_radius = 0.7;
  int max_evaluations = 4000;
  int threads = 1;
  bool collect_all = true;    // keep running after the first success to gather distinct solutions
};

struct Attempt {
  std::vector<Vec3> points;
  double diagonal_residual = 0.0;    // max | |xa - xb| - 1 | over diagonal pairs
  double other_violation = 0.0;      // max(0, |xa - xb| - (1 - delta)) over other pairs
  double objective = 0.0;
  bool converged = false;
};

struct RealizationResult {
  std::vector<Vec3> points;          // best attempt (first converged by restart index, else lowest objective)
  double diagonal_residual = 0.0;
  double other_violation = 0.0;
  bool converged = false;
  bool verified = false;             // verify_realization passed (only set by realize)
  int restart = -1;                  // index of the reported attempt
  int attempts = 0;
  std::vector<std::vector<Vec3>> solutions;  // distinct converged solutions, by restart index
};

namespace detail {

// Gauge: x0 = 0, x1 = (t, 0, 0), x2 = (u, v, 0); the rest free.
inline Eigen::VectorXd expand(int n, const Eigen::VectorXd& free) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(3 * n);
  x(3) = free(0);
  x(6) = free(1);
  x(7) = free(2);
  for (int i = 3; i < n; ++i) x.segment<3>(3 * i) = free.segment<3>(3 + 3 * (i - 3));
  return x;
}

inline std::vector<int> free_index(int n) {
  std::vector<int> idx = {3, 6, 7};
  for (int i = 9; i < 3 * n; ++i) idx.push_back(i);
  return idx;
}

// Rigid motion taking points[0] to the origin, points[1] onto +x and
// points[2] into the xy-plane.
inline std::optional<std::vector<Vec3>> to_gauge(std::vector<Vec3> pts) {
  const Vec3 o = pts[0];
  for (auto& q : pts) q -= o;
  Vec3 e1 = pts[1];
  if (e1.norm() < 1e-9) return std::nullopt;
  e1.normalize();
  Vec3 w = pts[2] - pts[2].dot(e1) * e1;
  if (w.norm() < 1e-9) return std::nullopt;
  Vec3 e2 = w.normalized();
  Vec3 e3 = e1.cross(e2);
  for (auto& q : pts) q = Vec3(q.dot(e1), q.dot(e2), q.dot(e3));
  return pts;
}

struct Residuals : Eigen::DenseFunctor<double> {
  Residuals(const RealizationProblem& p, int inputs, int values)
      : Eigen::DenseFunctor<double>(inputs, values), prob(p), idx(free_index(p.n)) {}

  int operator()(const InputType& free, ValueType& r) const {
    Eigen::VectorXd x = expand(prob.n, free);
    int k = 0;
    for (auto [a, b] : prob.diagonal) r(k++) = (x.segment<3>(3 * a) - x.segment<3>(3 * b)).norm() - 1.0;
    for (auto [a, b] : prob.other) {
      r(k++) = std::max(0.0, (x.segment<3>(3 * a) - x.segment<3>(3 * b)).norm() - (1.0 - prob.delta));
    }
    return 0;
  }

  int df(const InputType& free, JacobianType& jac) const {
    Eigen::VectorXd x = expand(prob.n, free);
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(values(), 3 * prob.n);
    int k = 0;
    auto row = [&](int a, int b, bool hinge) {
      Vec3 d = x.segment<3>(3 * a) - x.segment<3>(3 * b);
      double len = d.norm();
      bool active = !hinge || len - (1.0 - prob.delta) > 0.0;
      if (active && len > 0.0) {
        full.block<1, 3>(k, 3 * a) = (d / len).transpose();
        full.block<1, 3>(k, 3 * b) = -(d / len).transpose();
      }
      ++k;
    };
    for (auto [a, b] : prob.diagonal) row(a, b, false);
    for (auto [a, b] : prob.other) row(a, b, true);
    for (std::size_t j = 0; j < idx.size(); ++j) jac.col(static_cast<Eigen::Index>(j)) = full.col(idx[j]);
    return 0;
  }

  const RealizationProblem& prob;
  std::vector<int> idx;
};

inline Attempt measure(const RealizationProblem& p, const Eigen::VectorXd& x) {
  Attempt out;
  for (int i = 0; i < p.n; ++i) out.points.push_back(x.segment<3>(3 * i));
  for (auto [a, b] : p.diagonal) {
    out.diagonal_residual = std::max(out.diagonal_residual, std::abs((out.points[a] - out.points[b]).norm() - 1.0));
  }
  for (auto [a, b] : p.other) {
    out.other_violation =
        std::max(out.other_violation, (out.points[a] - out.points[b]).norm() - (1.0 - p.delta));
  }
  out.other_violation = std::max(0.0, out.other_violation);
  out.objective = objective(p, x);
  return out;
}

inline std::vector<Vec3> spectral_seed(const RealizationProblem& p) {
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(p.n, p.n);
  for (auto [a, b] : p.diagonal) adj(a, b) = adj(b, a) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adj);
  std::vector<Vec3> pts(p.n);
  for (int i = 0; i < p.n; ++i) pts[i] = Vec3(es.eigenvectors()(i, 0), es.eigenvectors()(i, 1), es.eigenvectors()(i, 2));
  double diam = 0.0;
  for (int i = 0; i < p.n; ++i) {
    for (int j = i + 1; j < p.n; ++j) diam = std::max(diam, (pts[i] - pts[j]).norm());
  }
  if (diam > 0.0) {
    for (auto& q : pts) q /= diam;
  }
  return pts;
}

inline std::vector<Vec3> random_seed(int n, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec3> pts(n);
  for (auto& q : pts) {
    do {
      q = Vec3(u(rng), u(rng), u(rng));
    } while (q.squaredNorm() > 1.0);
    q *= radius;
  }
  return pts;
}

inline Attempt run_attempt(const RealizationProblem& p, const RealizeOptions& opt, int restart) {
  std::mt19937_64 rng(opt.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(restart + 1)));
  std::optional<std::vector<Vec3>> seed;
  if (restart == 0) seed = to_gauge(spectral_seed(p));
  while (!seed) seed = to_gauge(random_seed(p.n, opt.init_radius, rng));
  const auto idx = free_index(p.n);
  Eigen::VectorXd full(3 * p.n);
  for (int i = 0; i < p.n; ++i) full.segment<3>(3 * i) = (*seed)[i];
  Eigen::VectorXd free(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) free(static_cast<Eigen::Index>(j)) = full(idx[j]);

  const int m = static_cast<int>(p.diagonal.size() + p.other.size());
  Residuals functor(p, static_cast<int>(idx.size()), m);
  Eigen::LevenbergMarquardt<Residuals> lm(functor);
  lm.setMaxfev(opt.max_evaluations);
  lm.setXtol(1e-15);
  lm.setFtol(1e-15);
  lm.setGtol(0.0);
  lm.minimize(free);

  Attempt out = measure(p, expand(p.n, free));
  out.converged = out.diagonal_residual <= opt.solver_tol && out.other_violation <= opt.solver_tol;
  return out;
}

inline std::vector<double> distance_profile(const std::vector<Vec3>& pts) {
  std::vector<double> d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) d.push_back((pts[i] - pts[j]).norm());
  }
  std::sort(d.begin(), d.end());
  return d;
}

inline bool same_profile(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace detail

/// Multi-start Levenberg-Marquardt on the penalty residuals. Restart 0 uses
/// the spectral seed, the others uniform points in a ball. `accept` decides
/// which converged attempts count as solutions (default: all).
template <typename Accept>
RealizationResult realize_problem(const RealizationProblem& p, const RealizeOptions& opt, Accept accept) {
  if (p.n > kMaxRealizationOrder) throw ResourceError("realize: more than 14 vertices");
  if (p.n < 4) throw ArgumentError("realize: need at least four vertices");
  if (opt.restarts < 1) throw ArgumentError("realize: restarts must be positive");

  std::vector<Attempt> attempts(opt.restarts);
  std::vector<char> accepted(opt.restarts, 0);
  auto work = [&](int r) {
    attempts[r] = detail::run_attempt(p, opt, r);
    accepted[r] = attempts[r].converged && accept(attempts[r].points);
  };
  const int threads = std::max(1, std::min(opt.threads, opt.restarts));
  int done = 0;
  if (opt.collect_all) {
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int r = t; r < opt.restarts; r += threads) work(r);
      });
    }
    for (int r = 0; r < opt.restarts; r += threads) work(r);
    for (auto& th : pool) th.join();
    done = opt.restarts;
  } else {
    for (; done < opt.restarts; ++done) {
      work(done);
      if (accepted[done]) {
        ++done;
        break;
      }
    }
  }

  RealizationResult out;
  out.attempts = done;
  int best = -1;
  std::vector<std::vector<double>> profiles;
  for (int r = 0; r < done; ++r) {
    if (!accepted[r]) continue;
    if (best < 0) best = r;
    auto prof = detail::distance_profile(attempts[r].points);
    bool fresh = std::none_of(profiles.begin(), profiles.end(),
                              [&](const auto& q) { return detail::same_profile(q, prof, 1e-6); });
    if (fresh) {
      profiles.push_back(prof);
      out.solutions.push_back(attempts[r].points);
    }
  }
  if (best < 0) {
    best = 0;
    for (int r = 1; r < done; ++r) {
      if (attempts[r].objective < attempts[best].objective) best = r;
    }
  }
  out.points = attempts[best].points;
  out.diagonal_residual = attempts[best].diagonal_residual;
  out.other_violation = attempts[best].other_violation;
  out.converged = accepted[best] != 0;
  out.restart = best;
  return out;
}

/// Realize an arbitrary set of unit-distance pairs; every other pair is kept
/// below 1 - delta.
inline RealizationResult realize_pairs(int n, const std::vector<Pair>& diagonal, const RealizeOptions& opt = {}) {
  return realize_problem(RealizationProblem::from_pairs(n, diagonal, opt.delta), opt,
                         [](const std::vector<Vec3>&) { return true; });
}

struct RealizationReport {
  bool diagonal_ok = false;      // (a) diagonal pairs at 1 +- tol
  bool other_ok = false;         // (b) other pairs below 1 - tol
  bool reuleaux = false;         // (c) the point set spans a Reuleaux polyhedron
  bool skeleton_matches = false; // (d) its 1-skeleton is isomorphic to the graph
  double max_diagonal_residual = 0.0;
  double max_other_distance = 0.0;
  std::vector<std::string> notes;

  bool passed() const { return diagonal_ok && other_ok && reuleaux && skeleton_matches; }
};

/// Independent check of a candidate realization of `ig`; never throws on
/// geometric failure, every check is reported.
inline RealizationReport verify_realization(const std::vector<Vec3>& points, const generator::InvolutiveGraph& ig,
                                            double tol = 1e-6) {
  if (static_cast<int>(points.size()) != ig.size()) throw ArgumentError("verify_realization: point count differs");
  RealizationReport rep;
  auto prob = RealizationProblem::from_graph(ig, 0.0);
  for (auto [a, b] : prob.diagonal) {
    rep.max_diagonal_residual = std::max(rep.max_diagonal_residual, std::abs((points[a] - points[b]).norm() - 1.0));
  }
  for (auto [a, b] : prob.other) rep.max_other_distance = std::max(rep.max_other_distance, (points[a] - points[b]).norm());
  rep.diagonal_ok = rep.max_diagonal_residual <= tol;
  rep.other_ok = rep.max_other_distance < 1.0 - tol;
  if (!rep.diagonal_ok) rep.notes.push_back("diagonal pair off unit distance");
  if (!rep.other_ok) rep.notes.push_back("non-diagonal pair reaches the diameter");

  geometry::PointSet ps = geometry::PointSet::unlabeled(points, tol);
  try {
    auto report = geometry::classify(ps);
    rep.reuleaux = report.reuleaux;
    if (!rep.reuleaux) rep.notes.push_back("ball polyhedron is not Reuleaux");
    if (report.tight) {
      auto skeleton = geometry::one_skeleton(geometry::ball_complex(ps));
      rep.skeleton_matches = graph::are_isomorphic(skeleton, ig.g);
    }
  } catch (const std::exception& e) {
    rep.notes.push_back(std::string("classification failed: ") + e.what());
  }
  if (!rep.skeleton_matches) rep.notes.push_back("1-skeleton not isomorphic to the graph");
  return rep;
}

/// Realize an involutive graph: a converged attempt counts only if it also
/// passes verify_realization at `verify_tol`.
inline RealizationResult realize(const generator::InvolutiveGraph& ig, const RealizeOptions& opt = {}) {
  auto defects = generator::involutive_defects(ig);
  if (!defects.empty()) throw ArgumentError("realize: " + defects.front());
  if (ig.size() > kMaxRealizationOrder) throw ResourceError("realize: more than 14 vertices");
  auto prob = RealizationProblem::from_graph(ig, opt.delta);
  auto result = realize_problem(prob, opt, [&](const std::vector<Vec3>& pts) {
    return verify_realization(pts, ig, opt.verify_tol).passed();
  });
  result.verified = result.converged;
  return result;
}

}  // namespace reuleaux::realize
