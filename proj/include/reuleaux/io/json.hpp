#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reuleaux/borsuk/borsuk.hpp"
#include "reuleaux/core.hpp"
#include "reuleaux/generator/involutive.hpp"
#include "reuleaux/geometry/classify.hpp"
#include "reuleaux/geometry/point_set.hpp"
#include "reuleaux/realize/realize.hpp"

namespace reuleaux::io {

using Json = nlohmann::ordered_json;

// Doubles are written in shortest round-trip form (at most 17 significant
// digits), so parse -> serialize -> parse is exact.

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << text;
}

inline Json parse(const std::string& text, const std::string& what) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw ArgumentError(what + ": empty input");
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(what + ": " + e.what());
  }
}

/// FNV-1a 64-bit hash, hex encoded.
inline std::string fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xF];
  return out;
}

inline Json vec(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

inline Vec3 to_vec(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) throw ArgumentError(what + ": point must be an array of three numbers");
  Vec3 v;
  for (int k = 0; k < 3; ++k) {
    if (!j[k].is_number()) throw ArgumentError(what + ": coordinate is not a number");
    v[k] = j[k].get<double>();
  }
  return v;
}

// ---------------------------------------------------------------------------
// Point sets: {"labels": [...], "points": [[x, y, z], ...], "tol": t}

inline Json to_json(const geometry::PointSet& ps) {
  Json j;
  j["labels"] = ps.labels();
  Json pts = Json::array();
  for (const auto& p : ps.points()) pts.push_back(vec(p));
  j["points"] = pts;
  j["tol"] = ps.tol();
  return j;
}

inline geometry::PointSet point_set_from_json(const Json& j, std::optional<double> tol_override = std::nullopt) {
  const std::string what = "point set";
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw ArgumentError(what + ": expected an object with a \"points\" array");
  }
  std::vector<Vec3> pts;
  for (const auto& p : j["points"]) pts.push_back(to_vec(p, what));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw ArgumentError(what + ": \"labels\" must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ArgumentError(what + ": labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < pts.size(); ++i) labels.push_back(std::to_string(i));
  }
  double tol = geometry::kDefaultTolerance;
  if (j.contains("tol")) {
    if (!j["tol"].is_number()) throw ArgumentError(what + ": \"tol\" must be a number");
    tol = j["tol"].get<double>();
  }
  if (tol_override) tol = *tol_override;
  return geometry::PointSet(std::move(labels), std::move(pts), tol);
}

inline geometry::PointSet load_point_set(const std::string& path, std::optional<double> tol = std::nullopt) {
  return point_set_from_json(parse(read_file(path), path), tol);
}

// ---------------------------------------------------------------------------
// Involutive graphs: {"n", "rotation", "tau", "provenance"}

inline Json to_json(const generator::InvolutiveGraph& ig) {
  Json j;
  j["n"] = ig.size();
  j["rotation"] = ig.g.rotation();
  j["tau"] = ig.tau.tau;
  Json steps = Json::array();
  for (const auto& s : ig.provenance.steps) steps.push_back({{"v", s.v}, {"x", s.x}, {"y", s.y}});
  j["provenance"] = {{"seed_rim", ig.provenance.seed_rim}, {"steps", steps}};
  return j;
}

inline std::vector<std::vector<int>> int_lists(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ArgumentError(what + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw ArgumentError(what + " must be an array of arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ArgumentError(what + " entries must be integers");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Parses a graph without verifying the involution; callers decide what to
/// do with defects.
inline generator::InvolutiveGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rotation") || !j.contains("tau")) {
    throw ArgumentError("graph: expected an object with \"rotation\" and \"tau\"");
  }
  generator::InvolutiveGraph ig;
  auto rotation = int_lists(j["rotation"], "graph: rotation");
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<int>() != static_cast<int>(rotation.size()))) {
    throw ArgumentError("graph: \"n\" does not match the rotation");
  }
  ig.g = graph::EmbeddedGraph::from_rotation(rotation);
  ig.tau.tau = int_lists(j["tau"], "graph: tau");
  if (static_cast<int>(ig.tau.tau.size()) != ig.size()) throw ArgumentError("graph: tau has the wrong length");
  for (const auto& face : ig.tau.tau) {
    for (int u : face) {
      if (u < 0 || u >= ig.size()) throw ArgumentError("graph: tau vertex out of range");
    }
  }
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    ig.provenance.seed_rim = p.value("seed_rim", 0);
    if (p.contains("steps")) {
      for (const auto& s : p["steps"]) ig.provenance.steps.push_back({s.at("v").get<int>(), s.at("x").get<int>(), s.at("y").get<int>()});
    }
  }
  return ig;
}

inline generator::InvolutiveGraph load_graph(const std::string& path) {
  return graph_from_json(parse(read_file(path), path));
}

// ---------------------------------------------------------------------------
// Reports

inline Json to_json(const geometry::ClassificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["diameter_count"] = r.diameter_count;
  j["extremal"] = r.extremal;
  j["critical"] = r.critical;
  j["tight"] = r.tight;
  j["vertices_equal_points"] = r.vertices_equal_points;
  j["skeleton_simple"] = r.skeleton_simple;
  j["skeleton_planar"] = r.skeleton_planar;
  j["skeleton_connectivity"] = r.skeleton_connectivity;
  j["skeleton_cut"] = r.skeleton_cut;
  j["standard"] = r.standard;
  j["reuleaux"] = r.reuleaux;
  j["strongly_critical"] = r.strongly_critical;
  j["single_contact_points"] = r.single_contact_points;
  return j;
}

inline Json to_json(const borsuk::BorsukReport& r) {
  Json j;
  j["a"] = r.a;
  j["partition"] = r.partition;
  j["class_diameters"] = r.class_diameters;
  j["critical_subset"] = r.critical_subset ? Json(*r.critical_subset) : Json(nullptr);
  return j;
}

inline Json diameter_json(const geometry::PointSet& ps) {
  auto d = geometry::diameter(ps);
  Json pairs = Json::array();
  for (auto [a, b] : d.pairs) pairs.push_back({ps.label(a), ps.label(b)});
  return {{"value", d.value}, {"pairs", pairs}};
}

inline Json to_json(const realize::RealizationReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["diagonal_ok"] = r.diagonal_ok;
  j["other_ok"] = r.other_ok;
  j["reuleaux"] = r.reuleaux;
  j["skeleton_matches"] = r.skeleton_matches;
  j["max_diagonal_residual"] = r.max_diagonal_residual;
  j["max_other_distance"] = r.max_other_distance;
  j["notes"] = r.notes;
  return j;
}

inline Json points_json(const std::vector<Vec3>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(vec(p));
  return a;
}

inline Json to_json(const realize::RealizationResult& r) {
  Json j;
  j["converged"] = r.converged;
  j["verified"] = r.verified;
  j["restart"] = r.restart;
  j["attempts"] = r.attempts;
  j["diagonal_residual"] = r.diagonal_residual;
  j["other_violation"] = r.other_violation;
  j["points"] = points_json(r.points);
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(points_json(s));
  j["solutions"] = sols;
  return j;
}

inline Json to_json(const borsuk::PartitionAssignment& a) {
  Json j;
  j["v"] = a.v;
  j["eps"] = a.eps;
  j["eps1"] = a.eps1;
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.part.size(); ++i) {
    Json row = {{"part", a.part[i]}, {"rule", borsuk::rule_name(a.rule[i])}};
    if (a.fallback[i]) row["fallback"] = true;
    if (a.tie[i]) row["tie"] = true;
    rows.push_back(row);
  }
  j["assignments"] = rows;
  return j;
}

/// Query points: either a bare array of [x, y, z] or {"points": [...]}.
inline std::vector<Vec3> queries_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("points") ? j["points"] : j;
  if (!arr.is_array()) throw ArgumentError("queries: expected an array of points");
  std::vector<Vec3> out;
  for (const auto& p : arr) out.push_back(to_vec(p, "queries"));
  return out;
}

}  // namespace reuleaux::io
