// Command-line front end: analyze, generate, realize, borsuk, partition,
// pipeline, export-off. Exit codes: 0 ok, 1 property failure, 2 input error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "reuleaux/borsuk/borsuk.hpp"
#include "reuleaux/generator/involutive.hpp"
#include "reuleaux/geometry/classify.hpp"
#include "reuleaux/io/json.hpp"
#include "reuleaux/io/off.hpp"
#include "reuleaux/pipeline.hpp"
#include "reuleaux/realize/realize.hpp"

namespace fs = std::filesystem;
using reuleaux::io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

struct Common {
  std::uint64_t seed = 0;
  int threads = 1;
  std::string manifest;
  std::string out;
  std::optional<double> tol;
};

struct Manifest {
  std::string command;
  explicit Manifest(std::string cmd) : command(std::move(cmd)) {}
  std::map<std::string, std::string> inputs;  // path -> FNV-1a hash
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void input(const std::string& path) { inputs[path] = reuleaux::io::fnv1a(reuleaux::io::read_file(path)); }

  Json to_json(const Common& c, Json extra = Json::object()) const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["tol"] = c.tol ? Json(*c.tol) : Json(nullptr);
    j["seed"] = c.seed;
    j["threads"] = c.threads;
    j["version"] = "0.1.0";
    j["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& [k, v] : extra.items()) j[k] = v;
    return j;
  }
};

void emit(const Json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    reuleaux::io::write_file(out, text);
  }
}

void write_manifest(const Common& c, const Manifest& m, Json extra = Json::object()) {
  if (!c.manifest.empty()) reuleaux::io::write_file(c.manifest, m.to_json(c, std::move(extra)).dump(2) + "\n");
}

reuleaux::realize::RealizeOptions realize_options(const Common& c, int restarts) {
  reuleaux::realize::RealizeOptions opt;
  opt.seed = c.seed;
  opt.threads = c.threads;
  opt.restarts = restarts;
  return opt;
}

int cmd_analyze(const Common& c, const std::string& path) {
  Manifest m{"analyze"};
  m.input(path);
  auto ps = reuleaux::io::load_point_set(path, c.tol);
  Json j;
  j["diameter"] = reuleaux::io::diameter_json(ps);
  if (ps.size() >= 4) {
    j["classification"] = reuleaux::io::to_json(reuleaux::geometry::classify(ps));
  } else {
    j["classification"] = nullptr;
  }
  j["borsuk"] = reuleaux::io::to_json(reuleaux::borsuk::borsuk_number(ps));
  emit(j, c.out);
  write_manifest(c, m);
  return kOk;
}

int cmd_generate(const Common& c, int max_n, const std::string& dir, bool verify) {
  Manifest m{"generate"};
  auto graphs = reuleaux::generator::enumerate({max_n, verify});
  fs::create_directories(dir);
  std::map<int, int> counts;
  Json files = Json::array();
  for (const auto& ig : graphs) {
    int k = counts[ig.size()]++;
    std::string name = "graph_n" + std::to_string(ig.size()) + "_" + std::to_string(k) + ".json";
    reuleaux::io::write_file((fs::path(dir) / name).string(), reuleaux::io::to_json(ig).dump(2) + "\n");
    Json steps = Json::array();
    for (const auto& s : ig.provenance.steps) steps.push_back({s.v, s.x, s.y});
    files.push_back({{"file", name}, {"n", ig.size()}, {"seed_rim", ig.provenance.seed_rim}, {"steps", steps}});
  }
  Json count_json = Json::object();
  for (auto [n, k] : counts) count_json[std::to_string(n)] = k;
  Json summary = {{"max_n", max_n}, {"total", graphs.size()}, {"counts", count_json}, {"graphs", files}};
  reuleaux::io::write_file((fs::path(dir) / "manifest.json").string(), m.to_json(c, summary).dump(2) + "\n");
  emit(summary, c.out.empty() ? "" : c.out);
  write_manifest(c, m, summary);
  return kOk;
}

int cmd_realize(const Common& c, const std::string& graph_path, int restarts, double verify_tol, const std::string& off) {
  Manifest m{"realize"};
  m.input(graph_path);
  auto ig = reuleaux::io::load_graph(graph_path);
  auto opt = realize_options(c, restarts);
  opt.verify_tol = verify_tol;
  auto res = reuleaux::realize::realize(ig, opt);
  Json j = reuleaux::io::to_json(res);
  j["verification"] = reuleaux::io::to_json(reuleaux::realize::verify_realization(res.points, ig, verify_tol));
  if (res.converged) {
    auto ps = reuleaux::geometry::PointSet::unlabeled(res.points, verify_tol);
    j["point_set"] = reuleaux::io::to_json(ps);
    if (!off.empty()) {
      reuleaux::io::write_file(off, reuleaux::io::to_off(reuleaux::io::boundary_mesh(reuleaux::geometry::ball_complex(ps))));
    }
  }
  emit(j, c.out);
  write_manifest(c, m);
  return res.converged ? kOk : kPropertyFailure;
}

int cmd_borsuk(const Common& c, const std::string& path) {
  Manifest m{"borsuk"};
  m.input(path);
  auto ps = reuleaux::io::load_point_set(path, c.tol);
  emit(reuleaux::io::to_json(reuleaux::borsuk::borsuk_number(ps)), c.out);
  write_manifest(c, m);
  return kOk;
}

int cmd_partition(const Common& c, const std::string& points, const std::string& vertex, double eps,
                  const std::string& queries) {
  Manifest m{"partition"};
  m.input(points);
  m.input(queries);
  auto ps = reuleaux::io::load_point_set(points, c.tol);
  auto q = reuleaux::io::queries_from_json(reuleaux::io::parse(reuleaux::io::read_file(queries), queries));
  reuleaux::borsuk::ReuleauxBody body(ps);
  emit(reuleaux::io::to_json(reuleaux::borsuk::critical_partition(body, vertex, eps, q)), c.out);
  write_manifest(c, m);
  return kOk;
}

int cmd_pipeline(const Common& c, int max_n, const std::string& graph_dir, int restarts) {
  Manifest m{"pipeline"};
  std::vector<reuleaux::generator::InvolutiveGraph> graphs;
  std::vector<std::string> names;
  if (!graph_dir.empty()) {
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(graph_dir)) {
      if (e.path().extension() == ".json" && e.path().filename() != "manifest.json") paths.push_back(e.path());
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      m.input(p.string());
      graphs.push_back(reuleaux::io::load_graph(p.string()));
      names.push_back(p.filename().string());
    }
  } else {
    graphs = reuleaux::generator::enumerate(max_n);
    for (std::size_t i = 0; i < graphs.size(); ++i) names.push_back("#" + std::to_string(i));
  }
  auto summary = reuleaux::run_pipeline(graphs, realize_options(c, restarts));
  Json rows = Json::array();
  std::cerr << "graph                 n  realized  GHS  a  subset  reuleaux  status\n";
  for (const auto& r : summary.rows) {
    rows.push_back({{"graph", names[r.index]},
                    {"n", r.n},
                    {"involutive", r.involutive},
                    {"realized", r.realized},
                    {"extremal", r.extremal},
                    {"tight_and_vertices", r.tight_and_vertices},
                    {"a", r.a},
                    {"critical_subset", r.subset_present},
                    {"subset_reuleaux", r.subset_reuleaux},
                    {"passed", r.passed()},
                    {"problems", r.problems}});
    std::string name = names[r.index];
    name.resize(20, ' ');
    std::cerr << name << ' ' << (r.n < 10 ? " " : "") << r.n << "  " << (r.realized ? "yes     " : "no      ")
              << "  " << (r.ghs_agrees() ? "ok " : "BAD") << "  " << r.a << "  " << (r.subset_present ? "yes   " : "no    ")
              << "  " << (r.subset_reuleaux ? "yes     " : "no      ") << "  " << (r.passed() ? "pass" : "FAIL") << '\n';
    for (const auto& p : r.problems) std::cerr << "    " << p << '\n';
  }
  Json j = {{"graphs", graphs.size()}, {"realized", summary.realized}, {"failures", summary.failures}, {"rows", rows}};
  emit(j, c.out);
  write_manifest(c, m, {{"graphs", graphs.size()}, {"failures", summary.failures}});
  return summary.passed() ? kOk : kPropertyFailure;
}

int cmd_export_off(const Common& c, const std::string& points, double step) {
  Manifest m{"export-off"};
  m.input(points);
  auto ps = reuleaux::io::load_point_set(points, c.tol);
  auto mesh = reuleaux::io::boundary_mesh(reuleaux::geometry::ball_complex(ps), step);
  std::string off = reuleaux::io::to_off(mesh);
  if (c.out.empty() || c.out == "-") {
    std::cout << off;
  } else {
    reuleaux::io::write_file(c.out, off);
  }
  write_manifest(c, m);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diameter graphs, ball polyhedra and involutive polyhedral graphs"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--seed", c.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--threads", c.threads, "Worker threads for realization restarts")
      ->envname("REULEAUX_THREADS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--manifest", c.manifest, "Write a run manifest (inputs, hashes, settings, wall time)");

  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", c.out, "Output file (default stdout)"); };
  auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", c.tol, "Relative tolerance (overrides the file)"); };

  std::string path, graph_path, vertex, queries, off, graph_dir, out_dir;
  int max_n = 8, restarts = 32;
  double eps = 0.05, verify_tol = 1e-6, step = 2.0;
  bool no_verify = false;

  auto* analyze = app.add_subcommand("analyze", "Classify a point set and compute its Borsuk number");
  analyze->add_option("points", path, "Point-set JSON")->required();
  add_out(analyze);
  add_tol(analyze);

  auto* generate = app.add_subcommand("generate", "Enumerate involutive polyhedral graphs");
  generate->add_option("--max-n", max_n, "Largest vertex count (at most 14)")->required();
  generate->add_option("--out-dir,--dir", out_dir, "Directory for graph files and manifest")->required();
  generate->add_flag("--no-verify", no_verify, "Skip the criticality check of each output");
  generate->add_option("-o,--out", c.out, "Summary output (default stdout)");

  auto* realize = app.add_subcommand("realize", "Realize a graph as the vertex set of a Reuleaux polyhedron");
  realize->add_option("--graph", graph_path, "Graph JSON")->required();
  realize->add_option("--restarts", restarts, "Solver restarts")->capture_default_str();
  realize->add_option("--tol", verify_tol, "Verification tolerance")->capture_default_str();
  realize->add_option("--off", off, "Also write the boundary mesh as OFF");
  add_out(realize);

  auto* borsuk = app.add_subcommand("borsuk", "Borsuk number and strongly critical subset");
  borsuk->add_option("--points", path, "Point-set JSON")->required();
  add_out(borsuk);
  add_tol(borsuk);

  auto* partition = app.add_subcommand("partition", "Critical partition of a Reuleaux polyhedron");
  partition->add_option("--points", path, "Reuleaux vertex set JSON")->required();
  partition->add_option("--vertex", vertex, "Label of the distinguished vertex")->required();
  partition->add_option("--eps", eps, "Diameter bound of part 1")->capture_default_str();
  partition->add_option("--queries", queries, "Query points JSON")->required();
  add_out(partition);
  add_tol(partition);

  auto* pipeline = app.add_subcommand("pipeline", "Generate, realize, verify and check the equivalences");
  pipeline->add_option("--max-n", max_n, "Largest vertex count")->capture_default_str();
  pipeline->add_option("--graphs", graph_dir, "Run on graph files in this directory instead of enumerating");
  pipeline->add_option("--restarts", restarts, "Solver restarts")->capture_default_str();
  add_out(pipeline);

  auto* export_off = app.add_subcommand("export-off", "Boundary mesh of B(V) as OFF");
  export_off->add_option("--points", path, "Point-set JSON")->required();
  export_off->add_option("--step", step, "Arc sampling step in degrees")->capture_default_str();
  add_out(export_off);
  add_tol(export_off);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(c, path);
    if (*generate) return cmd_generate(c, max_n, out_dir, !no_verify);
    if (*realize) return cmd_realize(c, graph_path, restarts, verify_tol, off);
    if (*borsuk) return cmd_borsuk(c, path);
    if (*partition) return cmd_partition(c, path, vertex, eps, queries);
    if (*pipeline) return cmd_pipeline(c, max_n, graph_dir, restarts);
    if (*export_off) return cmd_export_off(c, path, step);
  } catch (const reuleaux::ArgumentError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const reuleaux::ResourceError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const reuleaux::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "property failure: " << e.what() << '\n';
    return kPropertyFailure;
  }
  return kOk;
}
