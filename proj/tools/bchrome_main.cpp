#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bchrome/bcoloring.hpp"
#include "bchrome/connectivity.hpp"
#include "bchrome/errors.hpp"
#include "bchrome/generators.hpp"
#include "bchrome/graph.hpp"
#include "bchrome/graph6.hpp"
#include "bchrome/json_io.hpp"
#include "bchrome/report.hpp"

namespace {

using bchrome::Graph;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitConstruction = 3;

Graph load_first_graph(const std::string& path) {
  std::vector<Graph> graphs = bchrome::read_graph6_file(path);
  if (graphs.empty()) {
    throw bchrome::Graph6Error(path + ": no graph6 lines found");
  }
  if (graphs.size() > 1) {
    std::cerr << path << ": " << graphs.size()
              << " graphs present, using the first\n";
  }
  return graphs.front();
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  std::string text = bchrome::render_json(j);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw bchrome::Graph6Error("cannot open output file " + out_path);
  }
  out << text;
}

int cmd_analyze(const std::string& path, bool with_cut_report,
                const std::string& out_path) {
  std::vector<Graph> graphs = bchrome::read_graph6_file(path);
  if (graphs.empty()) {
    throw bchrome::Graph6Error(path + ": no graph6 lines found");
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const Graph& g : graphs) {
    nlohmann::json j =
        bchrome::analyze_report_to_json(bchrome::analyze_graph(g));
    if (with_cut_report) {
      j["cut_report"] = bchrome::cut_report_to_json(bchrome::make_cut_report(g));
    }
    rows.push_back(std::move(j));
  }
  emit(graphs.size() == 1 ? rows[0] : rows, out_path);
  return kExitOk;
}

int cmd_bcolor(const std::string& path, bool with_trace, bool fallback_exact,
               int exact_limit, const std::string& out_path) {
  Graph g = load_first_graph(path);
  try {
    bchrome::ConstructionResult result = bchrome::construct_bcoloring(g);
    nlohmann::json j{
        {"method", "construct"},
        {"coloring", bchrome::coloring_to_json(result.coloring)},
        {"certificate", bchrome::certificate_to_json(result.certificate)}};
    if (with_trace) j["trace"] = bchrome::trace_to_json(result.trace);
    emit(j, out_path);
    return kExitOk;
  } catch (const bchrome::PreconditionError& e) {
    if (fallback_exact && g.vertex_count() <= exact_limit) {
      std::cerr << "construction rejected (" << e.what()
                << "); falling back to the exact search\n";
      int phi = bchrome::exact_phi(g, exact_limit);
      emit(nlohmann::json{{"method", "exact_fallback"}, {"phi", phi}},
           out_path);
      return kExitOk;
    }
    throw;
  } catch (const bchrome::ConstructionFailure& e) {
    if (fallback_exact && g.vertex_count() <= exact_limit) {
      std::cerr << "construction failed (" << e.what()
                << "); falling back to the exact search\n";
      int phi = bchrome::exact_phi(g, exact_limit);
      emit(nlohmann::json{{"method", "exact_fallback"}, {"phi", phi}},
           out_path);
      return kExitOk;
    }
    std::cerr << "construction failure: " << e.what() << "\n";
    nlohmann::json j{{"error", "construction_failure"},
                     {"message", e.what()}};
    if (with_trace && e.trace() != nullptr) {
      j["trace"] = bchrome::trace_to_json(*e.trace());
    }
    emit(j, out_path);
    return kExitConstruction;
  }
}

int cmd_phi(const std::string& path, int limit, const std::string& out_path) {
  Graph g = load_first_graph(path);
  int phi = bchrome::exact_phi(g, limit);
  emit(nlohmann::json{{"n", g.vertex_count()}, {"phi", phi}}, out_path);
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
               const std::string& out_path) {
  Graph g = load_first_graph(graph_path);
  std::ifstream in(coloring_path);
  if (!in) {
    throw bchrome::Graph6Error("cannot open coloring file " + coloring_path);
  }
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, true);
  nlohmann::json coloring_json =
      doc.is_object() && doc.contains("coloring") ? doc["coloring"] : doc;
  bchrome::Coloring coloring = bchrome::coloring_from_json(coloring_json);
  try {
    bchrome::CertifyResult result = bchrome::certify_b_coloring(g, coloring);
    bool claimed_ok = true;
    if (doc.is_object() && doc.contains("certificate")) {
      bchrome::BCertificate claimed =
          bchrome::certificate_from_json(doc["certificate"]);
      if (static_cast<int>(claimed.dominating.size()) != coloring.k) {
        claimed_ok = false;
      } else {
        for (int c = 1; c <= coloring.k && claimed_ok; ++c) {
          int v = claimed.dominating[c - 1];
          claimed_ok = v >= 0 && v < g.vertex_count() &&
                       coloring.colors[v] == c &&
                       bchrome::is_color_dominating(g, coloring, v, coloring.k);
        }
      }
    }
    bool valid = result.ok && claimed_ok;
    nlohmann::json j{{"valid", valid}, {"k", coloring.k}};
    if (result.ok) {
      j["certificate"] = bchrome::certificate_to_json(result.certificate);
    } else {
      j["undominated_colors"] = result.undominated_colors;
    }
    if (!claimed_ok) j["claimed_certificate_valid"] = false;
    emit(j, out_path);
    return valid ? kExitOk : kExitPrecondition;
  } catch (const bchrome::PreconditionError& e) {
    emit(nlohmann::json{{"valid", false}, {"reason", e.what()}}, out_path);
    return kExitPrecondition;
  }
}

void write_graph6_lines(const std::vector<Graph>& graphs,
                        const std::string& out_path) {
  std::string text;
  for (const Graph& g : graphs) text += bchrome::emit_graph6(g) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw bchrome::Graph6Error("cannot open output file " + out_path);
  }
  out << text;
}

std::pair<int, int> lex_smallest_edge(const Graph& g) {
  auto edges = g.edges();
  if (edges.empty()) {
    throw bchrome::PreconditionError(bchrome::Precondition::bad_argument,
                                     "base graph has no edges");
  }
  return edges.front();
}

bool still_connected_without(const Graph& g, std::pair<int, int> edge) {
  std::vector<std::pair<int, int>> edges;
  for (auto e : g.edges()) {
    if (e != edge) edges.push_back(e);
  }
  Graph cut = Graph::from_edges(g.vertex_count(), edges);
  return bchrome::is_connected(cut);
}

int cmd_gen(const std::string& kind, int n, int d, std::uint64_t seed,
            int tries, int count, const std::vector<int>& edge_opt,
            const std::string& base_path, const std::string& out_path) {
  std::vector<Graph> out;
  if (kind == "petersen") {
    out.push_back(bchrome::gen_petersen());
  } else if (kind == "cycle") {
    out.push_back(bchrome::gen_cycle(n));
  } else if (kind == "random") {
    for (int c = 0; c < count; ++c) {
      bchrome::RandomRegularResult r =
          bchrome::gen_random_regular_c4_free(n, d, seed + c, tries);
      if (!r.graph) {
        std::cerr << "generation exhausted " << tries << " restarts (n=" << n
                  << ", d=" << d << ", seed=" << seed + c << ")\n";
        return kExitPrecondition;
      }
      out.push_back(*r.graph);
    }
  } else if (kind == "bridged") {
    if (!base_path.empty()) {
      Graph h = load_first_graph(base_path);
      std::pair<int, int> edge = edge_opt.size() == 2
                                     ? std::pair<int, int>{edge_opt[0], edge_opt[1]}
                                     : lex_smallest_edge(h);
      out.push_back(bchrome::gen_bridged_pair(h, edge));
    } else {
      // Random bases; only accept one whose bridging edge is not itself a
      // bridge, so the doubled graph comes out connected.
      std::uint64_t next_seed = seed;
      for (int c = 0; c < count; ++c) {
        bool made = false;
        for (int attempt = 0; attempt < tries && !made; ++attempt) {
          bchrome::RandomRegularResult r =
              bchrome::gen_random_regular_c4_free(n, d, next_seed++, tries);
          if (!r.graph || !bchrome::is_connected(*r.graph)) continue;
          std::pair<int, int> edge = lex_smallest_edge(*r.graph);
          if (!still_connected_without(*r.graph, edge)) continue;
          out.push_back(bchrome::gen_bridged_pair(*r.graph, edge));
          made = true;
        }
        if (!made) {
          std::cerr << "no usable base after " << tries << " attempts (n=" << n
                    << ", d=" << d << ")\n";
          return kExitPrecondition;
        }
      }
    }
  }
  write_graph6_lines(out, out_path);
  return kExitOk;
}

struct BatchRow {
  nlohmann::json json;
  std::string status;
};

BatchRow batch_one(const Graph& g, const std::string& file, int index,
                   bool fallback_exact, int exact_limit) {
  BatchRow row;
  nlohmann::json& j = row.json;
  j["file"] = file;
  j["index"] = index;
  j["n"] = g.vertex_count();
  bchrome::AnalyzeReport report = bchrome::analyze_graph(g);
  j["d"] = report.regular_degree ? nlohmann::json(*report.regular_degree)
                                 : nullptr;
  j["lambda"] = report.lambda ? nlohmann::json(*report.lambda) : nullptr;
  j["super_edge_connected"] = report.super_edge_connected
                                  ? nlohmann::json(*report.super_edge_connected)
                                  : nullptr;
  j["k_or_phi"] = nullptr;
  j["method"] = nullptr;
  if (report.theorem_applies) {
    try {
      bchrome::ConstructionResult result = bchrome::construct_bcoloring(g);
      j["k_or_phi"] = result.coloring.k;
      j["method"] = "construct";
      row.status = "ok";
    } catch (const bchrome::ConstructionFailure&) {
      j["method"] = "construct";
      row.status = "construction_failure";
    }
  } else if (fallback_exact && g.vertex_count() <= exact_limit) {
    j["k_or_phi"] = bchrome::exact_phi(g, exact_limit);
    j["method"] = "exact";
    row.status = "ok";
  } else {
    row.status = "precondition";
  }
  j["status"] = row.status;
  return row;
}

int cmd_batch(const std::vector<std::string>& inputs, int jobs,
              bool fallback_exact, int exact_limit,
              const std::string& out_path) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const std::string& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file() && entry.path().extension() == ".g6") {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(input);
    }
  }
  if (files.empty()) {
    std::cerr << "batch: no input files\n";
    return kExitUsage;
  }

  std::vector<std::vector<BatchRow>> per_file(files.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= files.size()) return;
      std::vector<BatchRow>& rows = per_file[i];
      try {
        std::vector<Graph> graphs = bchrome::read_graph6_file(files[i]);
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
          rows.push_back(batch_one(graphs[gi], files[i],
                                   static_cast<int>(gi), fallback_exact,
                                   exact_limit));
        }
        if (graphs.empty()) {
          BatchRow row;
          row.status = "parse_error";
          row.json = {{"file", files[i]}, {"index", 0},      {"n", nullptr},
                      {"d", nullptr},     {"lambda", nullptr},
                      {"super_edge_connected", nullptr},
                      {"k_or_phi", nullptr}, {"method", nullptr},
                      {"status", row.status}};
          rows.push_back(std::move(row));
        }
      } catch (const std::exception& e) {
        BatchRow row;
        row.status = "parse_error";
        row.json = {{"file", files[i]}, {"index", 0},      {"n", nullptr},
                    {"d", nullptr},     {"lambda", nullptr},
                    {"super_edge_connected", nullptr},
                    {"k_or_phi", nullptr}, {"method", nullptr},
                    {"status", row.status}, {"message", e.what()}};
        rows.clear();
        rows.push_back(std::move(row));
      }
    }
  };
  int thread_count = std::max(1, std::min<int>(jobs, files.size()));
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  nlohmann::json rows = nlohmann::json::array();
  int ok = 0;
  int construction_failures = 0;
  int other = 0;
  for (const auto& file_rows : per_file) {
    for (const BatchRow& row : file_rows) {
      rows.push_back(row.json);
      if (row.status == "ok") {
        ++ok;
      } else if (row.status == "construction_failure") {
        ++construction_failures;
      } else {
        ++other;
      }
    }
  }
  int total = ok + construction_failures + other;
  std::cerr << "batch: " << ok << "/" << total << " ok";
  if (construction_failures) {
    std::cerr << ", " << construction_failures << " construction failures";
  }
  if (other) std::cerr << ", " << other << " skipped or unreadable";
  std::cerr << "\n";
  emit(nlohmann::json{{"rows", rows}}, out_path);
  if (construction_failures > 0) return kExitConstruction;
  if (other > 0) return kExitPrecondition;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"b-coloring toolkit for regular C4-free graphs"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  std::string coloring_path;
  std::string base_path;
  std::string kind;
  bool with_trace = false;
  bool with_cut_report = false;
  bool fallback_exact = false;
  int exact_limit = 16;
  int gen_n = 0;
  int gen_d = 0;
  std::uint64_t seed = 0;
  int tries = 5000;
  int count = 1;
  int jobs = 1;
  std::vector<int> edge_opt;
  std::vector<std::string> batch_inputs;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "structure and connectivity report for a graph6 file");
  analyze->add_option("file", in_path, "graph6 input")->required();
  analyze->add_flag("--cut-report", with_cut_report,
                    "include the minimum-cut report (regular graphs only)");
  analyze->add_option("-o,--out", out_path, "write JSON here instead of stdout");

  CLI::App* bcolor = app.add_subcommand(
      "bcolor", "construct a (d+1)-color b-coloring with certificate");
  bcolor->add_option("file", in_path, "graph6 input")->required();
  bcolor->add_flag("--trace", with_trace, "include the construction trace");
  bcolor->add_flag("--fallback-exact", fallback_exact,
                   "fall back to the exact search on small rejected inputs");
  bcolor->add_option("--exact-limit", exact_limit,
                     "vertex cap for the exact search");
  bcolor->add_option("-o,--out", out_path, "write JSON here instead of stdout");

  CLI::App* phi = app.add_subcommand(
      "phi", "exact b-chromatic number by exhaustive search");
  phi->add_option("file", in_path, "graph6 input")->required();
  phi->add_option("--limit", exact_limit, "vertex cap for the exact search");
  phi->add_option("-o,--out", out_path, "write JSON here instead of stdout");

  CLI::App* verify = app.add_subcommand(
      "verify", "revalidate a coloring/certificate JSON against its graph");
  verify->add_option("file", in_path, "graph6 input")->required();
  verify->add_option("--coloring", coloring_path, "JSON produced by bcolor")
      ->required();
  verify->add_option("-o,--out", out_path, "write JSON here instead of stdout");

  CLI::App* gen = app.add_subcommand("gen", "emit graph6 test instances");
  gen->add_option("--kind", kind, "petersen | cycle | random | bridged")
      ->required()
      ->check(CLI::IsMember({"petersen", "cycle", "random", "bridged"}));
  gen->add_option("--n", gen_n, "vertex count (cycle, random, bridged)");
  gen->add_option("--d", gen_d, "degree (random, bridged)");
  gen->add_option("--seed", seed, "RNG seed")->envname("BCHROME_SEED");
  gen->add_option("--tries", tries, "restart budget per graph");
  gen->add_option("--count", count, "number of graphs to emit");
  gen->add_option("--edge", edge_opt, "bridging edge u v (bridged with --base)")
      ->expected(2);
  gen->add_option("--base", base_path, "base graph6 file (bridged)");
  gen->add_option("-o,--out", out_path, "write graph6 here instead of stdout");

  CLI::App* batch = app.add_subcommand(
      "batch", "analyze + construct over many files, one summary row per graph");
  batch->add_option("inputs", batch_inputs, "graph6 files or directories")
      ->required();
  batch->add_option("--jobs", jobs, "parallel workers (per file)")
      ->check(CLI::PositiveNumber);
  batch->add_flag("--fallback-exact", fallback_exact,
                  "exact search for small non-applicable graphs");
  batch->add_option("--exact-limit", exact_limit,
                    "vertex cap for the exact search");
  batch->add_option("-o,--out", out_path, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(in_path, with_cut_report, out_path);
    }
    if (app.got_subcommand(bcolor)) {
      return cmd_bcolor(in_path, with_trace, fallback_exact, exact_limit,
                        out_path);
    }
    if (app.got_subcommand(phi)) {
      return cmd_phi(in_path, exact_limit, out_path);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(in_path, coloring_path, out_path);
    }
    if (app.got_subcommand(gen)) {
      return cmd_gen(kind, gen_n, gen_d, seed, tries, count, edge_opt,
                     base_path, out_path);
    }
    if (app.got_subcommand(batch)) {
      return cmd_batch(batch_inputs, jobs, fallback_exact, exact_limit,
                       out_path);
    }
  } catch (const bchrome::Graph6Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bchrome::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const bchrome::ConstructionFailure& e) {
    std::cerr << "construction failure: " << e.what() << "\n";
    return kExitConstruction;
  }
  return kExitUsage;
}
