// Acceptance gate for the shipping criteria. Prints exactly one
// [PASS]/[FAIL] line per criterion and exits with the number of failures.
// argv[1] is the CLI binary path (needed by the determinism criterion).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bchrome/bcoloring.hpp"
#include "bchrome/connectivity.hpp"
#include "bchrome/errors.hpp"
#include "bchrome/generators.hpp"
#include "bchrome/graph.hpp"
#include "bchrome/graph6.hpp"
#include "bchrome/matching.hpp"
#include "bchrome/report.hpp"
#include "test_support.hpp"

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Gate {
  int failures = 0;

  void report(int number, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

// Everything criterion 2 produces that later criteria re-examine.
struct ConstructedInstance {
  int d = 0;
  bchrome::Graph graph;
  bchrome::ConstructionTrace trace;
};

// (n, m) of every C4-free graph any generator produced during this run.
struct C4FreeRegistry {
  std::vector<std::pair<int, long long>> entries;
  void add(const bchrome::Graph& g) {
    entries.emplace_back(g.vertex_count(), static_cast<long long>(g.edge_count()));
  }
};

bool graph_connected_without_edge(const bchrome::Graph& g,
                                  std::pair<int, int> edge) {
  std::vector<std::pair<int, int>> remaining;
  for (auto e : g.edges()) {
    if (e != edge) remaining.push_back(e);
  }
  return bchrome::is_connected(
      bchrome::Graph::from_edges(g.vertex_count(), remaining));
}

}  // namespace

// ---- criterion 1: the two numbers stated for the Petersen graph ----------

void criterion_petersen(Gate& gate) {
  bchrome::Graph pet = bchrome::gen_petersen();
  std::vector<std::string> problems;

  auto start = Clock::now();
  int phi = bchrome::exact_phi(pet);
  double phi_seconds = seconds_since(start);

  if (phi != 3) problems.push_back("exact_phi = " + std::to_string(phi));
  if (phi_seconds >= 10.0) {
    problems.push_back("phi search took " + std::to_string(phi_seconds) + " s");
  }
  if (!bchrome::is_super_edge_connected(pet)) {
    problems.push_back("not reported super-edge-connected");
  }
  auto [lambda, cut] = bchrome::edge_connectivity(pet);
  if (lambda != 3) problems.push_back("lambda = " + std::to_string(lambda));
  if (bchrome::has_four_cycle(pet)) problems.push_back("reported a 4-cycle");

  if (problems.empty()) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "Petersen: phi = 3 (%.2f s), super-edge-connected, "
                  "lambda = 3, no 4-cycle",
                  phi_seconds);
    gate.report(1, true, buf);
  } else {
    std::string detail = "Petersen:";
    for (const auto& p : problems) detail += " " + p + ";";
    gate.report(1, false, detail);
  }
}

// ---- criterion 2: the construction at desk scale -------------------------

void criterion_construction(Gate& gate,
                            std::vector<ConstructedInstance>& constructed,
                            C4FreeRegistry& registry) {
  struct Request {
    int n_h;
    int d;
    std::uint64_t seed;
  };
  std::vector<Request> requests;
  for (int n_h = 15; n_h <= 40; ++n_h) {
    requests.push_back({n_h, 4, 10000 + static_cast<std::uint64_t>(n_h) * 97});
  }
  for (int n_h = 15; n_h <= 30; ++n_h) {
    requests.push_back({n_h, 4, 50000 + static_cast<std::uint64_t>(n_h) * 131});
  }
  // 5-regular C4-free bases only become reachable by random search around
  // n = 36; below that the edge bound leaves too little slack.
  for (int n_h = 36; n_h <= 40; n_h += 2) {
    for (std::uint64_t wave : {90000ULL, 130000ULL, 170000ULL, 210000ULL}) {
      requests.push_back(
          {n_h, 5, wave + static_cast<std::uint64_t>(n_h) * 211});
    }
  }

  int ok_count = 0;
  int generation_misses = 0;
  int construction_failures = 0;
  double worst_seconds = 0.0;
  std::vector<std::string> problems;

  for (const Request& req : requests) {
    auto inst = test_support::bridged_instance(req.n_h, req.d, req.seed,
                                               req.d == 5 ? 3000 : 400);
    if (!inst) {
      ++generation_misses;
      problems.push_back("no base for n_h=" + std::to_string(req.n_h) +
                         " d=" + std::to_string(req.d));
      continue;
    }
    registry.add(inst->base);
    registry.add(inst->doubled);
    try {
      auto start = Clock::now();
      bchrome::ConstructionResult result =
          bchrome::construct_bcoloring(inst->doubled);
      double elapsed = seconds_since(start);
      worst_seconds = std::max(worst_seconds, elapsed);

      bool good = result.coloring.k == req.d + 1 && result.coloring.total() &&
                  elapsed < 1.0;
      auto recheck =
          bchrome::certify_b_coloring(inst->doubled, result.coloring);
      good = good && recheck.ok;
      if (good) {
        ++ok_count;
        constructed.push_back(
            {req.d, inst->doubled, std::move(result.trace)});
      } else {
        problems.push_back("n=" + std::to_string(inst->doubled.vertex_count()) +
                           " d=" + std::to_string(req.d) +
                           (recheck.ok ? " slow or wrong k" : " certificate rejected"));
      }
    } catch (const bchrome::ConstructionFailure& e) {
      ++construction_failures;
      problems.push_back("construction failure at n_h=" +
                         std::to_string(req.n_h) + ": " + e.what());
    }
  }

  bool ok = ok_count >= 50 && construction_failures == 0 &&
            generation_misses == 0 && worst_seconds < 1.0;
  char buf[240];
  std::snprintf(buf, sizeof(buf),
                "%d/%zu doubled instances (d=4 and d=5, n 30..80) colored with "
                "d+1 colors and revalidated, %d construction failures, "
                "worst %.3f s",
                ok_count, requests.size(), construction_failures,
                worst_seconds);
  std::string detail = buf;
  if (!ok) {
    for (std::size_t i = 0; i < problems.size() && i < 4; ++i) {
      detail += "; " + problems[i];
    }
  }
  gate.report(2, ok, detail);
}

// ---- criterion 3: exact oracle on theorem-applicable small graphs --------

void criterion_small_oracle(Gate& gate, C4FreeRegistry& registry) {
  // No d-regular C4-free graph with d >= 4 and a nontrivial minimum cut fits
  // in 16 vertices (both cut sides need d+4 vertices and the n = 16, d = 4
  // case forces more internal edges than the C4-free bound allows), so the
  // sweep is expected to find applicable instances only above this range.
  // The scan still runs for real and would test any instance it surfaced.
  int generated = 0;
  int applicable = 0;
  int disagreements = 0;
  for (int d : {4, 5}) {
    for (int n = d * d - d + 1; n <= 16; ++n) {
      if ((n * d) % 2 != 0) continue;
      for (std::uint64_t seed = 0; seed < 150; ++seed) {
        bchrome::RandomRegularResult r =
            bchrome::gen_random_regular_c4_free(n, d, seed, 150);
        if (!r.graph) continue;
        ++generated;
        registry.add(*r.graph);
        bchrome::AnalyzeReport report = bchrome::analyze_graph(*r.graph);
        if (!report.theorem_applies) continue;
        ++applicable;
        if (bchrome::exact_phi(*r.graph) != d + 1) ++disagreements;
      }
    }
  }
  bool ok = disagreements == 0;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "n <= 16 sweep: %d regular C4-free graphs generated, %d "
                "theorem-applicable, %d oracle disagreements",
                generated, applicable, disagreements);
  gate.report(3, ok, buf);
}

// ---- criterion 4: matching hypotheses guarantee perfect matchings --------

void criterion_matching_suite(Gate& gate) {
  std::mt19937_64 rng(20260824);
  int accepted = 0;
  int perfect = 0;
  long long draws = 0;
  const long long draw_cap = 2000000;
  while (accepted < 1000 && draws < draw_cap) {
    ++draws;
    bchrome::BipartiteInstance inst = test_support::random_bipartite_instance(rng);
    if (!bchrome::lemma2_hypotheses_hold(inst)) continue;
    ++accepted;
    if (bchrome::perfect_matching_or_fail(inst).success) ++perfect;
  }
  bool ok = accepted >= 1000 && perfect == accepted;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "%d/%d hypothesis-satisfying bipartite instances admit a "
                "perfect matching (%lld draws)",
                perfect, accepted, draws);
  gate.report(4, ok, buf);
}

// ---- criterion 5: flow-based lambda against the exhaustive oracle --------

void criterion_connectivity_oracle(Gate& gate) {
  int compared = 0;
  int mismatches = 0;
  auto compare = [&](const bchrome::Graph& g) {
    ++compared;
    if (bchrome::edge_connectivity(g).first !=
        bchrome::brute_force_edge_connectivity(g)) {
      ++mismatches;
    }
  };

  compare(bchrome::gen_cycle(5));
  compare(bchrome::gen_cycle(6));
  for (int k : {4, 5}) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u) {
      for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    }
    compare(bchrome::Graph::from_edges(k, edges));
  }
  compare(bchrome::gen_petersen());

  // Bridged pairs inside the oracle's stated range (n <= 14); the doubling
  // generator only accepts regular C4-free bases, so cycles serve here.
  compare(bchrome::gen_bridged_pair(bchrome::gen_cycle(5), {0, 1}));
  compare(bchrome::gen_bridged_pair(bchrome::gen_cycle(6), {0, 1}));
  compare(bchrome::gen_bridged_pair(bchrome::gen_cycle(7), {0, 1}));

  // The n = 20 Petersen pair exceeds the oracle range; check it against the
  // explicit cross cut (upper bound 2) and a bridge scan (lower bound 2).
  bchrome::Graph pet_pair =
      bchrome::gen_bridged_pair(bchrome::gen_petersen(), {0, 1});
  auto [pair_lambda, pair_cut] = bchrome::edge_connectivity(pet_pair);
  bool pair_ok = pair_lambda == 2 && pair_cut.size() == 2;
  for (auto e : pet_pair.edges()) {
    if (!graph_connected_without_edge(pet_pair, e)) pair_ok = false;
  }

  std::mt19937_64 rng(5150);
  int random_count = 0;
  while (random_count < 220) {
    int n = 2 + static_cast<int>(rng() % 9);  // 2..10
    int extra = static_cast<int>(rng() % (n + 3));
    bchrome::Graph g = test_support::random_connected_graph(n, extra, rng);
    ++random_count;
    compare(g);
  }

  bool ok = mismatches == 0 && pair_ok && compared >= 200;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "%d fixture+random graphs: flow lambda == exhaustive lambda "
                "(%d mismatches); Petersen pair lambda = 2 confirmed",
                compared, mismatches);
  gate.report(5, ok, buf);
}

// ---- criterion 6: proof-shaped invariants recomputed from the traces -----

void criterion_trace_invariants(Gate& gate,
                                const std::vector<ConstructedInstance>& runs) {
  int checked = 0;
  std::vector<std::string> problems;

  for (const ConstructedInstance& run : runs) {
    ++checked;
    const bchrome::ConstructionTrace& t = run.trace;
    const bchrome::Graph& g = run.graph;
    int d = run.d;
    auto note = [&](const std::string& what) {
      problems.push_back("n=" + std::to_string(g.vertex_count()) +
                         " d=" + std::to_string(d) + ": " + what);
    };

    for (const auto& comp : t.decomposition.components) {
      if (comp.size() < static_cast<std::size_t>(d + 4)) {
        note("component below d+4");
      }
    }

    for (int side = 0; side < 2; ++side) {
      const auto& boundary = t.decomposition.boundary[side];
      int in_boundary = 0;
      for (int u : g.neighbors(t.anchors[side])) {
        if (std::binary_search(boundary.begin(), boundary.end(), u)) {
          ++in_boundary;
        }
      }
      if (in_boundary > 2) note("anchor with >2 boundary neighbors");
    }

    for (std::size_t i = 0; i < t.z_list.size(); ++i) {
      std::size_t pos = t.y_order.size() - t.z_list.size() + i;
      if (t.y_cross_edges[pos] > 1) note("chosen z with e_z > 1");
    }

    auto disjoint = [&](const std::vector<bchrome::MatchingStep>& steps,
                        const char* label) {
      std::set<int> seen;
      for (const auto& step : steps) {
        for (int v : step.candidates) {
          if (!seen.insert(v).second) {
            note(std::string(label) + " neighborhoods overlap");
            return;
          }
        }
      }
    };
    disjoint(t.stage1, "stage-1");
    disjoint(t.stage2, "stage-2");
  }

  bool ok = problems.empty() && checked >= 50;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "%d construction traces: component sizes >= d+4, anchors with "
                "<= 2 boundary neighbors, e_z <= 1, disjoint step "
                "neighborhoods",
                checked);
  std::string detail = buf;
  if (!problems.empty()) detail += "; " + problems.front();
  gate.report(6, ok, detail);
}

// ---- criterion 7: the C4-free edge bound on everything we generated ------

void criterion_edge_bound(Gate& gate, const C4FreeRegistry& registry) {
  int violations = 0;
  for (auto [n, m] : registry.entries) {
    if (!bchrome::c4_edge_bound_holds(n, m)) ++violations;
  }
  bool ok = violations == 0 && !registry.entries.empty();
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "%zu generated C4-free graphs satisfy m <= n/4*(1+sqrt(4n-3)) "
                "(%d violations)",
                registry.entries.size(), violations);
  gate.report(7, ok, buf);
}

// ---- criterion 8: byte determinism of the CLI ----------------------------

#ifndef _WIN32
int run_quiet(const std::string& cmd) {
  int status = std::system((cmd + " 2>/dev/null").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void criterion_determinism(Gate& gate, const char* cli) {
  if (!cli) {
    gate.report(8, false, "CLI binary path not supplied to the gate");
    return;
  }
  fs::path dir = fs::temp_directory_path() / "bchrome_acceptance_batch";
  fs::create_directories(dir);
  auto inst = test_support::bridged_instance(18, 4, 1000, 300);
  if (!inst) {
    gate.report(8, false, "could not generate the batch fixture");
    return;
  }
  {
    std::ofstream out(dir / "a_bridged.g6");
    out << bchrome::emit_graph6(inst->doubled) << "\n";
  }
  {
    std::ofstream out(dir / "b_small.g6");
    out << bchrome::emit_graph6(bchrome::gen_cycle(5)) << "\n"
        << bchrome::emit_graph6(bchrome::gen_petersen()) << "\n";
  }
  fs::path out1 = fs::temp_directory_path() / "bchrome_acc_batch1.json";
  fs::path out2 = fs::temp_directory_path() / "bchrome_acc_batch2.json";
  fs::path gen1 = fs::temp_directory_path() / "bchrome_acc_gen1.g6";
  fs::path gen2 = fs::temp_directory_path() / "bchrome_acc_gen2.g6";
  std::string batch_args = std::string(cli) +
                           " batch --jobs 1 --fallback-exact " + dir.string();
  std::string gen_args =
      std::string(cli) + " gen --kind random --n 20 --d 4 --seed 9 --count 3";
  int rc1 = run_quiet(batch_args + " -o " + out1.string());
  int rc2 = run_quiet(batch_args + " -o " + out2.string());
  int rg1 = run_quiet(gen_args + " -o " + gen1.string());
  int rg2 = run_quiet(gen_args + " -o " + gen2.string());

  std::string batch_bytes = slurp(out1);
  std::string gen_bytes = slurp(gen1);
  bool ok = rc1 == 0 && rc2 == 0 && rg1 == 0 && rg2 == 0 &&
            !batch_bytes.empty() && batch_bytes == slurp(out2) &&
            !gen_bytes.empty() && gen_bytes == slurp(gen2);
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "two seeded --jobs 1 batch runs and two seeded gen runs are "
                "byte-identical (%zu + %zu bytes)",
                batch_bytes.size(), gen_bytes.size());
  gate.report(8, ok,
              ok ? std::string(buf)
                 : "CLI outputs differ between identical runs");

  fs::remove_all(dir);
  for (const auto& p : {out1, out2, gen1, gen2}) fs::remove(p);
}
#else
void criterion_determinism(Gate& gate, const char*) {
  gate.report(8, false, "subprocess runner unavailable on this platform");
}
#endif

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : std::getenv("BCHROME_BIN");
  Gate gate;
  std::vector<ConstructedInstance> constructed;
  C4FreeRegistry registry;

  criterion_petersen(gate);
  criterion_construction(gate, constructed, registry);
  criterion_small_oracle(gate, registry);
  criterion_matching_suite(gate);
  criterion_connectivity_oracle(gate);
  criterion_trace_invariants(gate, constructed);
  criterion_edge_bound(gate, registry);
  criterion_determinism(gate, cli);

  if (gate.failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criteria failed\n", gate.failures);
  }
  return gate.failures;
}
