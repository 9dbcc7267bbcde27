#include "bchrome/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "bchrome/errors.hpp"

namespace bchrome {

Graph gen_petersen() {
  return Graph::from_edges(10, {{0, 1},
                                {1, 2},
                                {2, 3},
                                {3, 4},
                                {0, 4},
                                {5, 7},
                                {7, 9},
                                {9, 6},
                                {6, 8},
                                {8, 5},
                                {0, 5},
                                {1, 6},
                                {2, 7},
                                {3, 8},
                                {4, 9}});
}

Graph gen_cycle(int n) {
  if (n < 3) {
    throw PreconditionError(Precondition::bad_argument,
                            "cycle needs at least 3 vertices");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

namespace {

// Would adding edge (u, v) close a 4-cycle? The graph is C4-free so far, so
// any new C4 must run through the new edge: u - b - a - v with {a, b} already
// an edge.
bool edge_creates_c4(const std::vector<std::vector<int>>& adj, int u, int v) {
  for (int b : adj[u]) {
    if (b == v) continue;
    for (int a : adj[v]) {
      if (a == u || a == b) continue;
      if (std::find(adj[b].begin(), adj[b].end(), a) != adj[b].end()) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

RandomRegularResult gen_random_regular_c4_free(int n, int d,
                                               std::uint64_t seed,
                                               int max_tries) {
  if (n <= 0 || d < 0 || d >= n) {
    throw PreconditionError(Precondition::bad_argument,
                            "need 0 <= d < n and n > 0");
  }
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw PreconditionError(Precondition::bad_argument, "n*d must be even");
  }
  if (max_tries < 1) {
    throw PreconditionError(Precondition::bad_argument, "max_tries must be >= 1");
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= max_tries; ++attempt) {
    // Stub multiset: vertex v appears once per unfilled adjacency slot,
    // maintained in ascending vertex order.
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < d; ++i) stubs.push_back(v);
    }
    std::vector<std::vector<int>> adj(n);
    std::vector<std::pair<int, int>> edges;
    bool dead_end = false;
    while (!stubs.empty()) {
      int u = stubs.front();
      std::vector<size_t> candidates;
      for (size_t i = 1; i < stubs.size(); ++i) {
        int v = stubs[i];
        if (v == u) continue;
        if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) {
          continue;
        }
        if (edge_creates_c4(adj, u, v)) continue;
        candidates.push_back(i);
      }
      if (candidates.empty()) {
        dead_end = true;
        break;
      }
      size_t pick = candidates[rng() % candidates.size()];
      int v = stubs[pick];
      adj[u].push_back(v);
      adj[v].push_back(u);
      edges.emplace_back(u, v);
      stubs.erase(stubs.begin() + pick);
      stubs.erase(stubs.begin());
    }
    if (dead_end) continue;
    Graph g = Graph::from_edges(n, edges);
    if (has_four_cycle(g)) continue;  // cannot happen; full check anyway
    return {std::move(g), attempt};
  }
  return {std::nullopt, max_tries};
}

Graph gen_bridged_pair(const Graph& h, std::pair<int, int> edge) {
  auto [u, v] = edge;
  int n = h.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n || !h.has_edge(u, v)) {
    throw PreconditionError(Precondition::bad_argument,
                            "edge not present in base graph");
  }
  if (!regular_degree(h).has_value()) {
    throw PreconditionError(Precondition::not_regular,
                            "base graph must be regular");
  }
  if (has_four_cycle(h)) {
    throw PreconditionError(Precondition::has_four_cycle,
                            "base graph must be C4-free");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(2 * h.edge_count());
  for (auto [a, b] : h.edges()) {
    if ((a == u && b == v) || (a == v && b == u)) continue;
    edges.emplace_back(a, b);
    edges.emplace_back(a + n, b + n);
  }
  edges.emplace_back(u, v + n);
  edges.emplace_back(v, u + n);
  return Graph::from_edges(2 * n, edges);
}

}  // namespace bchrome
