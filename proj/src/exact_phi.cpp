#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bchrome/bcoloring.hpp"
#include "bchrome/errors.hpp"

namespace bchrome {

namespace {

// Backtracking search for one fixed k and one fixed set of designated
// dominating vertices dom[0..k-1], where dom[j] is pre-colored j+1. Every
// k-b-coloring can be color-permuted so that per color the smallest
// dominating vertex appears, and those representatives, sorted by label,
// carry colors 1..k in order — so trying ascending designated sets with this
// fixed color assignment loses nothing.
struct DominatorSearch {
  const Graph& g;
  int k;
  std::vector<int> color;           // 0 = unassigned
  std::vector<int> dom;             // dom[j] must dominate color j+1
  std::vector<uint32_t> missing;    // missing[j]: colors dom[j] still needs
  std::vector<int> open;            // open[j]: uncolored neighbors of dom[j]
  std::vector<std::vector<int>> watchers;  // watchers[v]: j with dom[j] ~ v
  std::vector<int> order;           // uncolored vertices, dominator
                                    // neighbors first

  DominatorSearch(const Graph& graph, int colors_k)
      : g(graph), k(colors_k), color(graph.vertex_count(), 0),
        watchers(graph.vertex_count()) {}

  bool try_set() {
    int n = g.vertex_count();
    std::fill(color.begin(), color.end(), 0);
    for (auto& w : watchers) w.clear();
    for (int j = 0; j < k; ++j) color[dom[j]] = j + 1;
    // Adjacent designated vertices always receive distinct colors, so the
    // designated part is proper by itself.
    missing.assign(k, 0);
    open.assign(k, 0);
    for (int j = 0; j < k; ++j) {
      uint32_t need = (uint32_t(1) << k) - 1;
      need &= ~(uint32_t(1) << j);
      int uncolored = 0;
      for (int u : g.neighbors(dom[j])) {
        if (color[u] != 0) {
          need &= ~(uint32_t(1) << (color[u] - 1));
        } else {
          ++uncolored;
          watchers[u].push_back(j);
        }
      }
      if (std::popcount(need) > uncolored) return false;
      missing[j] = need;
      open[j] = uncolored;
    }
    order.clear();
    for (int v = 0; v < n; ++v) {
      if (color[v] == 0 && !watchers[v].empty()) order.push_back(v);
    }
    for (int v = 0; v < n; ++v) {
      if (color[v] == 0 && watchers[v].empty()) order.push_back(v);
    }
    return extend(0);
  }

  bool extend(std::size_t idx) {
    if (idx == order.size()) {
      for (int j = 0; j < k; ++j) {
        if (missing[j] != 0) return false;
      }
      return true;
    }
    int v = order[idx];
    uint32_t forbidden = 0;
    for (int u : g.neighbors(v)) {
      if (color[u] != 0) forbidden |= uint32_t(1) << (color[u] - 1);
    }
    for (int c = 1; c <= k; ++c) {
      uint32_t bit = uint32_t(1) << (c - 1);
      if (forbidden & bit) continue;
      color[v] = c;
      std::vector<int> cleared;
      bool ok = true;
      for (int j : watchers[v]) {
        --open[j];
        if (missing[j] & bit) {
          missing[j] &= ~bit;
          cleared.push_back(j);
        }
        if (std::popcount(missing[j]) > open[j]) ok = false;
      }
      if (ok && extend(idx + 1)) return true;
      for (int j : cleared) missing[j] |= bit;
      for (int j : watchers[v]) ++open[j];
      color[v] = 0;
    }
    return false;
  }
};

bool feasible_with_k(const Graph& g, int k) {
  std::vector<int> candidates;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= k - 1) candidates.push_back(v);
  }
  if (static_cast<int>(candidates.size()) < k) return false;
  DominatorSearch search(g, k);
  search.dom.assign(k, -1);
  // Ascending designated sets; dom[j] gets color j+1.
  int c = static_cast<int>(candidates.size());
  auto rec = [&](auto&& self, int slot, int from) -> bool {
    if (slot == k) return search.try_set();
    for (int idx = from; idx <= c - (k - slot); ++idx) {
      search.dom[slot] = candidates[idx];
      if (self(self, slot + 1, idx + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

int exact_phi(const Graph& g, int limit_n) {
  int n = g.vertex_count();
  if (n > limit_n) {
    throw PreconditionError(Precondition::out_of_range,
                            "exact search limited to " +
                                std::to_string(limit_n) + " vertices, got " +
                                std::to_string(n));
  }
  int top = std::min(max_degree(g) + 1, n);
  for (int k = top; k >= 1; --k) {
    if (feasible_with_k(g, k)) return k;
  }
  // Unreachable: with k = 1 and no edges the empty extension succeeds, and
  // any graph admits a b-coloring with chromatic-number many colors.
  throw ConstructionFailure("exact search failed for every k");
}

}  // namespace bchrome
