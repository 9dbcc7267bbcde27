#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "bchrome/graph.hpp"

namespace bchrome {

// Standard Petersen graph: outer 5-cycle 0-1-2-3-4, inner pentagram
// 5-7-9-6-8, spokes i <-> i+5. 3-regular, girth 5, C4-free.
Graph gen_petersen();

// Cycle C_n. Requires n >= 3.
Graph gen_cycle(int n);

struct RandomRegularResult {
  std::optional<Graph> graph;  // absent when the retry budget was exhausted
  int attempts = 0;            // restarts consumed (counts the successful one)
};

// Random d-regular C4-free graph via the pairing model: vertex stubs are
// paired one at a time, candidate partners that would create a loop,
// multi-edge, or 4-cycle are rejected, and a dead end restarts the whole
// pairing. Deterministic given seed. Requires n*d even and d < n.
RandomRegularResult gen_random_regular_c4_free(int n, int d,
                                               std::uint64_t seed,
                                               int max_tries);

// Two disjoint copies of h with the given edge deleted in each copy and the
// four loose ends rewired straight across. Preserves d-regularity and
// C4-freeness and leaves an edge-cut of size 2 (the two cross edges), so the
// result is never super-edge-connected for d >= 3.
// Requires h d-regular, C4-free, and {u, v} an edge of h.
Graph gen_bridged_pair(const Graph& h, std::pair<int, int> edge);

}  // namespace bchrome
