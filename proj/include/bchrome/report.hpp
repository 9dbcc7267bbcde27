#pragma once

#include <optional>

#include "bchrome/connectivity.hpp"
#include "bchrome/graph.hpp"

namespace bchrome {

// Everything the analyze command reports about one graph: structure,
// connectivity, and whether the constructive pipeline accepts it.
struct AnalyzeReport {
  int n = 0;
  int m = 0;
  std::optional<int> regular_degree;
  std::optional<int> girth;  // absent = acyclic
  bool has_c4 = false;
  bool connected = false;
  std::optional<int> lambda;  // absent when n < 2 or disconnected
  std::optional<bool> super_edge_connected;
  std::optional<EdgeCut> nontrivial_min_cut;
  bool theorem_applies = false;
};

// theorem_applies means construct_bcoloring would accept the graph:
// connected, d-regular with d >= 4, C4-free, not super-edge-connected.
AnalyzeReport analyze_graph(const Graph& g);

}  // namespace bchrome
