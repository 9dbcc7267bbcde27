#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bchrome/graph.hpp"

namespace bchrome {

// An edge-cut together with the bipartition it witnesses. Edges are the
// exact crossing set between side_s and side_t.
struct EdgeCut {
  std::vector<std::pair<int, int>> edges;  // (u, v) with u < v, sorted
  std::vector<int> side_s;                 // sorted
  std::vector<int> side_t;                 // sorted
  int size() const { return static_cast<int>(edges.size()); }
  bool operator==(const EdgeCut&) const = default;
};

struct CutReport {
  int lambda = 0;
  EdgeCut witness;
  bool super_edge_connected = false;
  std::optional<EdgeCut> nontrivial_witness;
};

// Components of G with the cut edges removed, plus the saturated vertex set
// (endpoints of cut edges) and each component's boundary slice of it.
struct ComponentDecomposition {
  std::vector<std::vector<int>> components;  // each sorted, ordered by minimum
  std::vector<int> sat;                      // sorted
  std::vector<std::vector<int>> boundary;    // boundary[i] subset of components[i]
};

// Recomputes every EdgeCut invariant from scratch: sides form a nonempty
// bipartition of V and edges are exactly the crossing edges. Throws
// PreconditionError(bad_argument) on any violation.
void verify_edge_cut(const Graph& g, const EdgeCut& cut);

// Exhaustive scan of all proper bipartitions with vertex 0 fixed on one
// side; ground truth for edge_connectivity. Requires 2 <= n <= 14.
int brute_force_edge_connectivity(const Graph& g);

// lambda(G) as the minimum over t != 0 of max-flow(0 -> t) with unit
// capacities; the witness comes from residual reachability of the first
// minimizing flow. Requires g connected with n >= 2.
std::pair<int, EdgeCut> edge_connectivity(const Graph& g);

// True iff one side of the cut is a single vertex.
bool is_trivial_cut(const Graph& g, const EdgeCut& cut);

// A minimum cut that is not trivial, or absent if every minimum cut is
// trivial. When lambda = d this decides via the restricted edge connectivity:
// the minimum cut separating two vertex-disjoint edges, scanned in
// lexicographic order. Requires g connected d-regular with n >= 4.
std::optional<EdgeCut> find_nontrivial_min_cut(const Graph& g, int d);

// Every minimum edge-cut is trivial. Requires g connected regular, n >= 2.
bool is_super_edge_connected(const Graph& g);

// lambda, witness, super-edge-connectivity, and a nontrivial witness when one
// exists. Requires g connected regular, n >= 2.
CutReport make_cut_report(const Graph& g);

// BFS components of G minus the cut edges, with sat and per-component
// boundaries. The cut must validate under verify_edge_cut.
ComponentDecomposition decompose_by_cut(const Graph& g, const EdgeCut& cut);

// True iff every component has at least d+4 vertices, the size any component
// of a nontrivial minimum cut must reach in a C4-free d-regular graph (d>=4).
bool component_size_check(const Graph& g, int d,
                          const ComponentDecomposition& decomposition);

}  // namespace bchrome
