#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace bchrome {

// Simple undirected graph on vertices 0..n-1. Immutable once built; neighbor
// lists are kept sorted so every scan is label-ordered and reproducible.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list. Throws PreconditionError(bad_argument) on
  // loops, duplicate edges, or endpoints outside [0, n).
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

struct StructureReport {
  std::optional<int> regular_degree;  // absent if degrees differ
  std::optional<int> girth;           // absent means acyclic (infinite girth)
  bool has_c4 = false;
  bool connected = false;
};

int max_degree(const Graph& g);
int min_degree(const Graph& g);
std::optional<int> regular_degree(const Graph& g);
bool is_connected(const Graph& g);

// True iff some pair of distinct vertices has two or more common neighbors,
// i.e. the graph contains C4 as a subgraph.
bool has_four_cycle(const Graph& g);

// Length of a shortest cycle via BFS from every vertex; absent for forests.
std::optional<int> girth(const Graph& g);

StructureReport analyze_structure(const Graph& g);

// Exact integer test of m <= n/4 * (1 + sqrt(4n - 3)), the maximum edge
// count of a C4-free graph on n vertices. No floating point involved.
bool c4_edge_bound_holds(int n, long long m);

}  // namespace bchrome
