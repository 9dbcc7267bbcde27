#include "bchrome/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bchrome/errors.hpp"

namespace bchrome {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) {
    throw PreconditionError(Precondition::bad_argument,
                            "vertex count must be nonnegative");
  }
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw PreconditionError(Precondition::bad_argument,
                              "edge endpoint out of range");
    }
    if (u == v) {
      throw PreconditionError(Precondition::bad_argument, "loop edge");
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw PreconditionError(Precondition::bad_argument, "duplicate edge");
    }
  }
  g.m_ = static_cast<int>(edges.size());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
  return d;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == n;
}

bool has_four_cycle(const Graph& g) {
  // Common-neighbor counting: a pair of vertices appearing together in two
  // different neighborhoods spans a 4-cycle.
  int n = g.vertex_count();
  if (n < 4) return false;
  std::vector<unsigned char> pair_count(static_cast<size_t>(n) * n, 0);
  for (int center = 0; center < n; ++center) {
    const auto& nbrs = g.neighbors(center);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        size_t idx = static_cast<size_t>(nbrs[i]) * n + nbrs[j];
        if (++pair_count[idx] == 2) return true;
      }
    }
  }
  return false;
}

std::optional<int> girth(const Graph& g) {
  int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      // Cycles through the root are found exactly; other roots only ever
      // overestimate, so the minimum over all roots is the girth.
      if (best != -1 && 2 * dist[u] >= best) continue;
      for (int v : g.neighbors(u)) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

StructureReport analyze_structure(const Graph& g) {
  StructureReport r;
  r.regular_degree = regular_degree(g);
  r.girth = girth(g);
  r.has_c4 = has_four_cycle(g);
  r.connected = is_connected(g);
  return r;
}

bool c4_edge_bound_holds(int n, long long m) {
  // m <= n/4 (1 + sqrt(4n-3))  <=>  4m - n <= n sqrt(4n-3); compare squares
  // once the left side is known positive.
  long long lhs = 4 * m - n;
  if (lhs <= 0) return true;
  unsigned __int128 l2 = static_cast<unsigned __int128>(lhs) * lhs;
  unsigned __int128 r2 = static_cast<unsigned __int128>(n) * n *
                         (4 * static_cast<unsigned __int128>(n) - 3);
  return l2 <= r2;
}

}  // namespace bchrome
