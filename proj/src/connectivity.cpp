#include "bchrome/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bchrome/errors.hpp"
#include "bchrome/setops.hpp"

namespace bchrome {

namespace {

// Unit-capacity flow network with paired arcs; arc i^1 is the reverse of
// arc i. An undirected edge is one arc pair with capacity 1 each way.
struct FlowNetwork {
  int node_count = 0;
  std::vector<std::vector<int>> out;  // arc ids per node
  std::vector<int> to;
  std::vector<int> cap;

  explicit FlowNetwork(int nodes) : node_count(nodes), out(nodes) {}

  void add_undirected(int u, int v) {
    out[u].push_back(static_cast<int>(to.size()));
    to.push_back(v);
    cap.push_back(1);
    out[v].push_back(static_cast<int>(to.size()));
    to.push_back(u);
    cap.push_back(1);
  }

  // BFS augmentation, one unit per round.
  int max_flow(int s, int t) {
    int flow = 0;
    std::vector<int> via(node_count);
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      via[s] = -2;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && via[t] == -1) {
        int u = q.front();
        q.pop();
        for (int a : out[u]) {
          if (cap[a] > 0 && via[to[a]] == -1) {
            via[to[a]] = a;
            q.push(to[a]);
          }
        }
      }
      if (via[t] == -1) return flow;
      for (int v = t; v != s;) {
        int a = via[v];
        --cap[a];
        ++cap[a ^ 1];
        v = to[a ^ 1];
      }
      ++flow;
    }
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(node_count, 0);
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a : out[u]) {
        if (cap[a] > 0 && !seen[to[a]]) {
          seen[to[a]] = 1;
          q.push(to[a]);
        }
      }
    }
    return seen;
  }
};

// Cut of g whose s-side is the set of vertices v with in_s[node_of[v]] != 0.
EdgeCut cut_from_sides(const Graph& g, const std::vector<char>& in_s,
                       const std::vector<int>& node_of) {
  EdgeCut cut;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_s[node_of[v]]) {
      cut.side_s.push_back(v);
    } else {
      cut.side_t.push_back(v);
    }
  }
  for (auto [u, v] : g.edges()) {
    if (static_cast<bool>(in_s[node_of[u]]) !=
        static_cast<bool>(in_s[node_of[v]])) {
      cut.edges.emplace_back(u, v);
    }
  }
  return cut;
}

std::vector<int> identity_nodes(int n) {
  std::vector<int> ids(n);
  for (int v = 0; v < n; ++v) ids[v] = v;
  return ids;
}

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) {
    throw PreconditionError(Precondition::disconnected,
                            std::string(who) + ": input graph is disconnected");
  }
}

}  // namespace

void verify_edge_cut(const Graph& g, const EdgeCut& cut) {
  int n = g.vertex_count();
  std::vector<char> side(n, -1);
  for (int v : cut.side_s) {
    if (v < 0 || v >= n || side[v] != -1) {
      throw PreconditionError(Precondition::bad_argument,
                              "edge cut: malformed s-side");
    }
    side[v] = 1;
  }
  for (int v : cut.side_t) {
    if (v < 0 || v >= n || side[v] != -1) {
      throw PreconditionError(Precondition::bad_argument,
                              "edge cut: sides overlap or repeat");
    }
    side[v] = 0;
  }
  if (cut.side_s.empty() || cut.side_t.empty() ||
      std::count(side.begin(), side.end(), -1) != 0) {
    throw PreconditionError(Precondition::bad_argument,
                            "edge cut: sides do not bipartition V");
  }
  std::vector<std::pair<int, int>> crossing;
  for (auto [u, v] : g.edges()) {
    if (side[u] != side[v]) crossing.emplace_back(u, v);
  }
  std::vector<std::pair<int, int>> given = cut.edges;
  for (auto& [u, v] : given) {
    if (u > v) std::swap(u, v);
  }
  std::sort(given.begin(), given.end());
  if (given != crossing) {
    throw PreconditionError(Precondition::bad_argument,
                            "edge cut: edges are not the crossing set");
  }
}

int brute_force_edge_connectivity(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2 || n > 14) {
    throw PreconditionError(Precondition::out_of_range,
                            "brute force oracle handles 2 <= n <= 14");
  }
  auto edges = g.edges();
  int best = g.edge_count() + 1;
  // Vertex 0 stays on one fixed side; every proper bipartition appears once.
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    int crossing = 0;
    for (auto [u, v] : edges) {
      bool su = u != 0 && (mask >> (u - 1)) & 1;
      bool sv = v != 0 && (mask >> (v - 1)) & 1;
      if (su != sv) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

std::pair<int, EdgeCut> edge_connectivity(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) {
    throw PreconditionError(Precondition::out_of_range,
                            "edge connectivity needs n >= 2");
  }
  require_connected(g, "edge_connectivity");
  auto edges = g.edges();
  auto nodes = identity_nodes(n);
  int best = -1;
  EdgeCut witness;
  for (int t = 1; t < n; ++t) {
    FlowNetwork net(n);
    for (auto [u, v] : edges) net.add_undirected(u, v);
    int flow = net.max_flow(0, t);
    if (best == -1 || flow < best) {
      best = flow;
      witness = cut_from_sides(g, net.residual_reachable(0), nodes);
    }
  }
  if (best > min_degree(g)) {
    throw std::logic_error("edge connectivity " + std::to_string(best) +
                           " exceeds minimum degree " +
                           std::to_string(min_degree(g)));
  }
  return {best, witness};
}

bool is_trivial_cut(const Graph& g, const EdgeCut& cut) {
  verify_edge_cut(g, cut);
  return cut.side_s.size() == 1 || cut.side_t.size() == 1;
}

std::optional<EdgeCut> find_nontrivial_min_cut(const Graph& g, int d) {
  int n = g.vertex_count();
  if (n < 4) {
    throw PreconditionError(Precondition::out_of_range,
                            "find_nontrivial_min_cut needs n >= 4");
  }
  auto deg = regular_degree(g);
  if (!deg || *deg != d) {
    throw PreconditionError(Precondition::not_regular,
                            "graph is not d-regular for the given d");
  }
  require_connected(g, "find_nontrivial_min_cut");

  auto [lambda, witness] = edge_connectivity(g);
  // Trivial cuts have size exactly d, so any smaller minimum cut already has
  // two vertices on both sides.
  if (lambda < d) return witness;

  // lambda = d: scan vertex-disjoint edge pairs and look for a cut of size d
  // separating them. Any such cut has an edge, hence two vertices, per side;
  // and no cut separating two disjoint edges can be smaller than lambda.
  auto edges = g.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, e] = edges[j];
      if (a == c || a == e || b == c || b == e) continue;
      std::vector<int> node_of(n, -1);
      node_of[a] = node_of[b] = 0;
      node_of[c] = node_of[e] = 1;
      int next = 2;
      for (int v = 0; v < n; ++v) {
        if (node_of[v] == -1) node_of[v] = next++;
      }
      FlowNetwork net(next);
      for (auto [u, v] : edges) {
        if (node_of[u] != node_of[v]) {
          net.add_undirected(node_of[u], node_of[v]);
        }
      }
      if (net.max_flow(0, 1) == d) {
        return cut_from_sides(g, net.residual_reachable(0), node_of);
      }
    }
  }
  return std::nullopt;
}

bool is_super_edge_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) {
    throw PreconditionError(Precondition::out_of_range,
                            "super-edge-connectivity needs n >= 2");
  }
  auto deg = regular_degree(g);
  if (!deg) {
    throw PreconditionError(Precondition::not_regular,
                            "super-edge-connectivity is defined for regular graphs");
  }
  require_connected(g, "is_super_edge_connected");
  // The only connected regular graphs on fewer than 4 vertices are K2 and
  // C3; all their minimum cuts isolate a vertex.
  if (n < 4) return true;
  return !find_nontrivial_min_cut(g, *deg).has_value();
}

CutReport make_cut_report(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) {
    throw PreconditionError(Precondition::out_of_range,
                            "cut report needs n >= 2");
  }
  auto deg = regular_degree(g);
  if (!deg) {
    throw PreconditionError(Precondition::not_regular,
                            "cut report is defined for regular graphs");
  }
  require_connected(g, "make_cut_report");
  CutReport report;
  auto [lambda, witness] = edge_connectivity(g);
  report.lambda = lambda;
  report.witness = std::move(witness);
  if (n < 4) {
    report.super_edge_connected = true;
  } else {
    report.nontrivial_witness = find_nontrivial_min_cut(g, *deg);
    report.super_edge_connected = !report.nontrivial_witness.has_value();
  }
  return report;
}

ComponentDecomposition decompose_by_cut(const Graph& g, const EdgeCut& cut) {
  verify_edge_cut(g, cut);
  int n = g.vertex_count();
  std::vector<char> is_cut_edge_endpoint(n, 0);
  std::vector<std::vector<int>> removed(n);
  for (auto [u, v] : cut.edges) {
    removed[u].push_back(v);
    removed[v].push_back(u);
    is_cut_edge_endpoint[u] = 1;
    is_cut_edge_endpoint[v] = 1;
  }
  for (auto& nbrs : removed) std::sort(nbrs.begin(), nbrs.end());

  ComponentDecomposition out;
  std::vector<int> comp(n, -1);
  for (int seed = 0; seed < n; ++seed) {
    if (comp[seed] != -1) continue;
    int id = static_cast<int>(out.components.size());
    std::vector<int> members;
    std::queue<int> q;
    comp[seed] = id;
    q.push(seed);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      members.push_back(u);
      for (int v : g.neighbors(u)) {
        if (comp[v] != -1) continue;
        if (sorted_contains(removed[u], v)) continue;
        comp[v] = id;
        q.push(v);
      }
    }
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
  }
  if (out.components.size() < 2) {
    throw PreconditionError(Precondition::bad_argument,
                            "cut does not disconnect the graph");
  }
  for (int v = 0; v < n; ++v) {
    if (is_cut_edge_endpoint[v]) out.sat.push_back(v);
  }
  out.boundary.reserve(out.components.size());
  for (const auto& members : out.components) {
    out.boundary.push_back(sorted_intersect(members, out.sat));
  }
  return out;
}

bool component_size_check(const Graph& /*g*/, int d,
                          const ComponentDecomposition& decomposition) {
  for (const auto& members : decomposition.components) {
    if (static_cast<int>(members.size()) < d + 4) return false;
  }
  return true;
}

}  // namespace bchrome
