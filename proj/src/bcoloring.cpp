#include "bchrome/bcoloring.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "bchrome/errors.hpp"
#include "bchrome/setops.hpp"

namespace bchrome {

namespace {

void check_coloring_shape(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count()) {
    throw PreconditionError(Precondition::bad_argument,
                            "coloring has " + std::to_string(c.colors.size()) +
                                " entries for " +
                                std::to_string(g.vertex_count()) + " vertices");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (c.colors[v] < 0 || c.colors[v] > c.k) {
      throw PreconditionError(Precondition::out_of_range,
                              "vertex " + std::to_string(v) + " has color " +
                                  std::to_string(c.colors[v]) +
                                  " outside 0.." + std::to_string(c.k));
    }
  }
}

// Colors currently present on the neighborhood of v, as a sorted set.
std::vector<int> neighbor_colors(const Graph& g, const std::vector<int>& colors,
                                 int v) {
  std::vector<int> out;
  for (int u : g.neighbors(v)) {
    if (colors[u] != 0) out.push_back(colors[u]);
  }
  sort_unique(out);
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ",";
    os << xs[i];
  }
  return os.str();
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
  check_coloring_shape(g, c);
  for (auto [u, v] : g.edges()) {
    if (c.colors[u] != 0 && c.colors[u] == c.colors[v]) return false;
  }
  return true;
}

bool is_color_dominating(const Graph& g, const Coloring& c, int v, int k) {
  if (c.colors[v] == 0) return false;
  std::vector<char> seen(k + 1, 0);
  for (int u : g.neighbors(v)) {
    if (c.colors[u] >= 1 && c.colors[u] <= k) seen[c.colors[u]] = 1;
  }
  for (int col = 1; col <= k; ++col) {
    if (col != c.colors[v] && !seen[col]) return false;
  }
  return true;
}

CertifyResult certify_b_coloring(const Graph& g, const Coloring& c) {
  check_coloring_shape(g, c);
  if (!c.total()) {
    throw PreconditionError(Precondition::partial_coloring,
                            "certification requires a total coloring");
  }
  if (!is_proper(g, c)) {
    throw PreconditionError(Precondition::improper_coloring,
                            "certification requires a proper coloring");
  }
  CertifyResult result;
  result.certificate.dominating.assign(c.k, -1);
  for (int col = 1; col <= c.k; ++col) {
    int found = -1;
    for (int v = 0; v < g.vertex_count() && found < 0; ++v) {
      if (c.colors[v] == col && is_color_dominating(g, c, v, c.k)) found = v;
    }
    if (found >= 0) {
      result.certificate.dominating[col - 1] = found;
    } else {
      result.undominated_colors.push_back(col);
    }
  }
  result.ok = result.undominated_colors.empty();
  if (!result.ok) result.certificate.dominating.clear();
  return result;
}

Coloring greedy_extend(const Graph& g, Coloring partial, int k) {
  partial.k = std::max(partial.k, k);
  check_coloring_shape(g, partial);
  partial.k = k;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (partial.colors[v] > k) {
      throw PreconditionError(Precondition::out_of_range,
                              "vertex " + std::to_string(v) +
                                  " already colored beyond k=" +
                                  std::to_string(k));
    }
  }
  if (!is_proper(g, partial)) {
    throw PreconditionError(Precondition::improper_coloring,
                            "partial coloring is not proper");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (partial.colors[v] != 0) continue;
    std::vector<char> used(k + 1, 0);
    for (int u : g.neighbors(v)) {
      if (partial.colors[u] >= 1 && partial.colors[u] <= k) {
        used[partial.colors[u]] = 1;
      }
    }
    int pick = 0;
    for (int col = 1; col <= k; ++col) {
      if (!used[col]) {
        pick = col;
        break;
      }
    }
    if (pick == 0) {
      throw PreconditionError(Precondition::no_color_available,
                              "vertex " + std::to_string(v) + " sees all " +
                                  std::to_string(k) + " colors");
    }
    partial.colors[v] = pick;
  }
  return partial;
}

int find_anchor(const Graph& g, const std::vector<int>& component,
                const std::vector<int>& boundary) {
  int best = -1;
  int best_count = -1;
  for (int v : component) {
    if (sorted_contains(boundary, v)) continue;
    int count =
        static_cast<int>(sorted_intersect(g.neighbors(v), boundary).size());
    if (best < 0 || count < best_count) {
      best = v;
      best_count = count;
    }
  }
  if (best < 0 || best_count > 2) {
    throw ConstructionFailure(
        "no anchor: every interior vertex of component {" +
        join_ints(component) + "} has more than 2 neighbors on the boundary {" +
        join_ints(boundary) + "}");
  }
  return best;
}

namespace {

// Everything construct_bcoloring threads through its stages.
struct Builder {
  const Graph& g;
  int d;
  int k;  // d + 1
  std::vector<int> colors;
  ConstructionTrace trace;

  Builder(const Graph& graph, int degree)
      : g(graph), d(degree), k(degree + 1), colors(graph.vertex_count(), 0) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw ConstructionFailure(
        why, std::make_shared<const ConstructionTrace>(trace));
  }

  void require(bool ok, const std::string& why) const {
    if (!ok) fail(why);
  }

  void assign(int v, int col, std::vector<std::pair<int, int>>& log) {
    require(colors[v] == 0, "vertex " + std::to_string(v) +
                                " assigned twice (had color " +
                                std::to_string(colors[v]) + ")");
    for (int u : g.neighbors(v)) {
      require(colors[u] != col, "coloring " + std::to_string(v) + " with " +
                                    std::to_string(col) +
                                    " conflicts with neighbor " +
                                    std::to_string(u));
    }
    colors[v] = col;
    log.emplace_back(v, col);
  }

  void require_dominating(int v, const std::string& role) const {
    Coloring c{k, colors};
    if (!is_color_dominating(g, c, v, k)) {
      fail(role + " vertex " + std::to_string(v) +
           " is not color-dominating for color " +
           std::to_string(colors[v]));
    }
  }

  // v ~ c in the step's bipartite graph when no already-colored neighbor of
  // v carries c; every colored vertex lies inside the step's scope set, so
  // this matches the scope-restricted rule exactly.
  BipartiteInstance color_instance(const std::vector<int>& verts,
                                   const std::vector<int>& cols) const {
    BipartiteInstance inst;
    inst.left = verts;
    inst.right = cols;
    for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi) {
      std::vector<int> blocked = neighbor_colors(g, colors, verts[vi]);
      for (int ci = 0; ci < static_cast<int>(cols.size()); ++ci) {
        if (!sorted_contains(blocked, cols[ci])) inst.edges.emplace_back(vi, ci);
      }
    }
    return inst;
  }

  // Solves one neighborhood-completion step: the uncolored part of the
  // pivot's neighborhood must take the listed colors injectively without
  // breaking properness. Records the step before failing so the evidence
  // survives.
  void run_matching_step(int pivot, const std::vector<int>& verts,
                         const std::vector<int>& cols,
                         std::vector<int> scope,
                         std::optional<int> u_star, std::optional<int> v_star,
                         std::vector<MatchingStep>& steps) {
    MatchingStep step;
    step.pivot = pivot;
    step.candidates = verts;
    step.colors = cols;
    step.scope = std::move(scope);
    step.instance = color_instance(verts, cols);
    step.instance.u_star = u_star;
    step.instance.v_star = v_star;
    steps.push_back(step);
    MatchingStep& rec = steps.back();

    for (int v : verts) {
      require(colors[v] == 0, "step at pivot " + std::to_string(pivot) +
                                  " expects uncolored vertex " +
                                  std::to_string(v));
    }
    require(lemma2_hypotheses_hold(rec.instance),
            "matching hypotheses fail at pivot " + std::to_string(pivot) +
                ": vertices {" + join_ints(verts) + "}, colors {" +
                join_ints(cols) + "}");
    PerfectMatchingResult pm = perfect_matching_or_fail(rec.instance);
    if (!pm.success) {
      std::vector<int> violator_labels;
      for (int li : pm.hall_violator) violator_labels.push_back(verts[li]);
      fail("no perfect matching at pivot " + std::to_string(pivot) +
           "; constrained vertex set {" + join_ints(violator_labels) + "}");
    }
    rec.matching = pm.matching;
    std::vector<std::pair<int, int>> ordered = pm.matching.pairs;
    std::sort(ordered.begin(), ordered.end());
    for (auto [li, ri] : ordered) assign(verts[li], cols[ri], rec.applied);
    require(is_proper(g, Coloring{k, colors}),
            "coloring not proper after step at pivot " +
                std::to_string(pivot));
  }
};

}  // namespace

ConstructionResult construct_bcoloring(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError(Precondition::disconnected,
                            "construction requires a connected graph");
  }
  std::optional<int> reg = regular_degree(g);
  if (!reg) {
    throw PreconditionError(Precondition::not_regular,
                            "construction requires a regular graph");
  }
  int d = *reg;
  // Reported before the degree gate so super-edge-connected cubic graphs
  // (the Petersen graph above all) are named for the real reason they fall
  // outside the theorem.
  std::optional<EdgeCut> cut =
      g.vertex_count() < 4 ? std::nullopt : find_nontrivial_min_cut(g, d);
  if (!cut) {
    throw PreconditionError(Precondition::super_edge_connected,
                            "graph is super-edge-connected: every minimum "
                            "edge cut isolates a single vertex");
  }
  if (d < 4) {
    throw PreconditionError(Precondition::degree_too_small,
                            "construction requires degree >= 4, got " +
                                std::to_string(d));
  }
  if (has_four_cycle(g)) {
    throw PreconditionError(Precondition::has_four_cycle,
                            "construction requires a C4-free graph");
  }

  Builder b(g, d);
  int k = b.k;
  b.trace.cut = *cut;
  verify_edge_cut(g, *cut);
  b.trace.decomposition = decompose_by_cut(g, *cut);
  const ComponentDecomposition& dec = b.trace.decomposition;
  b.require(dec.components.size() == 2,
            "removing a minimum cut left " +
                std::to_string(dec.components.size()) +
                " components, expected 2");
  b.trace.component_ids = {0, 1};
  if (!component_size_check(g, d, dec)) {
    b.fail("component smaller than d+4=" + std::to_string(d + 4) +
           " (sizes " + std::to_string(dec.components[0].size()) + ", " +
           std::to_string(dec.components[1].size()) + ")");
  }

  const std::vector<int>& comp1 = dec.components[0];
  const std::vector<int>& comp2 = dec.components[1];
  const std::vector<int>& a1_boundary = dec.boundary[0];
  const std::vector<int>& a2_boundary = dec.boundary[1];
  int a1 = -1;
  int a2 = -1;
  try {
    a1 = find_anchor(g, comp1, a1_boundary);
    a2 = find_anchor(g, comp2, a2_boundary);
  } catch (const ConstructionFailure& e) {
    b.fail(e.what());
  }
  b.trace.anchors = {a1, a2};

  // Stage 1 seed around a1: color 1 on the anchor, 2..|x|+1 along its
  // interior neighbors, the top colors on its boundary neighbors, and
  // {1, floor((d+2)/2)} on a2's boundary neighbors over in the other
  // component.
  int half_up = (d + 2) / 2;
  std::vector<int> xs = sorted_subtract(g.neighbors(a1), a1_boundary);
  std::vector<int> a1_cut_nbrs = sorted_intersect(g.neighbors(a1), a1_boundary);
  std::vector<int> a2_cut_nbrs = sorted_intersect(g.neighbors(a2), a2_boundary);
  b.require(static_cast<int>(a1_cut_nbrs.size()) <= 2,
            "anchor " + std::to_string(a1) + " has " +
                std::to_string(a1_cut_nbrs.size()) + " boundary neighbors");
  b.require(static_cast<int>(a2_cut_nbrs.size()) <= 2,
            "anchor " + std::to_string(a2) + " has " +
                std::to_string(a2_cut_nbrs.size()) + " boundary neighbors");
  int m1 = static_cast<int>(xs.size());
  b.trace.x_order = xs;

  b.assign(a1, 1, b.trace.stage1_seed);
  for (int i = 1; i <= m1; ++i) b.assign(xs[i - 1], i + 1, b.trace.stage1_seed);
  for (int j = 0; j < static_cast<int>(a1_cut_nbrs.size()); ++j) {
    b.assign(a1_cut_nbrs[j], m1 + 2 + j, b.trace.stage1_seed);
  }
  {
    std::vector<int> pool{1, half_up};
    for (int j = 0; j < static_cast<int>(a2_cut_nbrs.size()); ++j) {
      b.assign(a2_cut_nbrs[j], pool[j], b.trace.stage1_seed);
    }
  }
  b.require(is_proper(g, Coloring{k, b.colors}),
            "seed coloring around first anchor is not proper");

  // Stage 1 loop: make x_1..x_{floor(d/2)} dominating by completing their
  // neighborhoods outside N[a1] with the missing colors.
  std::vector<int> closed_a1 = g.neighbors(a1);
  closed_a1.push_back(a1);
  std::sort(closed_a1.begin(), closed_a1.end());
  std::vector<int> scope = sorted_union(closed_a1, a2_cut_nbrs);
  std::vector<int> seen_v;  // union of V_1..V_{i-1}, for disjointness checks
  for (int i = 1; i <= d / 2; ++i) {
    int x = xs[i - 1];
    std::vector<int> vi = sorted_subtract(g.neighbors(x), closed_a1);
    std::vector<int> overlap = sorted_intersect(vi, seen_v);
    b.require(overlap.empty(), "neighborhoods of x_" + std::to_string(i) +
                                   " and an earlier x overlap at {" +
                                   join_ints(overlap) + "}");
    seen_v = sorted_union(seen_v, vi);
    scope = sorted_union(scope, vi);

    std::vector<int> shared = sorted_intersect(g.neighbors(x), g.neighbors(a1));
    std::vector<int> excluded{1};
    excluded.push_back(b.colors[x]);
    for (int u : shared) excluded.push_back(b.colors[u]);
    sort_unique(excluded);
    std::vector<int> ci;
    for (int col = 2; col <= k; ++col) {
      if (!sorted_contains(excluded, col)) ci.push_back(col);
    }

    b.require(vi.size() == ci.size(),
              "step " + std::to_string(i) + ": |V_i|=" +
                  std::to_string(vi.size()) + " but |C_i|=" +
                  std::to_string(ci.size()));
    int expect = shared.size() == 1 ? d - 2 : d - 1;
    b.require(static_cast<int>(vi.size()) == expect,
              "step " + std::to_string(i) + ": |V_i|=" +
                  std::to_string(vi.size()) + ", expected " +
                  std::to_string(expect) + " from " +
                  std::to_string(shared.size()) + " shared neighbors");

    b.run_matching_step(x, vi, ci, scope, std::nullopt, std::nullopt,
                        b.trace.stage1);
    b.require_dominating(a1, "first anchor");
    for (int j = 1; j <= i; ++j) b.require_dominating(xs[j - 1], "x");
  }
  std::vector<int> stage1_scope = scope;

  // Stage 2 prep: rank a2's interior neighbors by how many edges leave
  // their outer neighborhoods toward the first component's boundary, and
  // take the least-exposed floor((d-1)/2) of them as the z vertices.
  std::vector<int> closed_a2 = g.neighbors(a2);
  closed_a2.push_back(a2);
  std::sort(closed_a2.begin(), closed_a2.end());
  std::vector<int> ys = sorted_subtract(g.neighbors(a2), a2_boundary);
  int zcount = (d - 1) / 2;
  b.require(static_cast<int>(ys.size()) >= zcount,
            "only " + std::to_string(ys.size()) +
                " interior neighbors at the second anchor, need " +
                std::to_string(zcount));
  {
    std::vector<int> seen_w;
    std::vector<std::pair<int, int>> ranked;  // (cross edges, label)
    for (int y : ys) {
      std::vector<int> w = sorted_subtract(g.neighbors(y), closed_a2);
      std::vector<int> overlap = sorted_intersect(w, seen_w);
      b.require(overlap.empty(),
                "outer neighborhoods of two neighbors of the second anchor "
                "overlap at {" + join_ints(overlap) + "}");
      seen_w = sorted_union(seen_w, w);
      int cross = 0;
      for (int s : w) {
        cross +=
            static_cast<int>(sorted_intersect(g.neighbors(s), a1_boundary).size());
      }
      ranked.emplace_back(cross, y);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& p, const auto& q) {
      return p.first != q.first ? p.first > q.first : p.second < q.second;
    });
    for (auto [cross, y] : ranked) {
      b.trace.y_order.push_back(y);
      b.trace.y_cross_edges.push_back(cross);
    }
  }
  const std::vector<int>& y_order = b.trace.y_order;
  int q = static_cast<int>(y_order.size());
  for (int i = 1; i <= zcount; ++i) {
    int z = y_order[q - zcount + i - 1];
    int cross = b.trace.y_cross_edges[q - zcount + i - 1];
    b.require(cross <= 1, "z vertex " + std::to_string(z) + " has " +
                              std::to_string(cross) +
                              " cross edges toward the cut, expected <= 1");
    b.trace.z_list.push_back(z);
  }
  const std::vector<int>& zs = b.trace.z_list;

  // Stage 2 seed: d+1 on a2, the colors above floor((d+2)/2) on the z
  // vertices, and whatever colors N[a2] still misses on the remaining
  // interior neighbors, so a2 dominates immediately.
  b.assign(a2, k, b.trace.stage2_seed);
  for (int i = 1; i <= zcount; ++i) {
    b.assign(zs[i - 1], half_up + i, b.trace.stage2_seed);
  }
  {
    std::vector<int> sorted_zs = zs;
    std::sort(sorted_zs.begin(), sorted_zs.end());
    std::vector<int> rest = sorted_subtract(ys, sorted_zs);
    std::vector<int> used;
    for (int v : a2_cut_nbrs) used.push_back(b.colors[v]);
    sort_unique(used);
    std::vector<int> missing;
    for (int col = 1; col <= half_up; ++col) {
      if (!sorted_contains(used, col)) missing.push_back(col);
    }
    b.require(rest.size() == missing.size(),
              std::to_string(rest.size()) +
                  " unseeded neighbors at the second anchor but " +
                  std::to_string(missing.size()) + " colors missing");
    for (std::size_t j = 0; j < rest.size(); ++j) {
      b.assign(rest[j], missing[j], b.trace.stage2_seed);
    }
  }
  b.require(is_proper(g, Coloring{k, b.colors}),
            "seed coloring around second anchor is not proper");
  b.require_dominating(a2, "second anchor");

  // Stage 2 loop: complete each z's neighborhood with the colors of [d] it
  // does not already see. Crossing edges allow one exceptional vertex (a
  // neighbor inside the first component) and one exceptional color (the one
  // that neighbor carries).
  std::vector<char> in_comp1(g.vertex_count(), 0);
  for (int v : comp1) in_comp1[v] = 1;
  scope = sorted_union(stage1_scope, closed_a2);
  {
    std::vector<int> seen_v2;
    for (int i = 1; i <= zcount; ++i) {
      int z = zs[i - 1];
      std::vector<int> vi = sorted_subtract(g.neighbors(z), closed_a2);
      std::vector<int> overlap = sorted_intersect(vi, seen_v2);
      b.require(overlap.empty(), "neighborhoods of z_" + std::to_string(i) +
                                     " and an earlier z overlap at {" +
                                     join_ints(overlap) + "}");
      seen_v2 = sorted_union(seen_v2, vi);
      scope = sorted_union(scope, vi);

      std::vector<int> shared =
          sorted_intersect(g.neighbors(z), g.neighbors(a2));
      std::vector<int> excluded{b.colors[z]};
      for (int u : shared) excluded.push_back(b.colors[u]);
      sort_unique(excluded);
      std::vector<int> ci;
      for (int col = 1; col <= d; ++col) {
        if (!sorted_contains(excluded, col)) ci.push_back(col);
      }

      b.require(vi.size() == ci.size(),
                "z step " + std::to_string(i) + ": |V'_i|=" +
                    std::to_string(vi.size()) + " but |C'_i|=" +
                    std::to_string(ci.size()));
      int expect = shared.size() == 1 ? d - 2 : d - 1;
      b.require(static_cast<int>(vi.size()) == expect,
                "z step " + std::to_string(i) + ": |V'_i|=" +
                    std::to_string(vi.size()) + ", expected " +
                    std::to_string(expect));

      // At most one V'_i vertex can reach the first component, and hence at
      // most one color of C'_i can be blocked from across the cut.
      std::optional<int> u_star;
      std::vector<int> cross_colors;
      for (int vi_idx = 0; vi_idx < static_cast<int>(vi.size()); ++vi_idx) {
        bool crosses = false;
        for (int u : g.neighbors(vi[vi_idx])) {
          if (!in_comp1[u]) continue;
          crosses = true;
          if (b.colors[u] != 0) cross_colors.push_back(b.colors[u]);
        }
        if (crosses) {
          b.require(!u_star.has_value(),
                    "two vertices of V'_" + std::to_string(i) +
                        " have neighbors across the cut");
          u_star = vi_idx;
        }
      }
      sort_unique(cross_colors);
      cross_colors = sorted_intersect(cross_colors, ci);
      b.require(cross_colors.size() <= 1,
                "multiple colors of C'_" + std::to_string(i) +
                    " blocked from across the cut: {" +
                    join_ints(cross_colors) + "}");
      std::optional<int> v_star;
      if (!cross_colors.empty()) {
        v_star = static_cast<int>(
            std::lower_bound(ci.begin(), ci.end(), cross_colors[0]) -
            ci.begin());
      }

      b.run_matching_step(z, vi, ci, scope, u_star, v_star, b.trace.stage2);
      for (int j = 1; j <= i; ++j) b.require_dominating(zs[j - 1], "z");
    }
  }

  // Every color now realizes; finish the proper coloring greedily.
  Coloring before{k, b.colors};
  Coloring full = greedy_extend(g, before, k);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (before.colors[v] == 0) b.trace.greedy.emplace_back(v, full.colors[v]);
  }
  b.colors = full.colors;

  CertifyResult cert = certify_b_coloring(g, full);
  if (!cert.ok) {
    b.fail("final coloring leaves colors {" +
           join_ints(cert.undominated_colors) + "} without a dominating "
           "vertex");
  }
  return ConstructionResult{full, cert.certificate, std::move(b.trace)};
}

Coloring replay_trace(const Graph& g, const ConstructionTrace& trace, int k) {
  Coloring c{k, std::vector<int>(g.vertex_count(), 0)};
  auto apply = [&](const std::vector<std::pair<int, int>>& log) {
    for (auto [v, col] : log) {
      if (v < 0 || v >= g.vertex_count() || col < 1 || col > k) {
        throw ConstructionFailure("trace assigns color " +
                                  std::to_string(col) + " to vertex " +
                                  std::to_string(v));
      }
      if (c.colors[v] != 0) {
        throw ConstructionFailure("trace assigns vertex " + std::to_string(v) +
                                  " twice");
      }
      for (int u : g.neighbors(v)) {
        if (c.colors[u] == col) {
          throw ConstructionFailure(
              "trace creates a monochromatic edge {" + std::to_string(u) +
              "," + std::to_string(v) + "} with color " + std::to_string(col));
        }
      }
      c.colors[v] = col;
    }
  };
  apply(trace.stage1_seed);
  for (const MatchingStep& s : trace.stage1) apply(s.applied);
  apply(trace.stage2_seed);
  for (const MatchingStep& s : trace.stage2) apply(s.applied);
  apply(trace.greedy);
  return c;
}

}  // namespace bchrome
