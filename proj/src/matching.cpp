#include "bchrome/matching.hpp"

#include <algorithm>
#include <string>

#include "bchrome/errors.hpp"

namespace bchrome {

namespace {

std::vector<std::vector<int>> left_adjacency(const BipartiteInstance& inst) {
  std::vector<std::vector<int>> adj(inst.left.size());
  for (auto [l, r] : inst.edges) {
    if (l < 0 || r < 0 || l >= static_cast<int>(inst.left.size()) ||
        r >= static_cast<int>(inst.right.size())) {
      throw PreconditionError(Precondition::bad_argument,
                              "matching edge index out of range");
    }
    adj[l].push_back(r);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw PreconditionError(Precondition::bad_argument,
                              "duplicate matching edge");
    }
  }
  return adj;
}

bool augment(int l, const std::vector<std::vector<int>>& adj,
             std::vector<int>& match_left, std::vector<int>& match_right,
             std::vector<char>& visited_right) {
  for (int r : adj[l]) {
    if (visited_right[r]) continue;
    visited_right[r] = 1;
    if (match_right[r] == -1 ||
        augment(match_right[r], adj, match_left, match_right, visited_right)) {
      match_left[l] = r;
      match_right[r] = l;
      return true;
    }
  }
  return false;
}

struct MatchState {
  std::vector<int> match_left;
  std::vector<int> match_right;
};

MatchState run_kuhn(const BipartiteInstance& inst,
                    const std::vector<std::vector<int>>& adj) {
  MatchState st;
  st.match_left.assign(inst.left.size(), -1);
  st.match_right.assign(inst.right.size(), -1);
  for (size_t l = 0; l < inst.left.size(); ++l) {
    std::vector<char> visited_right(inst.right.size(), 0);
    augment(static_cast<int>(l), adj, st.match_left, st.match_right,
            visited_right);
  }
  return st;
}

Matching to_matching(const MatchState& st) {
  Matching m;
  for (size_t l = 0; l < st.match_left.size(); ++l) {
    if (st.match_left[l] != -1) {
      m.pairs.emplace_back(static_cast<int>(l), st.match_left[l]);
    }
  }
  return m;
}

}  // namespace

Matching max_matching(const BipartiteInstance& inst) {
  auto adj = left_adjacency(inst);
  return to_matching(run_kuhn(inst, adj));
}

bool lemma2_hypotheses_hold(const BipartiteInstance& inst) {
  size_t p = inst.left.size();
  size_t q = inst.right.size();
  if (p != q) return false;
  std::vector<int> deg_left(p, 0), deg_right(q, 0);
  for (auto [l, r] : inst.edges) {
    ++deg_left[l];
    ++deg_right[r];
  }
  for (size_t i = 0; i < p; ++i) {
    bool exceptional = inst.u_star && *inst.u_star == static_cast<int>(i);
    if (exceptional) {
      if (deg_left[i] == 0) return false;
    } else if (2 * static_cast<size_t>(deg_left[i]) < q) {
      return false;
    }
  }
  for (size_t i = 0; i < q; ++i) {
    bool exceptional = inst.v_star && *inst.v_star == static_cast<int>(i);
    if (exceptional) {
      if (deg_right[i] == 0) return false;
    } else if (2 * static_cast<size_t>(deg_right[i]) < q) {
      return false;
    }
  }
  return true;
}

PerfectMatchingResult perfect_matching_or_fail(const BipartiteInstance& inst) {
  if (inst.left.size() != inst.right.size()) {
    throw PreconditionError(Precondition::bad_argument,
                            "perfect matching needs equal part sizes");
  }
  auto adj = left_adjacency(inst);
  auto st = run_kuhn(inst, adj);
  PerfectMatchingResult result;
  result.matching = to_matching(st);
  if (result.matching.pairs.size() == inst.left.size()) {
    result.success = true;
    return result;
  }
  // Hall violator: left items reachable by alternating paths from the
  // unmatched ones. All their right neighbors are matched back into the set,
  // so the neighborhood is strictly smaller.
  std::vector<char> in_set(inst.left.size(), 0);
  std::vector<char> right_seen(inst.right.size(), 0);
  std::vector<int> stack;
  for (size_t l = 0; l < inst.left.size(); ++l) {
    if (st.match_left[l] == -1) {
      in_set[l] = 1;
      stack.push_back(static_cast<int>(l));
    }
  }
  while (!stack.empty()) {
    int l = stack.back();
    stack.pop_back();
    for (int r : adj[l]) {
      if (right_seen[r]) continue;
      right_seen[r] = 1;
      int l2 = st.match_right[r];
      if (l2 != -1 && !in_set[l2]) {
        in_set[l2] = 1;
        stack.push_back(l2);
      }
    }
  }
  for (size_t l = 0; l < inst.left.size(); ++l) {
    if (in_set[l]) result.hall_violator.push_back(static_cast<int>(l));
  }
  return result;
}

}  // namespace bchrome
