#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace bchrome {

// Bipartite matching instance over abstract items. left/right hold the item
// labels (vertex ids, colors, ...); edges are (left index, right index)
// pairs. u_star/v_star optionally mark one exceptional item per side that is
// exempt from the half-degree hypothesis and only needs positive degree.
struct BipartiteInstance {
  std::vector<int> left;
  std::vector<int> right;
  std::vector<std::pair<int, int>> edges;
  std::optional<int> u_star;  // left index
  std::optional<int> v_star;  // right index
  bool operator==(const BipartiteInstance&) const = default;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (left index, right index)
  bool operator==(const Matching&) const = default;
};

// Maximum-cardinality matching by augmenting-path search, scanning left
// items in ascending index and neighbors in ascending right index, so equal
// inputs produce identical matchings.
Matching max_matching(const BipartiteInstance& inst);

// Equal part sizes; every non-exceptional item has degree >= |right|/2; the
// exceptional items, when designated, have positive degree. Sufficient for a
// perfect matching to exist.
bool lemma2_hypotheses_hold(const BipartiteInstance& inst);

struct PerfectMatchingResult {
  bool success = false;
  Matching matching;                // perfect when success
  std::vector<int> hall_violator;   // left indices with |N(S)| < |S| otherwise
};

// Perfect matching, or a Hall violator extracted from the left items
// reachable by alternating paths from the unmatched ones. Requires equal
// part sizes.
PerfectMatchingResult perfect_matching_or_fail(const BipartiteInstance& inst);

}  // namespace bchrome
