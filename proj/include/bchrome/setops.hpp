#pragma once

#include <algorithm>
#include <vector>

// Helpers for vertex sets kept as sorted vectors of labels.

namespace bchrome {

inline bool sorted_contains(const std::vector<int>& xs, int x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

inline std::vector<int> sorted_intersect(const std::vector<int>& a,
                                         const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_subtract(const std::vector<int>& a,
                                        const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline std::vector<int> sorted_union(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline void sort_unique(std::vector<int>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace bchrome
