#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bchrome/connectivity.hpp"
#include "bchrome/graph.hpp"
#include "bchrome/matching.hpp"

namespace bchrome {

// Vertex coloring with colors 1..k; 0 marks an uncolored vertex.
struct Coloring {
  int k = 0;
  std::vector<int> colors;

  bool total() const {
    for (int c : colors) {
      if (c == 0) return false;
    }
    return true;
  }
  bool operator==(const Coloring&) const = default;
};

// One vertex per color whose neighborhood carries every other color.
struct BCertificate {
  std::vector<int> dominating;  // dominating[c-1] realizes color c
  bool operator==(const BCertificate&) const = default;
};

struct CertifyResult {
  bool ok = false;
  BCertificate certificate;            // complete when ok
  std::vector<int> undominated_colors; // every color with no dominating vertex
};

// One matching-driven coloring step: the pivot vertex whose neighborhood is
// being completed, its uncolored neighbors outside the anchor's closed
// neighborhood, the colors they must take, and the solved assignment.
struct MatchingStep {
  int pivot = -1;
  std::vector<int> candidates;  // vertices to color, ascending
  std::vector<int> colors;      // colors to place, ascending
  std::vector<int> scope;       // vertices whose colors constrain this step
  BipartiteInstance instance;
  Matching matching;
  std::vector<std::pair<int, int>> applied;  // (vertex, color)
};

// Complete audit trail of the construction; replaying the recorded
// assignments reproduces the final coloring exactly.
struct ConstructionTrace {
  EdgeCut cut;
  ComponentDecomposition decomposition;
  std::array<int, 2> component_ids{-1, -1};
  std::array<int, 2> anchors{-1, -1};
  std::vector<std::pair<int, int>> stage1_seed;
  std::vector<int> x_order;
  std::vector<MatchingStep> stage1;
  std::vector<int> y_order;        // sorted by descending cross-edge count
  std::vector<int> y_cross_edges;  // aligned with y_order
  std::vector<int> z_list;
  std::vector<std::pair<int, int>> stage2_seed;
  std::vector<MatchingStep> stage2;
  std::vector<std::pair<int, int>> greedy;
};

// A matching failed or a derived internal check did not hold. Carries the
// trace up to the failure point; this is evidence, never silently retried.
class ConstructionFailure : public std::runtime_error {
 public:
  explicit ConstructionFailure(const std::string& what,
                               std::shared_ptr<const ConstructionTrace> trace = {})
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const ConstructionTrace* trace() const { return trace_.get(); }

 private:
  std::shared_ptr<const ConstructionTrace> trace_;
};

struct ConstructionResult {
  Coloring coloring;
  BCertificate certificate;
  ConstructionTrace trace;
};

// No edge has both endpoints assigned the same color; unassigned vertices
// are ignored.
bool is_proper(const Graph& g, const Coloring& c);

// v is assigned and its neighborhood carries every color of 1..k except its
// own. Partial colorings allowed.
bool is_color_dominating(const Graph& g, const Coloring& c, int v, int k);

// Certificate with the smallest dominating vertex per color, or the list of
// colors that fail. Requires c total and proper.
CertifyResult certify_b_coloring(const Graph& g, const Coloring& c);

// Exact b-chromatic number by backtracking over candidate dominating sets,
// searching k from max_degree+1 downward and returning the first feasible k.
// Requires n <= limit_n.
int exact_phi(const Graph& g, int limit_n = 16);

// A vertex of the component, outside the boundary, with at most 2 boundary
// neighbors; minimizes the boundary-neighbor count, ties to smallest label.
// Throws ConstructionFailure when no vertex qualifies.
int find_anchor(const Graph& g, const std::vector<int>& component,
                const std::vector<int>& boundary);

// Completes a proper partial coloring greedily: ascending label, smallest
// color of 1..k absent from the colored neighborhood.
Coloring greedy_extend(const Graph& g, Coloring partial, int k);

// The staged (d+1)-color b-coloring for a connected d-regular C4-free graph
// (d >= 4) that is not super-edge-connected. The returned certificate is
// revalidated from scratch before returning.
ConstructionResult construct_bcoloring(const Graph& g);

// Applies the assignments recorded in a trace, in order, and returns the
// resulting coloring. Throws ConstructionFailure on any conflicting or
// duplicate assignment.
Coloring replay_trace(const Graph& g, const ConstructionTrace& trace, int k);

}  // namespace bchrome
