#include "bchrome/report.hpp"

namespace bchrome {

AnalyzeReport analyze_graph(const Graph& g) {
  AnalyzeReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  StructureReport s = analyze_structure(g);
  r.regular_degree = s.regular_degree;
  r.girth = s.girth;
  r.has_c4 = s.has_c4;
  r.connected = s.connected;
  if (r.connected && r.n >= 2) {
    r.lambda = edge_connectivity(g).first;
    if (r.regular_degree) {
      if (r.n < 4) {
        r.super_edge_connected = true;
      } else {
        r.nontrivial_min_cut = find_nontrivial_min_cut(g, *r.regular_degree);
        r.super_edge_connected = !r.nontrivial_min_cut.has_value();
      }
    }
  }
  r.theorem_applies = r.connected && r.regular_degree &&
                      *r.regular_degree >= 4 && !r.has_c4 &&
                      r.super_edge_connected && !*r.super_edge_connected;
  return r;
}

}  // namespace bchrome
