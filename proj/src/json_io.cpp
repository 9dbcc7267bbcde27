#include "bchrome/json_io.hpp"

#include "bchrome/errors.hpp"

namespace bchrome {

namespace {

nlohmann::json edges_to_json(const std::vector<std::pair<int, int>>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

nlohmann::json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  return edges_to_json(pairs);
}

}  // namespace

nlohmann::json coloring_to_json(const Coloring& c) {
  return nlohmann::json{{"k", c.k}, {"colors", c.colors}};
}

Coloring coloring_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("colors") ||
      !j["k"].is_number_integer() || !j["colors"].is_array()) {
    throw PreconditionError(Precondition::bad_argument,
                            "coloring JSON must be {\"k\": int, \"colors\": "
                            "[int,...]}");
  }
  Coloring c;
  c.k = j["k"].get<int>();
  if (c.k < 0) {
    throw PreconditionError(Precondition::bad_argument,
                            "coloring JSON k must be nonnegative");
  }
  for (const auto& entry : j["colors"]) {
    if (!entry.is_number_integer()) {
      throw PreconditionError(Precondition::bad_argument,
                              "coloring JSON colors must be integers");
    }
    int color = entry.get<int>();
    if (color < 0 || color > c.k) {
      throw PreconditionError(Precondition::bad_argument,
                              "coloring JSON color " + std::to_string(color) +
                                  " outside 0.." + std::to_string(c.k));
    }
    c.colors.push_back(color);
  }
  return c;
}

nlohmann::json certificate_to_json(const BCertificate& cert) {
  nlohmann::json dom = nlohmann::json::object();
  for (std::size_t i = 0; i < cert.dominating.size(); ++i) {
    dom[std::to_string(i + 1)] = cert.dominating[i];
  }
  return nlohmann::json{{"dominating", dom}};
}

BCertificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dominating") ||
      !j["dominating"].is_object()) {
    throw PreconditionError(Precondition::bad_argument,
                            "certificate JSON must be {\"dominating\": "
                            "{\"1\": v, ...}}");
  }
  const auto& dom = j["dominating"];
  BCertificate cert;
  cert.dominating.assign(dom.size(), -1);
  for (const auto& [key, value] : dom.items()) {
    int color = 0;
    try {
      color = std::stoi(key);
    } catch (const std::exception&) {
      color = 0;
    }
    if (color < 1 || color > static_cast<int>(dom.size()) ||
        !value.is_number_integer()) {
      throw PreconditionError(Precondition::bad_argument,
                              "certificate JSON keys must be colors 1..k");
    }
    cert.dominating[color - 1] = value.get<int>();
  }
  return cert;
}

nlohmann::json edge_cut_to_json(const EdgeCut& cut) {
  return nlohmann::json{{"edges", edges_to_json(cut.edges)},
                        {"side_s", cut.side_s},
                        {"side_t", cut.side_t}};
}

nlohmann::json cut_report_to_json(const CutReport& report) {
  nlohmann::json j{{"lambda", report.lambda},
                   {"super_edge_connected", report.super_edge_connected},
                   {"witness_edges", edges_to_json(report.witness.edges)}};
  if (report.nontrivial_witness) {
    j["nontrivial_witness_edges"] =
        edges_to_json(report.nontrivial_witness->edges);
  } else {
    j["nontrivial_witness_edges"] = nullptr;
  }
  return j;
}

nlohmann::json analyze_report_to_json(const AnalyzeReport& r) {
  nlohmann::json j{{"n", r.n},
                   {"m", r.m},
                   {"has_c4", r.has_c4},
                   {"connected", r.connected},
                   {"theorem_applies", r.theorem_applies}};
  j["regular_degree"] =
      r.regular_degree ? nlohmann::json(*r.regular_degree) : nullptr;
  j["girth"] = r.girth ? nlohmann::json(*r.girth) : nullptr;
  j["lambda"] = r.lambda ? nlohmann::json(*r.lambda) : nullptr;
  j["super_edge_connected"] = r.super_edge_connected
                                  ? nlohmann::json(*r.super_edge_connected)
                                  : nullptr;
  j["nontrivial_min_cut"] = r.nontrivial_min_cut
                                ? edges_to_json(r.nontrivial_min_cut->edges)
                                : nlohmann::json(nullptr);
  return j;
}

nlohmann::json matching_step_to_json(const MatchingStep& step) {
  nlohmann::json instance{{"left", step.instance.left},
                          {"right", step.instance.right},
                          {"edges", pairs_to_json(step.instance.edges)}};
  instance["u_star"] =
      step.instance.u_star ? nlohmann::json(*step.instance.u_star) : nullptr;
  instance["v_star"] =
      step.instance.v_star ? nlohmann::json(*step.instance.v_star) : nullptr;
  return nlohmann::json{{"pivot", step.pivot},
                        {"candidates", step.candidates},
                        {"colors", step.colors},
                        {"scope", step.scope},
                        {"instance", instance},
                        {"matching", pairs_to_json(step.matching.pairs)},
                        {"applied", pairs_to_json(step.applied)}};
}

nlohmann::json trace_to_json(const ConstructionTrace& trace) {
  nlohmann::json steps1 = nlohmann::json::array();
  for (const auto& s : trace.stage1) steps1.push_back(matching_step_to_json(s));
  nlohmann::json steps2 = nlohmann::json::array();
  for (const auto& s : trace.stage2) steps2.push_back(matching_step_to_json(s));
  nlohmann::json components = nlohmann::json::array();
  for (const auto& comp : trace.decomposition.components)
    components.push_back(comp);
  nlohmann::json boundary = nlohmann::json::array();
  for (const auto& slice : trace.decomposition.boundary)
    boundary.push_back(slice);
  return nlohmann::json{
      {"cut", edge_cut_to_json(trace.cut)},
      {"decomposition",
       {{"components", components},
        {"sat", trace.decomposition.sat},
        {"boundary", boundary}}},
      {"component_ids", trace.component_ids},
      {"anchors", trace.anchors},
      {"stage1_seed", pairs_to_json(trace.stage1_seed)},
      {"x_order", trace.x_order},
      {"stage1", steps1},
      {"y_order", trace.y_order},
      {"y_cross_edges", trace.y_cross_edges},
      {"z_list", trace.z_list},
      {"stage2_seed", pairs_to_json(trace.stage2_seed)},
      {"stage2", steps2},
      {"greedy", pairs_to_json(trace.greedy)}};
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace bchrome
