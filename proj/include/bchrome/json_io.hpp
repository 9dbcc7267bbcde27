#pragma once

#include <string>

#include <json.hpp>

#include "bchrome/bcoloring.hpp"
#include "bchrome/connectivity.hpp"
#include "bchrome/matching.hpp"
#include "bchrome/report.hpp"

namespace bchrome {

// All serializers produce nlohmann objects whose keys are emitted in sorted
// order, so dumping the same value twice gives identical bytes.
nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const BCertificate& cert);
BCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json edge_cut_to_json(const EdgeCut& cut);
nlohmann::json cut_report_to_json(const CutReport& report);
nlohmann::json analyze_report_to_json(const AnalyzeReport& report);

nlohmann::json matching_step_to_json(const MatchingStep& step);
nlohmann::json trace_to_json(const ConstructionTrace& trace);

// One-call `dump(2)` wrapper with a trailing newline, the only JSON print
// format the CLI uses.
std::string render_json(const nlohmann::json& j);

}  // namespace bchrome
