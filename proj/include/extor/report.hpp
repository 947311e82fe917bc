#pragma once

#include <json.hpp>

#include "extor/scenario.hpp"

namespace extor {

inline constexpr const char* kToolName = "extor";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json hf_to_json(const HilbertFunction& hf);
nlohmann::json verdict_to_json(const Verdict& v, const std::string& check,
                               const std::string& target);

// Shared report skeleton: deterministic for a fixed scenario + version.
nlohmann::json report_skeleton(const std::string& command, const Scenario& sc,
                               const std::string& order_name, int degree_bound,
                               const std::vector<std::string>& targets);

// Human-readable rendering of a report object.
std::string render_report_text(const nlohmann::json& report);

}  // namespace extor
