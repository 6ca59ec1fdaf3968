#pragma once

#include "crn/relevance.hpp"

#include <json.hpp>

#include <string>

namespace crn::cli {

inline constexpr int kSchemaVersion = 1;

/// Rationals become "p/q" strings, sets become lists of species names.
nlohmann::ordered_json to_json(const AnalysisReport& report);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
AnalysisReport report_from_json(const nlohmann::ordered_json& j);

std::string format_text(const AnalysisReport& report);

}  // namespace crn::cli
