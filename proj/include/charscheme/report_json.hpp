#pragma once

#include <json.hpp>
#include <string>

#include "charscheme/analysis.hpp"
#include "charscheme/sweep.hpp"

namespace charscheme {

nlohmann::json params_to_json(const SeifertParams& s);
nlohmann::json point_to_json(const CharacterPoint& pt);
nlohmann::json census_to_json(const Census& c);
nlohmann::json ideal_to_json(const IdealPresentation& pres);
nlohmann::json report_to_json(const SchemeReport& rep);
nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows);

/// Parse a census/report payload into typed values and re-emit it; the
/// result equals the input whenever the payload follows the schema. Used by
/// the round-trip tests and as a schema check.
nlohmann::json census_json_roundtrip(const nlohmann::json& j);
nlohmann::json report_json_roundtrip(const nlohmann::json& j);

std::string census_text(const Census& c);
std::string report_text(const SchemeReport& rep);
std::string sweep_text(const std::vector<SweepRow>& rows);

}  // namespace charscheme
