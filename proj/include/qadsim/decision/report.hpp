#ifndef QADSIM_DECISION_REPORT_HPP
#define QADSIM_DECISION_REPORT_HPP

#include <string>

#include <json.hpp>

#include "qadsim/decision/decide.hpp"

namespace qadsim {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const DecisionConfig& config);
/// Missing keys keep their defaults.
DecisionConfig decision_config_from_json(const nlohmann::json& j,
                                         DecisionConfig base = {});

/// Report document (`schema: 1`). Wall-clock time sits under "sidecar",
/// which content_hash() leaves out.
nlohmann::json to_json(const DecisionReport& report);
nlohmann::json to_json(const SweepResult& sweep);

/// FNV-1a 64 over the compact dump of `document` minus its "sidecar" and
/// "content_hash" members, as 16 hex digits.
std::string content_hash(const nlohmann::json& document);

/// Adds "content_hash" to the document.
void stamp_hash(nlohmann::json& document);

}  // namespace qadsim

#endif  // QADSIM_DECISION_REPORT_HPP
