#pragma once

// JSON records for CLI output and the sweep reader. Field names are part of
// the documented interface (docs/formats.md). Worker counts are deliberately
// not serialized: output for a fixed seed is identical for any worker count.

#include <string>
#include <vector>

#include <json.hpp>

#include "erconn/bounds.hpp"
#include "erconn/montecarlo.hpp"
#include "erconn/oracle.hpp"

namespace erconn {

nlohmann::json to_json(const McConfig& config);
nlohmann::json to_json(const McEstimate& estimate);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const NMin& value);
nlohmann::json to_json(const ExactReport& report);
nlohmann::json to_json(const SweepRow& row);
nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows);

// Inverse of to_json. Throws DomainError on missing or mistyped fields.
McConfig mc_config_from_json(const nlohmann::json& j, int workers = 1);
McEstimate mc_estimate_from_json(const nlohmann::json& j);
BoundReport bound_report_from_json(const nlohmann::json& j);
SweepRow sweep_row_from_json(const nlohmann::json& j, int workers = 1);
// Accepts either {"rows": [...]} or a single row object.
std::vector<SweepRow> read_sweep_json(const std::string& text, int workers = 1);

}  // namespace erconn
