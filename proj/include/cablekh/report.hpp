#pragma once

// JSON and aligned-text renderings of Betti tables and detection reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "cablekh/homology.hpp"
#include "cablekh/invariants.hpp"

namespace cablekh {

nlohmann::json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

/// Schema: {name, crossings, cable_crossings, betti: [{i, j, rank}],
/// total_rank, reduced_rank, euler: [{exp, coeff}], verdict,
/// colored_interval: [lo, hi], checks: [{name, pass}], timings_ms, error}.
/// Absent verdict / interval serialize as null.
nlohmann::json report_to_json(const DetectionReport& r);
/// Inverse of report_to_json; throws InputError on a malformed document.
DetectionReport report_from_json(const nlohmann::json& j);

/// Grid of ranks: one row per quantum degree (descending), one column per
/// homological degree.
std::string format_betti_grid(const BettiTable& t);

/// One aligned row per report, with a header line.
std::string format_report_table(const std::vector<DetectionReport>& reports);

}  // namespace cablekh
