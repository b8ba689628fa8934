#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixorder/orders.hpp"
#include "mixorder/theorems.hpp"

namespace mixorder {

using Json = nlohmann::ordered_json;

/// Grid size used when a scenario omits grid.points: MIXORDER_GRID_POINTS if set, else 2001.
/// A set but malformed variable is a FormatError.
std::size_t default_grid_points();

/// Unknown or missing keys and wrong types raise FormatError naming the key path.
Scenario scenario_from_json(const Json& doc);
Json scenario_to_json(const Scenario& s);
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

Json matrix_to_json(const ParameterMatrix& m);
Json verdict_to_json(const OrderVerdict& v);
Json report_to_json(const TheoremReport& r);
Json findings_to_json(const std::vector<TheoremReport>& reports);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Shortest round-trip-safe text would be overkill for plots; this is %.15g without locale.
std::string format_number(double v, int significant = 15);

}  // namespace mixorder
