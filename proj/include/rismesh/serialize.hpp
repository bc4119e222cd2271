#pragma once
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rismesh/topology.hpp"

namespace rismesh {

inline constexpr int kSchemaVersion = 1;

/// File-system failure, distinct from config/model errors for exit codes.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scenario <-> JSON. Field values round-trip exactly (angles stay in radians;
/// doubles use shortest-round-trip decimals), so serialize(parse(s)) == s.
nlohmann::ordered_json scenario_to_json(const Scenario& sc);
Scenario scenario_from_json(const nlohmann::json& j);

std::string write_text_file(const std::string& path, const std::string& content); // returns path
std::string read_text_file(const std::string& path);

/// Numeric CSV field: 9 significant digits.
std::string csv_num(double v);

} // namespace rismesh
