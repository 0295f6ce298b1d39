#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sfcplace/model.hpp"

namespace sfcplace {

using ordered_json = nlohmann::ordered_json;

// Parses the three scenario documents (topology, SFC list, flavor list).
// Schema and reference errors surface as InputError with a field path.
Scenario load_scenario(std::string_view topology_doc, std::string_view sfcs_doc,
                       std::string_view flavors_doc);
Scenario load_scenario_files(const std::filesystem::path& topology,
                             const std::filesystem::path& sfcs,
                             const std::filesystem::path& flavors);
// Single document {"topology": ..., "sfcs": [...], "flavors": [...]}.
Scenario load_bundle(std::string_view bundle_doc);
Scenario load_bundle_file(const std::filesystem::path& bundle);

Scenario scenario_from_json(const ordered_json& topology, const ordered_json& sfcs,
                            const ordered_json& flavors);

// Canonical documents: fixed field order, conflicts sorted.
ordered_json topology_to_json(const Topology& topology);
ordered_json sfcs_to_json(const Scenario& scenario);
ordered_json flavors_to_json(const FlavorCatalog& flavors, const std::vector<std::string>& kinds);
ordered_json bundle_to_json(const Scenario& scenario);

void save_scenario_files(const Scenario& scenario, const std::filesystem::path& dir);

// Reads a whole file; throws InputError naming the path on failure.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Rational <-> JSON number. Integers stay integers.
ordered_json rational_to_json(const Rational& r);

}  // namespace sfcplace
