#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qtraj/analysis.hpp"

namespace qtraj {

using ordered_json = nlohmann::ordered_json;

// A scenario document: the physical scenario plus ensemble size and seed.
struct ScenarioFile {
  Scenario scenario;
  int trajectories{1};
  std::uint64_t seed{0};
};

// Throws ParseError naming the offending key; domain preconditions are
// re-validated after parse and surface as DomainError.
ScenarioFile parse_scenario(const ordered_json& j);
ScenarioFile load_scenario(const std::filesystem::path& path);
ordered_json scenario_to_json(const ScenarioFile& sf);

ordered_json state_to_json(const State& s);

// %.17g — bit-exact round trip for 64-bit floats
std::string format_double(double x);

std::string trajectory_csv(const std::vector<TrajectoryRecord>& records,
                           bool pure_mode,
                           const std::vector<std::string>& header_comments = {});

// temp file + rename in the target directory
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace qtraj
