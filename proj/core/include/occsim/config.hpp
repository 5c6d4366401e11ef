#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "occsim/simulation.hpp"
#include "occsim/workload.hpp"

namespace occsim {

/// A parsed configuration: the world plus the workload recipe that
/// produces the action list.
struct RunConfig {
  WorldConfig world;
  WorkloadSpec workload;
  std::string name{"run"};
};

/// Parses the JSON configuration document. Validates relations, catalog,
/// topology and link rates (a nonpositive rate is rejected here), mix
/// weights and distributions; throws InvalidSpec with a field path.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// The document `parse_config` accepts, pre-populated with the banking
/// database and catalog and a hot-spot workload; serves as schema
/// reference and test fixture.
nlohmann::json example_config_json();

}  // namespace occsim
