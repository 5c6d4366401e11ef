#pragma once

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "occsim/coordinator.hpp"
#include "occsim/store.hpp"

namespace occsim {

/// Self-contained commit-log artifact: initial database, transaction
/// catalog, the ordered commits with before/after images, and the final
/// database state. Everything the verifier needs to re-audit a run.
struct CommitLogFile {
  std::vector<Relation> initial;
  TransactionInfoRegistry registry;
  std::vector<CommitRecord> commits;
  std::vector<Relation> final_relations;
};

nlohmann::json to_json(const CommitLogFile& file);
CommitLogFile commit_log_from_json(const nlohmann::json& doc);  // throws InvalidSpec

void save_commit_log(const CommitLogFile& file, const std::filesystem::path& path);
CommitLogFile load_commit_log(const std::filesystem::path& path);

}  // namespace occsim
