#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "occsim/coordinator.hpp"
#include "occsim/ids.hpp"
#include "occsim/store.hpp"

namespace occsim {

/// One committed transaction as seen by the verifier: reads with the
/// versions read, writes with the versions produced. Derived solely from
/// the commit log, never from coordinator internals.
struct CommittedOp {
  std::uint64_t seq{0};
  InstanceId instance{0};
  SiteId site;
  std::string txn_type_id;
  TxnParams params;
  std::map<DataItemId, std::uint64_t> reads;
  std::map<DataItemId, WriteImage> writes;
  Timestamp at{0};
};

using CommittedHistory = std::vector<CommittedOp>;  // ascending seq

CommittedHistory history_from_log(const std::vector<CommitRecord>& log);

enum class EdgeType : std::uint8_t { WriteRead, WriteWrite, ReadWrite };
const char* to_string(EdgeType t);

struct ConflictEdge {
  std::uint64_t from_seq{0};
  std::uint64_t to_seq{0};
  EdgeType type{EdgeType::WriteRead};
  DataItemId item;

  bool operator==(const ConflictEdge&) const = default;
};

struct ConflictGraph {
  std::vector<std::uint64_t> nodes;  // commit seqs, ascending
  std::vector<ConflictEdge> edges;
};

/// Standard conflict-graph construction over the committed history.
/// Throws InconsistentHistory when a read names a version no earlier
/// commit produced (and is not the initial version 0), or a before-image
/// version has no producer.
ConflictGraph build_conflict_graph(const CommittedHistory& history);

struct SerializabilityResult {
  bool acyclic{false};
  std::vector<std::uint64_t> witness;  // a topological order when acyclic
  std::vector<std::uint64_t> cycle;    // a witness cycle otherwise
  // Under this protocol the commit order itself must be a valid witness.
  bool commit_order_is_witness{false};
};

SerializabilityResult assert_serializable(const ConflictGraph& graph);

struct ReplayResult {
  bool matches{false};
  std::string divergence;  // first differing item, or replay failure
  std::map<DataItemId, VersionedValue> replayed;
};

/// Independent oracle: re-executes each commit's transaction logic
/// serially in commit order over the initial database (a plain value map,
/// not the store implementation) and compares against the final state.
ReplayResult serial_replay(const std::vector<Relation>& initial,
                           const CommittedHistory& history,
                           const TransactionInfoRegistry& registry,
                           const std::map<DataItemId, VersionedValue>& final_items);

std::map<DataItemId, VersionedValue> items_of(const std::vector<Relation>& relations);

struct VerifierReport {
  bool pass{false};
  bool acyclic{false};
  bool commit_order_is_witness{false};
  bool replay_matches{false};
  std::string detail;  // first failure, empty when pass
};

/// The full post-run audit: conflict graph acyclic, commit order a valid
/// topological witness, serial replay equal to the final database state.
VerifierReport verify_run(const std::vector<Relation>& initial,
                          const std::vector<CommitRecord>& log,
                          const TransactionInfoRegistry& registry,
                          const std::vector<Relation>& final_relations);

}  // namespace occsim
