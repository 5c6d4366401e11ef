#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "occsim/ids.hpp"
#include "occsim/txn.hpp"

namespace occsim {

/// A base relation. The first schema attribute is the primary key; rows
/// store versioned values for the remaining attributes.
struct Relation {
  std::string name;
  std::vector<std::string> schema;  // schema[0] is the primary key
  std::map<std::int64_t, std::map<std::string, VersionedValue>> rows;

  const std::string& primary_key() const { return schema.front(); }
};

/// Builds a relation from (key, values-per-non-key-attribute) tuples.
/// Throws DuplicateRowKey / InvalidSpec on arity mismatch.
Relation make_relation(std::string name, std::vector<std::string> schema,
                       const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>& rows);

struct WriteImage {
  VersionedValue before;
  VersionedValue after;

  bool operator==(const WriteImage&) const = default;
};

/// Identity of a commit, kept in the log so the verifier can re-execute
/// the transaction's logic independently of the live run.
struct CommitMeta {
  InstanceId instance{0};
  SiteId site;
  std::string txn_type_id;
  TxnParams params;
};

struct CommitRecord {
  std::uint64_t seq{0};  // gapless, strictly increasing from 1
  CommitMeta meta;
  std::map<DataItemId, std::uint64_t> read_versions;
  std::map<DataItemId, WriteImage> writes;  // with before-images
  Timestamp at{0};
};

/// The fixed-host database server: authoritative versioned relations plus
/// the commit log. Mutation is serialized through the simulation's event
/// loop; there is no internal locking.
class DbsStore {
 public:
  /// Throws DuplicateRelation / DuplicateRowKey; all loaded versions are 0.
  static DbsStore load_initial(std::vector<Relation> relations);

  /// Values and versions as currently stored; the store is unchanged.
  /// Throws UnknownDataItem.
  std::map<DataItemId, VersionedValue> extract_fragment(const std::set<DataItemId>& items) const;

  /// Applies a validated write set: each written item's value is replaced
  /// and its version set to the new commit_seq; a log entry with
  /// before-images is appended. Read-only commits still consume a seq.
  /// Throws UnknownDataItem.
  std::uint64_t apply_commit(const CommitMeta& meta,
                             const std::map<DataItemId, std::uint64_t>& read_versions,
                             const std::map<DataItemId, std::int64_t>& write_set,
                             Timestamp now);

  /// Version of the last committed write of `item`, 0 if never written.
  /// Throws UnknownDataItem.
  std::uint64_t latest_version(const DataItemId& item) const;

  /// Throws UnknownDataItem.
  VersionedValue read(const DataItemId& item) const;

  bool has_item(const DataItemId& item) const;
  bool has_row(const std::string& relation, std::int64_t row_key) const;

  const Relation& relation(const std::string& name) const;

  /// All addressable items, in canonical order.
  std::vector<DataItemId> all_items() const;

  struct State {
    std::vector<Relation> relations;
    std::vector<CommitRecord> log;
    std::uint64_t next_seq{1};
  };

  /// Mirror-copy primitive: snapshot captures the full state; restore
  /// reproduces it bit-identically, replacing whatever was there.
  State snapshot() const { return state_; }
  void restore(State s) { state_ = std::move(s); }

  const std::vector<CommitRecord>& log() const { return state_.log; }
  const std::vector<Relation>& relations() const { return state_.relations; }
  const std::vector<Relation>& initial_relations() const { return initial_; }

 private:
  const VersionedValue* find(const DataItemId& item) const;
  VersionedValue* find(const DataItemId& item);

  State state_;
  std::vector<Relation> initial_;  // as loaded, for replay oracles
};

}  // namespace occsim
