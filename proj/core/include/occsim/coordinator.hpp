#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "occsim/ids.hpp"
#include "occsim/message.hpp"
#include "occsim/store.hpp"
#include "occsim/txn.hpp"

namespace occsim {

/// Conflict handling policy, fixed per simulation run.
enum class Strategy : std::uint8_t {
  MulticastRestart,    // restart conflicting transactions with multicast fresh values
  AbortOnConflict,     // baseline: stale transactions abort at validation
  BroadcastInvalidate, // baseline: periodic invalidation broadcasts; stale holders re-request
};

const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& name);  // throws InvalidSpec

/// The Transaction_Info relation: the catalog of transactions mobile hosts
/// may run, kept at the fixed host to avoid per-request lookups.
class TransactionInfoRegistry {
 public:
  void add(TransactionType type);  // throws InvalidSpec on duplicate id
  const TransactionType& lookup(const std::string& txn_type_id) const;  // throws UnknownTransactionType
  bool contains(const std::string& txn_type_id) const;
  const std::map<std::string, TransactionType>& entries() const { return entries_; }

  /// T1 Deposit / T2 Withdraw / T3 Enquiry over Account{Account_no, Amount}.
  static TransactionInfoRegistry banking_catalog();

 private:
  std::map<std::string, TransactionType> entries_;
};

/// One row of the Current Transactions relation.
struct CurrentTxnRow {
  SiteId site;
  InstanceId instance{0};
  std::string txn_type_id;
  std::set<DataItemId> data_items;
  Timestamp arrival_time{0};
  int restarts_sent{0};  // directives sent to this row, for the restart cap
};

/// The coordinator's ledger of in-flight transactions; the sole source of
/// conflict detection. At most one row per instance; rows leave only on
/// global commit, abort, or starvation.
class CurrentTransactionsTable {
 public:
  void insert(CurrentTxnRow row);  // throws InvalidSpec on duplicate instance
  CurrentTxnRow* find(InstanceId instance);
  const CurrentTxnRow* find(InstanceId instance) const;
  bool erase(InstanceId instance);

  const std::vector<CurrentTxnRow>& rows() const { return rows_; }
  std::vector<CurrentTxnRow>& rows() { return rows_; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<CurrentTxnRow> rows_;  // insertion order
};

/// Shared fixed-host state: the database server, the two bookkeeping
/// relations, and per-strategy scratch. All base-station coordinators in a
/// run operate on one FixedHost (the base stations are maintained at the
/// database server); access is serialized by the event loop.
struct FixedHost {
  DbsStore store;
  TransactionInfoRegistry registry;
  CurrentTransactionsTable table;

  // BroadcastInvalidate: items changed since the last broadcast tick.
  std::set<DataItemId> changed_since_tick;
  // Instances whose rows were withdrawn at the restart cap; late traffic
  // for them is dropped instead of erroring.
  std::set<InstanceId> starved_instances;
  // Host -> base station currently serving it (fixed-network knowledge,
  // maintained on registration and cell moves).
  std::map<SiteId, BaseStationId> host_bs;

  /// Instantiates a catalog entry against a row key, skipping the
  /// relation's primary-key attribute. Throws UnknownTransactionType /
  /// UnknownDataItem.
  std::set<DataItemId> instantiate_items(const std::string& txn_type_id,
                                         std::int64_t row_key) const;
};

struct CoordinatorOptions {
  Strategy strategy{Strategy::MulticastRestart};
  int restart_cap{0};               // 0 = unlimited
  bool backward_validation{true};   // disabled only by verifier-sensitivity tests
};

struct DataRequestOutcome {
  DataReply reply;
  std::optional<ConflictNotice> conflict;
  bool is_refresh{false};  // re-request for an existing row
};

/// An UpdateReport addressed to another in-flight transaction.
struct OutboundReport {
  SiteId site;
  UpdateReport report;
};

struct StarveEvent {
  SiteId site;
  InstanceId instance{0};
};

struct CommitDecision {
  enum class Kind : std::uint8_t {
    Committed,    // applied; ack + multicast below
    Restart,      // stale under MulticastRestart; restart_report unless already directed
    Aborted,      // stale under AbortOnConflict
    StaleReject,  // stale under BroadcastInvalidate; host must re-request
    Starved,      // restart cap exhausted
    Ignored,      // late traffic for a withdrawn instance
  };

  Kind kind{Kind::Ignored};
  std::uint64_t commit_seq{0};
  std::vector<OutboundReport> reports;       // Committed, MulticastRestart only
  std::vector<StarveEvent> starved_others;   // cap hits among report targets
  std::optional<UpdateReport> restart_report;
  std::vector<DataItemId> stale_items;       // StaleReject
  SiteId requester;
};

/// A commit request waiting for its tick to finish; simultaneous arrivals
/// are ordered by the arrival time of their table rows.
struct PendingCommit {
  CommitRequest request;
  Timestamp delivered_at{0};
};

/// Orders pending commits by ascending row arrival time, ties broken by
/// ascending site id, unknown rows last. Returns indices into `pending`.
std::vector<std::size_t> tie_break(const std::vector<PendingCommit>& pending,
                                   const CurrentTransactionsTable& table);

/// The per-base-station coordinator. Serves data requests, records
/// in-flight transactions, validates commits backward against the store,
/// resolves conflicts per strategy, and tracks handoff forwarding for
/// hosts that moved into its cell.
class Coordinator {
 public:
  Coordinator(BaseStationId id, CellId cell, FixedHost& fixed, CoordinatorOptions opts);

  BaseStationId id() const { return id_; }
  CellId cell() const { return cell_; }
  const CoordinatorOptions& options() const { return opts_; }

  /// Tentative-phase step: extracts the fragment, records (or refreshes)
  /// the table row, and reports the earliest intersecting arrival time
  /// when other in-flight transactions already hold the items.
  DataRequestOutcome handle_data_request(const DataRequest& req, SiteId from, Timestamp now);

  /// Commit-phase step: backward validation of read versions against the
  /// store, then commit / restart / abort / reject per strategy.
  /// `reported_in_batch` suppresses duplicate restart directives when
  /// several same-instant commits touch the same rows.
  CommitDecision handle_commit_request(const CommitRequest& req, Timestamp now,
                                       std::set<InstanceId>* reported_in_batch = nullptr);

  /// BroadcastInvalidate: one invalidation per registered host listing the
  /// changed items; empty delta means no messages.
  std::vector<std::pair<SiteId, InvalidationReport>> broadcast_tick(
      const std::set<DataItemId>& changed) const;

  // Host registration (which hosts this base station serves).
  void register_host(SiteId site);
  void unregister_host(SiteId site);
  const std::set<SiteId>& hosts() const { return hosts_; }

  // Handoff forwarding. A coordinator claims instances it served the
  // original data request for; commit requests for instances claimed by
  // another base station are wrapped and relayed there.
  void claim(InstanceId instance) { coordinated_.insert(instance); }
  bool coordinates(InstanceId instance) const { return coordinated_.count(instance) > 0; }
  void install_forward(InstanceId instance, BaseStationId coordinator_of_record);
  void drop_forward(InstanceId instance);
  std::optional<BaseStationId> forward_target(InstanceId instance) const;

  // Same-tick commit batching.
  void enqueue_commit(CommitRequest req, Timestamp delivered_at);
  bool has_pending_commits() const { return !pending_.empty(); }
  std::vector<PendingCommit> take_pending_sorted();

  // Commit requests that arrived before the handoff transfer did.
  void buffer_awaiting_handoff(CommitRequest req, Timestamp at);
  std::vector<PendingCommit> take_awaiting(InstanceId instance);
  bool awaiting_handoff(InstanceId instance) const;

 private:
  CommitDecision commit_fresh(const CommitRequest& req, const CurrentTxnRow& row,
                              Timestamp now, std::set<InstanceId>* reported_in_batch);
  CommitDecision commit_stale(const CommitRequest& req, CurrentTxnRow& row, Timestamp now,
                              std::set<InstanceId>* reported_in_batch);
  UpdateReport fresh_report(const CurrentTxnRow& row, Timestamp now) const;

  BaseStationId id_;
  CellId cell_;
  FixedHost& fixed_;
  CoordinatorOptions opts_;
  std::set<SiteId> hosts_;
  std::set<InstanceId> coordinated_;
  std::map<InstanceId, BaseStationId> forwards_;
  std::vector<PendingCommit> pending_;
  std::map<InstanceId, std::vector<PendingCommit>> awaiting_;
};

}  // namespace occsim
