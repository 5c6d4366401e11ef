#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "occsim/ids.hpp"

namespace occsim {

/// Lifecycle of a transaction attempt at a mobile host.
///
/// Legal transitions:
///   Created -> Requested -> Tentative -> {LocallyCommitted, LocallyFailed}
///   LocallyCommitted -> AwaitingGlobal -> {GloballyCommitted, Restarting, Aborted}
///   Tentative <-> Restarting
/// Starved is the terminal reached when a configured restart cap is
/// exhausted; it is reachable from Tentative and AwaitingGlobal and is
/// never counted as an abort.
enum class TxnState : std::uint8_t {
  Created,
  Requested,
  Tentative,
  LocallyCommitted,
  AwaitingGlobal,
  Restarting,
  GloballyCommitted,
  LocallyFailed,
  Aborted,
  Starved,
};

const char* to_string(TxnState s);
bool legal_transition(TxnState from, TxnState to);
bool is_terminal(TxnState s);

/// Arguments supplied by the user at the mobile host: which row to touch
/// and, for deposits/withdrawals, the amount.
struct TxnParams {
  std::int64_t row_key{0};
  std::int64_t amount{0};

  bool operator==(const TxnParams&) const = default;
};

/// A catalog entry: one row of the Transaction_Info relation.
/// `items` lists the attribute names of `relation` the transaction touches;
/// the relation's primary-key attribute names the row and is skipped when
/// the item set is instantiated against a concrete row key.
struct TransactionType {
  std::string id;        // e.g. "T1"
  std::string name;      // e.g. "Deposit"
  std::string relation;  // e.g. "Account"
  std::vector<std::string> items;
};

/// One live execution attempt of a TransactionType at a mobile host.
struct TransactionInstance {
  InstanceId id{0};
  SiteId site;
  std::string txn_type_id;
  TxnParams params;
  TxnState state{TxnState::Created};
  Timestamp arrival_time{0};
  std::map<DataItemId, VersionedValue> snapshot;
  int restart_count{0};
  BaseStationId coordinator_of_record;

  Timestamp begin_time{0};
  // Bumped whenever a restart supersedes a pending local execution; stale
  // ComputeDone events are dropped by comparing against this.
  int compute_generation{0};

  /// Moves to `to`, throwing IllegalTransition for any move the lifecycle
  /// does not permit.
  void transition(TxnState to);
};

/// What a transaction computes locally, keyed by the catalog name.
enum class LogicKind : std::uint8_t { Deposit, Withdraw, Enquiry };

/// Resolves the local execution rule for a catalog entry.
/// Throws InvalidSpec for names outside the shipped catalog.
LogicKind logic_kind_for(const TransactionType& type);

struct LogicResult {
  bool ok{true};
  std::map<DataItemId, std::int64_t> write_set;  // empty for Enquiry
  std::string failure;                           // set when !ok
};

/// Pure local execution: same snapshot and params always yield the same
/// result. Deposit/Withdraw operate on the single mutable cell of the
/// snapshot; Withdraw fails locally when funds are insufficient.
LogicResult run_transaction_logic(LogicKind kind,
                                  const std::map<DataItemId, VersionedValue>& snapshot,
                                  const TxnParams& params);

}  // namespace occsim
