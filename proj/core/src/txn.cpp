#include "occsim/txn.hpp"

#include "occsim/errors.hpp"

namespace occsim {

const char* to_string(TxnState s) {
  switch (s) {
    case TxnState::Created: return "Created";
    case TxnState::Requested: return "Requested";
    case TxnState::Tentative: return "Tentative";
    case TxnState::LocallyCommitted: return "LocallyCommitted";
    case TxnState::AwaitingGlobal: return "AwaitingGlobal";
    case TxnState::Restarting: return "Restarting";
    case TxnState::GloballyCommitted: return "GloballyCommitted";
    case TxnState::LocallyFailed: return "LocallyFailed";
    case TxnState::Aborted: return "Aborted";
    case TxnState::Starved: return "Starved";
  }
  return "?";
}

bool legal_transition(TxnState from, TxnState to) {
  switch (from) {
    case TxnState::Created:
      return to == TxnState::Requested;
    case TxnState::Requested:
      return to == TxnState::Tentative;
    case TxnState::Tentative:
      return to == TxnState::LocallyCommitted || to == TxnState::LocallyFailed ||
             to == TxnState::Restarting || to == TxnState::Starved;
    case TxnState::LocallyCommitted:
      return to == TxnState::AwaitingGlobal;
    case TxnState::AwaitingGlobal:
      return to == TxnState::GloballyCommitted || to == TxnState::Restarting ||
             to == TxnState::Aborted || to == TxnState::Starved;
    case TxnState::Restarting:
      return to == TxnState::Tentative;
    case TxnState::GloballyCommitted:
    case TxnState::LocallyFailed:
    case TxnState::Aborted:
    case TxnState::Starved:
      return false;
  }
  return false;
}

bool is_terminal(TxnState s) {
  return s == TxnState::GloballyCommitted || s == TxnState::LocallyFailed ||
         s == TxnState::Aborted || s == TxnState::Starved;
}

void TransactionInstance::transition(TxnState to) {
  if (!legal_transition(state, to)) {
    throw IllegalTransition(std::string("illegal transition ") + to_string(state) + " -> " +
                            to_string(to) + " for instance " + std::to_string(id));
  }
  state = to;
}

LogicKind logic_kind_for(const TransactionType& type) {
  if (type.name == "Deposit") return LogicKind::Deposit;
  if (type.name == "Withdraw") return LogicKind::Withdraw;
  if (type.name == "Enquiry") return LogicKind::Enquiry;
  throw InvalidSpec("no local execution rule for transaction name '" + type.name + "'");
}

LogicResult run_transaction_logic(LogicKind kind,
                                  const std::map<DataItemId, VersionedValue>& snapshot,
                                  const TxnParams& params) {
  LogicResult result;
  if (kind == LogicKind::Enquiry) return result;  // read-only

  if (snapshot.size() != 1) {
    throw InvalidSpec("deposit/withdraw expects exactly one mutable cell, got " +
                      std::to_string(snapshot.size()));
  }
  const auto& [item, current] = *snapshot.begin();
  if (kind == LogicKind::Deposit) {
    result.write_set[item] = current.value + params.amount;
    return result;
  }
  // Withdraw
  if (current.value < params.amount) {
    result.ok = false;
    result.failure = "insufficient funds: " + std::to_string(current.value) + " < " +
                     std::to_string(params.amount);
    return result;
  }
  result.write_set[item] = current.value - params.amount;
  return result;
}

}  // namespace occsim
