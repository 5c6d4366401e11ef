#include "occsim/coordinator.hpp"

#include <algorithm>
#include <limits>

#include "occsim/errors.hpp"

namespace occsim {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::MulticastRestart: return "multicast-restart";
    case Strategy::AbortOnConflict: return "abort-on-conflict";
    case Strategy::BroadcastInvalidate: return "broadcast-invalidate";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "multicast-restart") return Strategy::MulticastRestart;
  if (name == "abort-on-conflict") return Strategy::AbortOnConflict;
  if (name == "broadcast-invalidate") return Strategy::BroadcastInvalidate;
  throw InvalidSpec("unknown strategy '" + name + "'");
}

void TransactionInfoRegistry::add(TransactionType type) {
  if (type.id.empty() || type.items.empty()) {
    throw InvalidSpec("transaction type needs an id and a non-empty item list");
  }
  if (entries_.count(type.id)) {
    throw InvalidSpec("duplicate transaction type '" + type.id + "'");
  }
  entries_.emplace(type.id, std::move(type));
}

const TransactionType& TransactionInfoRegistry::lookup(const std::string& txn_type_id) const {
  auto it = entries_.find(txn_type_id);
  if (it == entries_.end()) {
    throw UnknownTransactionType("unknown transaction type '" + txn_type_id + "'");
  }
  return it->second;
}

bool TransactionInfoRegistry::contains(const std::string& txn_type_id) const {
  return entries_.count(txn_type_id) > 0;
}

TransactionInfoRegistry TransactionInfoRegistry::banking_catalog() {
  TransactionInfoRegistry registry;
  registry.add(TransactionType{"T1", "Deposit", "Account", {"Account_no", "Amount"}});
  registry.add(TransactionType{"T2", "Withdraw", "Account", {"Account_no", "Amount"}});
  registry.add(TransactionType{"T3", "Enquiry", "Account", {"Amount"}});
  return registry;
}

void CurrentTransactionsTable::insert(CurrentTxnRow row) {
  if (find(row.instance)) {
    throw InvalidSpec("duplicate current-transactions row for instance " +
                      std::to_string(row.instance));
  }
  rows_.push_back(std::move(row));
}

CurrentTxnRow* CurrentTransactionsTable::find(InstanceId instance) {
  for (auto& row : rows_) {
    if (row.instance == instance) return &row;
  }
  return nullptr;
}

const CurrentTxnRow* CurrentTransactionsTable::find(InstanceId instance) const {
  return const_cast<CurrentTransactionsTable*>(this)->find(instance);
}

bool CurrentTransactionsTable::erase(InstanceId instance) {
  for (auto it = rows_.begin(); it != rows_.end(); ++it) {
    if (it->instance == instance) {
      rows_.erase(it);
      return true;
    }
  }
  return false;
}

std::set<DataItemId> FixedHost::instantiate_items(const std::string& txn_type_id,
                                                  std::int64_t row_key) const {
  const TransactionType& type = registry.lookup(txn_type_id);
  const Relation& rel = store.relation(type.relation);
  if (!store.has_row(type.relation, row_key)) {
    throw UnknownDataItem("unknown row " + std::to_string(row_key) + " in '" + type.relation +
                          "'");
  }
  std::set<DataItemId> items;
  for (const auto& attr : type.items) {
    if (attr == rel.primary_key()) continue;  // names the row, not a cell
    DataItemId item{type.relation, row_key, attr};
    if (!store.has_item(item)) {
      throw UnknownDataItem("unknown data item " + item.to_string());
    }
    items.insert(std::move(item));
  }
  return items;
}

std::vector<std::size_t> tie_break(const std::vector<PendingCommit>& pending,
                                   const CurrentTransactionsTable& table) {
  std::vector<std::size_t> order(pending.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  constexpr Timestamp kNoRow = std::numeric_limits<Timestamp>::max();
  auto key = [&](std::size_t i) {
    const CurrentTxnRow* row = table.find(pending[i].request.instance);
    if (!row) return std::tuple<Timestamp, std::int32_t>(kNoRow, 0);
    return std::tuple<Timestamp, std::int32_t>(row->arrival_time, row->site.v);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
  return order;
}

Coordinator::Coordinator(BaseStationId id, CellId cell, FixedHost& fixed,
                         CoordinatorOptions opts)
    : id_(id), cell_(cell), fixed_(fixed), opts_(opts) {}

DataRequestOutcome Coordinator::handle_data_request(const DataRequest& req, SiteId from,
                                                    Timestamp now) {
  std::set<DataItemId> items = fixed_.instantiate_items(req.txn_type_id, req.row_key);

  DataRequestOutcome outcome;
  CurrentTxnRow* existing = fixed_.table.find(req.instance);
  if (existing) {
    // Refresh for a re-requesting restart (BroadcastInvalidate path).
    existing->arrival_time = now;
    existing->data_items = items;
    outcome.is_refresh = true;
  } else {
    // Scan for in-flight transactions already holding these items; the
    // conflict is tolerated until validation, the requester just learns
    // the earliest arrival time among the holders.
    Timestamp earliest = std::numeric_limits<Timestamp>::max();
    for (const auto& row : fixed_.table.rows()) {
      bool intersects = false;
      for (const auto& item : items) {
        if (row.data_items.count(item)) {
          intersects = true;
          break;
        }
      }
      if (intersects) earliest = std::min(earliest, row.arrival_time);
    }
    if (earliest != std::numeric_limits<Timestamp>::max() &&
        opts_.strategy == Strategy::MulticastRestart) {
      outcome.conflict = ConflictNotice{req.instance, earliest};
    }
    fixed_.table.insert(CurrentTxnRow{from, req.instance, req.txn_type_id, items, now, 0});
    claim(req.instance);
  }

  outcome.reply =
      DataReply{req.instance, fixed_.store.extract_fragment(items), now};
  return outcome;
}

UpdateReport Coordinator::fresh_report(const CurrentTxnRow& row, Timestamp now) const {
  return UpdateReport{row.instance, fixed_.store.extract_fragment(row.data_items), now};
}

CommitDecision Coordinator::commit_fresh(const CommitRequest& req, const CurrentTxnRow& row,
                                         Timestamp now,
                                         std::set<InstanceId>* reported_in_batch) {
  CommitDecision decision;
  decision.kind = CommitDecision::Kind::Committed;
  decision.requester = row.site;
  CommitMeta meta{req.instance, row.site, row.txn_type_id, req.params};
  decision.commit_seq = fixed_.store.apply_commit(meta, req.read_versions, req.write_set, now);
  fixed_.table.erase(req.instance);

  if (req.write_set.empty()) return decision;  // read-only: nothing to propagate

  if (opts_.strategy == Strategy::BroadcastInvalidate) {
    for (const auto& [item, value] : req.write_set) {
      (void)value;
      fixed_.changed_since_tick.insert(item);
    }
    return decision;  // holders learn at the next periodic broadcast
  }
  if (opts_.strategy == Strategy::AbortOnConflict) {
    return decision;  // stale holders abort at their own validation
  }

  // MulticastRestart: fresh values go to exactly the in-flight transactions
  // whose items intersect the write set, bumping their arrival times.
  std::vector<InstanceId> starved_rows;
  for (auto& other : fixed_.table.rows()) {
    bool intersects = false;
    for (const auto& [item, value] : req.write_set) {
      (void)value;
      if (other.data_items.count(item)) {
        intersects = true;
        break;
      }
    }
    if (!intersects) continue;
    if (opts_.restart_cap > 0 && other.restarts_sent >= opts_.restart_cap) {
      decision.starved_others.push_back(StarveEvent{other.site, other.instance});
      starved_rows.push_back(other.instance);
      continue;
    }
    other.restarts_sent += 1;
    other.arrival_time = now;
    decision.reports.push_back(OutboundReport{other.site, fresh_report(other, now)});
    if (reported_in_batch) reported_in_batch->insert(other.instance);
  }
  for (InstanceId starved : starved_rows) {
    fixed_.table.erase(starved);
    fixed_.starved_instances.insert(starved);
  }
  return decision;
}

CommitDecision Coordinator::commit_stale(const CommitRequest& req, CurrentTxnRow& row,
                                         Timestamp now,
                                         std::set<InstanceId>* reported_in_batch) {
  CommitDecision decision;
  decision.requester = row.site;

  switch (opts_.strategy) {
    case Strategy::AbortOnConflict:
      decision.kind = CommitDecision::Kind::Aborted;
      fixed_.table.erase(req.instance);
      return decision;

    case Strategy::BroadcastInvalidate: {
      if (opts_.restart_cap > 0 && row.restarts_sent >= opts_.restart_cap) {
        decision.kind = CommitDecision::Kind::Starved;
        fixed_.table.erase(req.instance);
        fixed_.starved_instances.insert(req.instance);
        return decision;
      }
      row.restarts_sent += 1;
      decision.kind = CommitDecision::Kind::StaleReject;
      for (const auto& item : row.data_items) {
        auto it = req.read_versions.find(item);
        const std::uint64_t read = it == req.read_versions.end() ? 0 : it->second;
        if (read != fixed_.store.latest_version(item)) decision.stale_items.push_back(item);
      }
      return decision;
    }

    case Strategy::MulticastRestart: {
      if (reported_in_batch && reported_in_batch->count(req.instance)) {
        // A commit earlier in this same instant already sent this instance
        // fresh values; don't direct it twice.
        decision.kind = CommitDecision::Kind::Restart;
        return decision;
      }
      if (opts_.restart_cap > 0 && row.restarts_sent >= opts_.restart_cap) {
        decision.kind = CommitDecision::Kind::Starved;
        fixed_.table.erase(req.instance);
        fixed_.starved_instances.insert(req.instance);
        return decision;
      }
      row.restarts_sent += 1;
      row.arrival_time = now;
      decision.kind = CommitDecision::Kind::Restart;
      decision.restart_report = fresh_report(row, now);
      return decision;
    }
  }
  return decision;
}

CommitDecision Coordinator::handle_commit_request(const CommitRequest& req, Timestamp now,
                                                  std::set<InstanceId>* reported_in_batch) {
  CurrentTxnRow* row = fixed_.table.find(req.instance);
  if (!row) {
    if (fixed_.starved_instances.count(req.instance)) {
      return CommitDecision{};  // late traffic from a withdrawn instance
    }
    throw UnknownInstance("no current-transactions row for instance " +
                          std::to_string(req.instance));
  }

  // Backward validation: the snapshot is fresh iff every item's read
  // version still matches the latest committed version at the store.
  bool stale = false;
  if (opts_.backward_validation) {
    for (const auto& item : row->data_items) {
      auto it = req.read_versions.find(item);
      const std::uint64_t read = it == req.read_versions.end() ? 0 : it->second;
      if (read != fixed_.store.latest_version(item)) {
        stale = true;
        break;
      }
    }
  }
  return stale ? commit_stale(req, *row, now, reported_in_batch)
               : commit_fresh(req, *row, now, reported_in_batch);
}

std::vector<std::pair<SiteId, InvalidationReport>> Coordinator::broadcast_tick(
    const std::set<DataItemId>& changed) const {
  std::vector<std::pair<SiteId, InvalidationReport>> out;
  if (changed.empty()) return out;
  InvalidationReport report;
  report.changed.assign(changed.begin(), changed.end());
  for (SiteId site : hosts_) {
    out.emplace_back(site, report);  // every registered host, interested or not
  }
  return out;
}

void Coordinator::register_host(SiteId site) { hosts_.insert(site); }

void Coordinator::unregister_host(SiteId site) { hosts_.erase(site); }

void Coordinator::install_forward(InstanceId instance, BaseStationId coordinator_of_record) {
  if (coordinator_of_record == id_) {
    forwards_.erase(instance);  // moved back: direct path restored
  } else {
    forwards_[instance] = coordinator_of_record;
  }
}

void Coordinator::drop_forward(InstanceId instance) { forwards_.erase(instance); }

std::optional<BaseStationId> Coordinator::forward_target(InstanceId instance) const {
  auto it = forwards_.find(instance);
  if (it == forwards_.end()) return std::nullopt;
  return it->second;
}

void Coordinator::enqueue_commit(CommitRequest req, Timestamp delivered_at) {
  pending_.push_back(PendingCommit{std::move(req), delivered_at});
}

std::vector<PendingCommit> Coordinator::take_pending_sorted() {
  std::vector<PendingCommit> batch;
  batch.reserve(pending_.size());
  for (std::size_t idx : tie_break(pending_, fixed_.table)) {
    batch.push_back(std::move(pending_[idx]));
  }
  pending_.clear();
  return batch;
}

void Coordinator::buffer_awaiting_handoff(CommitRequest req, Timestamp at) {
  awaiting_[req.instance].push_back(PendingCommit{std::move(req), at});
}

std::vector<PendingCommit> Coordinator::take_awaiting(InstanceId instance) {
  auto it = awaiting_.find(instance);
  if (it == awaiting_.end()) return {};
  std::vector<PendingCommit> out = std::move(it->second);
  awaiting_.erase(it);
  return out;
}

bool Coordinator::awaiting_handoff(InstanceId instance) const {
  return awaiting_.count(instance) > 0;
}

}  // namespace occsim
