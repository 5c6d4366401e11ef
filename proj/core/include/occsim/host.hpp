#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>

#include "occsim/coordinator.hpp"
#include "occsim/ids.hpp"
#include "occsim/message.hpp"
#include "occsim/metrics.hpp"
#include "occsim/txn.hpp"

namespace occsim {

/// Environment a mobile host acts through: the simulation wires these to
/// the network and event queue. Tests may substitute fakes.
class HostEnv {
 public:
  virtual ~HostEnv() = default;
  virtual void send(Message msg) = 0;
  virtual void schedule_compute(SiteId site, InstanceId instance, int generation,
                                Timestamp at) = 0;
  virtual void note(Timestamp time, std::string kind, std::string actor,
                    InstanceId instance, std::string detail) {}
};

/// A mobile host: initiates transactions, executes them locally against
/// its snapshot, restarts on update reports without re-requesting data,
/// and models disconnection and cell mobility. While disconnected nothing
/// is sent; outgoing messages queue in the outbox and flush FIFO at
/// reconnect.
class MobileHost {
 public:
  MobileHost(SiteId site, CellId cell, BaseStationId bs, Timestamp compute_delay_ms,
             const TransactionInfoRegistry& registry, HostEnv& env, RunMetrics& metrics);

  SiteId site() const { return site_; }
  CellId cell() const { return cell_; }
  BaseStationId base_station() const { return bs_; }
  bool connected() const { return connected_; }
  Timestamp compute_delay_ms() const { return compute_delay_; }

  /// Creates the instance and emits the DataRequest on the uplink.
  /// Throws DisconnectedHost when offline.
  InstanceId begin_transaction(InstanceId id, const std::string& txn_type_id,
                               TxnParams params, Timestamp now);

  /// Dispatches a delivered protocol message.
  void on_message(const Message& msg, Timestamp now);

  /// Finishes local execution unless the generation was superseded by a
  /// restart; a successful run submits the commit request immediately.
  void on_compute_done(InstanceId instance, int generation, Timestamp now);

  void set_connectivity(bool connected, Timestamp now);
  void flush_outbox(Timestamp now);

  /// Re-registers with the new cell's base station. Handoff signalling is
  /// driven by the simulation, which sees both coordinators.
  void move_cell(CellId new_cell, BaseStationId new_bs);

  const std::map<InstanceId, TransactionInstance>& active() const { return active_; }
  const TransactionInstance* find_active(InstanceId id) const;
  const std::map<InstanceId, TxnState>& finished() const { return finished_; }
  std::size_t outbox_size() const { return outbox_.size(); }

 private:
  void on_data_reply(const DataReply& reply, Timestamp now);
  void on_conflict_notice(const ConflictNotice& notice, Timestamp now);
  void on_commit_ack(const CommitAck& ack, Timestamp now);
  void on_update_report(const UpdateReport& report, Timestamp now);
  void on_abort_notice(const AbortNotice& notice, Timestamp now);
  void on_invalidation(const InvalidationReport& report, Timestamp now);

  void submit_commit(TransactionInstance& txn, Timestamp now);
  void restart_with(TransactionInstance& txn, const std::map<DataItemId, VersionedValue>& fresh,
                    Timestamp new_arrival, Timestamp now);
  void finish(TransactionInstance& txn, TxnState terminal);
  void send_or_queue(Message msg);
  void purge_outbox_for(InstanceId instance);
  Message to_bs(MessagePayload payload) const;

  SiteId site_;
  CellId cell_;
  BaseStationId bs_;
  bool connected_{true};
  Timestamp compute_delay_;
  const TransactionInfoRegistry& registry_;
  HostEnv& env_;
  RunMetrics& metrics_;

  std::map<InstanceId, TransactionInstance> active_;
  std::map<InstanceId, TxnState> finished_;
  std::deque<Message> outbox_;
};

}  // namespace occsim
