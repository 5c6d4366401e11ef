#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "occsim/coordinator.hpp"
#include "occsim/engine.hpp"
#include "occsim/host.hpp"
#include "occsim/metrics.hpp"
#include "occsim/network.hpp"
#include "occsim/store.hpp"
#include "occsim/workload.hpp"

namespace occsim {

struct CellSetup {
  CellId cell;
  BaseStationId bs;
};

struct HostSetup {
  SiteId site;
  CellId cell;
  Timestamp compute_delay_ms{1000};
};

/// A fully resolved simulated world: database, catalog, topology, link
/// parameters and the strategy under test.
struct WorldConfig {
  std::vector<Relation> relations;
  TransactionInfoRegistry registry;
  std::vector<CellSetup> cells;
  std::vector<HostSetup> hosts;

  LinkDir host_up{50, 1};    // host -> base station
  LinkDir host_down{50, 8};  // base station -> host
  LinkDir bs_bs{20, 8};      // between base stations, symmetric
  std::vector<OutageWindow> host_link_outages;  // applied to every host link

  Strategy strategy{Strategy::MulticastRestart};
  int restart_cap{0};  // 0 = unlimited
  Timestamp broadcast_period_ms{1000};
  bool backward_validation{true};

  // Arrivals at disconnected hosts are deferred to the end of the covering
  // window; the windows must match the scheduled ConnectivityChange actions.
  std::vector<DisconnectWindow> disconnect_windows;

  // Broadcast ticks stop after this bound (defaults to the last action time).
  Timestamp workload_duration_ms{0};
};

struct RunResult {
  Trace trace;
  RunMetrics metrics;
  std::vector<Relation> initial_relations;
  std::vector<CommitRecord> commit_log;
  DbsStore::State final_state;
  Timestamp end_time{0};
  std::size_t table_rows_left{0};
  std::vector<InstanceId> rows_left_instances;
};

/// Binds hosts, coordinators, network and engine into one deterministic
/// single-threaded run. Distinct Simulations share nothing and may run in
/// parallel.
class Simulation : public EventHandler, public HostEnv {
 public:
  Simulation(WorldConfig world, std::vector<ScheduledAction> actions);

  RunResult run();

  // EventHandler
  void handle(const SimEvent& event) override;
  bool flush_tick(Timestamp now) override;

  // HostEnv
  void send(Message msg) override;
  void schedule_compute(SiteId site, InstanceId instance, int generation,
                        Timestamp at) override;
  void note(Timestamp time, std::string kind, std::string actor, InstanceId instance,
            std::string detail) override;

  const FixedHost& fixed_host() const { return fixed_; }
  const RunMetrics& metrics() const { return metrics_; }
  Engine& engine() { return engine_; }
  const MobileHost& host(SiteId site) const;
  const Coordinator& coordinator(BaseStationId bs) const;

 private:
  void build_world();
  void on_delivery(const Message& msg, Timestamp now);
  void deliver_to_host(const Message& msg, Timestamp now);
  void deliver_to_bs(const Message& msg, Timestamp now);
  void on_arrival(const WorkloadArrival& arrival, Timestamp now);
  void on_connectivity(const ConnectivityChange& change, Timestamp now);
  void on_cell_move(const CellMove& move, Timestamp now);
  void on_broadcast_tick(Timestamp now);
  void apply_decision(Coordinator& coord, const CommitDecision& decision, Timestamp now);
  void route_to_host(BaseStationId from_bs, SiteId site, MessagePayload payload,
                     Timestamp now);
  Timestamp deferred_arrival_time(SiteId site, Timestamp at) const;
  MobileHost& host_mut(SiteId site);
  Coordinator& coordinator_mut(BaseStationId bs);
  BaseStationId bs_of_cell(CellId cell) const;

  WorldConfig world_;
  std::vector<ScheduledAction> actions_;

  Engine engine_;
  Network network_;
  FixedHost fixed_;
  std::map<BaseStationId, Coordinator> coordinators_;
  std::map<SiteId, std::unique_ptr<MobileHost>> hosts_;
  RunMetrics metrics_;
  InstanceId next_instance_{1};
  Timestamp duration_{0};
};

}  // namespace occsim
