#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <variant>
#include <vector>

#include "occsim/ids.hpp"
#include "occsim/message.hpp"

namespace occsim {

struct MessageDelivery {
  Message msg;
};

struct ComputeDone {
  SiteId site;
  InstanceId instance{0};
  int generation{0};
};

struct ConnectivityChange {
  SiteId site;
  bool connected{true};
};

struct CellMove {
  SiteId site;
  CellId new_cell;
};

struct BroadcastTick {};

struct WorkloadArrival {
  SiteId site;
  std::string txn_type_id;
  TxnParams params;
};

using EventBody = std::variant<MessageDelivery, ComputeDone, ConnectivityChange,
                               CellMove, BroadcastTick, WorkloadArrival>;

/// A scheduled occurrence. Events fire in (fire_at, seq) order; seq is
/// assigned in scheduling order, which makes runs fully reproducible.
struct SimEvent {
  Timestamp fire_at{0};
  std::uint64_t seq{0};
  EventBody body;

  const char* kind_name() const;
};

struct TraceRecord {
  Timestamp time{0};
  std::string kind;
  std::string actor;
  InstanceId instance{-1};
  std::string detail;
};

/// Ordered record of everything that happened in a run. Rendered as
/// line-delimited text with a stable field order so goldens diff cleanly:
///   time_ms<TAB>kind<TAB>actor<TAB>instance<TAB>detail
class Trace {
 public:
  void add(Timestamp time, std::string kind, std::string actor, InstanceId instance,
           std::string detail);

  const std::vector<TraceRecord>& records() const { return records_; }
  std::string to_text() const;

 private:
  std::vector<TraceRecord> records_;
};

/// Dispatch target for fired events. `flush_tick` runs once all events at
/// the current instant have fired (and again at quiescence); it returns
/// true when it did work, which may schedule further events.
class EventHandler {
 public:
  virtual ~EventHandler() = default;
  virtual void handle(const SimEvent& event) = 0;
  virtual bool flush_tick(Timestamp now) { return false; }
};

/// Deterministic discrete-event engine: a clock and a stable priority
/// queue. Strictly single-threaded per run.
class Engine {
 public:
  explicit Engine(Timestamp start = 0) : clock_(start) {}

  /// Throws SchedulingIntoPast when fire_at precedes the clock. Events at
  /// the current instant fire before the clock advances.
  void schedule(Timestamp fire_at, EventBody body);

  Timestamp now() const { return clock_; }
  bool empty() const { return queue_.empty(); }
  std::size_t scheduled_count() const { return queue_.size(); }

  Trace& trace() { return trace_; }
  const Trace& trace() const { return trace_; }

  /// Processes events in order until the queue drains and a final flush
  /// reports no work.
  void run_until_quiescence(EventHandler& handler);

  /// As above but stops before any event later than `end`.
  void run_until(Timestamp end, EventHandler& handler);

 private:
  void run(EventHandler& handler, std::optional<Timestamp> end);

  struct Later {
    bool operator()(const SimEvent& a, const SimEvent& b) const {
      if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<SimEvent, std::vector<SimEvent>, Later> queue_;
  std::uint64_t next_seq_{0};
  Timestamp clock_{0};
  Trace trace_;
};

}  // namespace occsim
