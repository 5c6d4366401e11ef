#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "occsim/ids.hpp"
#include "occsim/network.hpp"

namespace occsim {

/// Per-run outcome counters and traffic totals.
/// Invariant: committed + aborted + locally_failed + starved equals the
/// number of transactions that reached a terminal state.
struct RunMetrics {
  std::uint64_t arrivals{0};
  std::uint64_t committed{0};
  std::uint64_t restarted{0};  // total restart events, not distinct instances
  std::uint64_t aborted{0};
  std::uint64_t locally_failed{0};
  std::uint64_t starved{0};
  std::uint64_t stale_reports{0};
  std::uint64_t conflict_notices{0};
  // Uplink data re-requests caused by restarts (BroadcastInvalidate only;
  // always 0 under MulticastRestart).
  std::uint64_t restart_uplink_requests{0};

  TrafficTotals traffic;

  std::vector<Timestamp> commit_latencies_ms;  // begin -> CommitAck delivery

  Timestamp end_time_ms{0};
  bool serializable{true};
  std::string verifier_note;

  std::uint64_t terminal() const {
    return committed + aborted + locally_failed + starved;
  }

  double mean_latency_ms() const;
  Timestamp median_latency_ms() const;
  Timestamp p95_latency_ms() const;
  /// Global commits per simulated second over the run span.
  double throughput_per_sec() const;
};

}  // namespace occsim
