#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "occsim/engine.hpp"
#include "occsim/ids.hpp"
#include "occsim/message.hpp"

namespace occsim {

struct LinkDir {
  std::int64_t latency_ms{0};
  std::int64_t bytes_per_ms{1};  // must be positive; validated at load
};

/// Deliveries whose computed time falls inside [start, end) are deferred
/// to `end`. Windows never drop messages.
struct OutageWindow {
  Timestamp start{0};
  Timestamp end{0};
};

struct LinkStats {
  std::uint64_t messages{0};
  std::uint64_t bytes{0};
};

/// A point-to-point link with asymmetric per-direction latency and rate.
/// Delivery time = send + latency + ceil(size / rate), pushed past any
/// covering outage window, then clamped to keep the direction FIFO.
class Link {
 public:
  Link(Actor a, Actor b, LinkDir a_to_b, LinkDir b_to_a,
       std::vector<OutageWindow> outages = {});

  Actor a() const { return a_; }
  Actor b() const { return b_; }
  bool connects(Actor x, Actor y) const;

  /// Computes the delivery time for a message of `size` bytes sent from
  /// `from` at `send_time`, updating FIFO state and byte counters.
  Timestamp deliver_at(Actor from, Timestamp send_time, std::size_t size);

  const LinkStats& stats_from(Actor from) const;

 private:
  Actor a_, b_;
  LinkDir ab_, ba_;
  std::vector<OutageWindow> outages_;  // sorted by start
  Timestamp last_ab_{-1}, last_ba_{-1};
  LinkStats stats_ab_, stats_ba_;
};

enum class TrafficDirection : std::uint8_t { Uplink, Downlink, InterBs };

/// host -> base station is uplink, base station -> host is downlink,
/// anything between fixed-network endpoints is inter-BS.
TrafficDirection classify_traffic(Actor from, Actor to);

struct TrafficTotals {
  std::uint64_t uplink_messages{0}, downlink_messages{0}, inter_bs_messages{0};
  std::uint64_t uplink_bytes{0}, downlink_bytes{0}, inter_bs_bytes{0};

  std::uint64_t total_bytes() const { return uplink_bytes + downlink_bytes + inter_bs_bytes; }
};

/// The set of links plus parking space for deliveries addressed to
/// disconnected hosts (handed back at reconnect, oldest first).
class Network {
 public:
  void add_link(Link link);
  bool has_link(Actor x, Actor y) const;

  /// Schedules a MessageDelivery on the engine and accounts the bytes.
  /// Returns the delivery time. Throws NoSuchLink.
  Timestamp send(const Message& msg, Timestamp now, Engine& engine);

  void park(Message msg);
  std::vector<Message> take_parked(SiteId site);
  bool has_parked(SiteId site) const;

  const TrafficTotals& totals() const { return totals_; }
  const std::vector<Link>& links() const { return links_; }

 private:
  Link* find_link(Actor x, Actor y);

  std::vector<Link> links_;
  std::map<std::int32_t, std::deque<Message>> parked_;  // by host site id
  TrafficTotals totals_;
};

}  // namespace occsim
