#include "occsim/network.hpp"

#include <algorithm>

#include "occsim/errors.hpp"

namespace occsim {

Link::Link(Actor a, Actor b, LinkDir a_to_b, LinkDir b_to_a, std::vector<OutageWindow> outages)
    : a_(a), b_(b), ab_(a_to_b), ba_(b_to_a), outages_(std::move(outages)) {
  if (ab_.bytes_per_ms <= 0 || ba_.bytes_per_ms <= 0) {
    throw InvalidSpec("link " + a.name() + "<->" + b.name() + " has a nonpositive rate");
  }
  if (ab_.latency_ms < 0 || ba_.latency_ms < 0) {
    throw InvalidSpec("link " + a.name() + "<->" + b.name() + " has a negative latency");
  }
  std::sort(outages_.begin(), outages_.end(),
            [](const OutageWindow& x, const OutageWindow& y) { return x.start < y.start; });
}

bool Link::connects(Actor x, Actor y) const {
  return (a_ == x && b_ == y) || (a_ == y && b_ == x);
}

Timestamp Link::deliver_at(Actor from, Timestamp send_time, std::size_t size) {
  const bool forward = from == a_;
  const LinkDir& dir = forward ? ab_ : ba_;
  const auto size_ms =
      static_cast<Timestamp>((size + dir.bytes_per_ms - 1) / dir.bytes_per_ms);
  Timestamp at = send_time + dir.latency_ms + size_ms;
  // Outage windows defer, never drop; they may chain.
  for (const auto& w : outages_) {
    if (at >= w.start && at < w.end) at = w.end;
  }
  Timestamp& last = forward ? last_ab_ : last_ba_;
  at = std::max(at, last);  // FIFO per direction
  last = at;
  LinkStats& stats = forward ? stats_ab_ : stats_ba_;
  stats.messages += 1;
  stats.bytes += size;
  return at;
}

const LinkStats& Link::stats_from(Actor from) const {
  return from == a_ ? stats_ab_ : stats_ba_;
}

TrafficDirection classify_traffic(Actor from, Actor to) {
  if (from.is_host()) return TrafficDirection::Uplink;
  if (to.is_host()) return TrafficDirection::Downlink;
  return TrafficDirection::InterBs;
}

void Network::add_link(Link link) {
  links_.push_back(std::move(link));
}

Link* Network::find_link(Actor x, Actor y) {
  for (auto& link : links_) {
    if (link.connects(x, y)) return &link;
  }
  return nullptr;
}

bool Network::has_link(Actor x, Actor y) const {
  return const_cast<Network*>(this)->find_link(x, y) != nullptr;
}

Timestamp Network::send(const Message& msg, Timestamp now, Engine& engine) {
  Link* link = find_link(msg.sender, msg.receiver);
  if (!link) {
    throw NoSuchLink("no link " + msg.sender.name() + " <-> " + msg.receiver.name());
  }
  const std::size_t size = message_size_bytes(msg);
  const Timestamp at = link->deliver_at(msg.sender, now, size);
  switch (classify_traffic(msg.sender, msg.receiver)) {
    case TrafficDirection::Uplink:
      totals_.uplink_messages += 1;
      totals_.uplink_bytes += size;
      break;
    case TrafficDirection::Downlink:
      totals_.downlink_messages += 1;
      totals_.downlink_bytes += size;
      break;
    case TrafficDirection::InterBs:
      totals_.inter_bs_messages += 1;
      totals_.inter_bs_bytes += size;
      break;
  }
  engine.schedule(at, MessageDelivery{msg});
  return at;
}

void Network::park(Message msg) { parked_[msg.receiver.id].push_back(std::move(msg)); }

std::vector<Message> Network::take_parked(SiteId site) {
  auto it = parked_.find(site.v);
  if (it == parked_.end()) return {};
  std::vector<Message> out(it->second.begin(), it->second.end());
  parked_.erase(it);
  return out;
}

bool Network::has_parked(SiteId site) const {
  auto it = parked_.find(site.v);
  return it != parked_.end() && !it->second.empty();
}

}  // namespace occsim
