#include "occsim/engine.hpp"

#include <sstream>

#include "occsim/errors.hpp"

namespace occsim {

const char* SimEvent::kind_name() const {
  switch (body.index()) {
    case 0: return "MessageDelivery";
    case 1: return "ComputeDone";
    case 2: return "ConnectivityChange";
    case 3: return "CellMove";
    case 4: return "BroadcastTick";
    case 5: return "WorkloadArrival";
  }
  return "?";
}

void Trace::add(Timestamp time, std::string kind, std::string actor, InstanceId instance,
                std::string detail) {
  records_.push_back(
      TraceRecord{time, std::move(kind), std::move(actor), instance, std::move(detail)});
}

std::string Trace::to_text() const {
  std::ostringstream out;
  for (const auto& r : records_) {
    out << r.time << '\t' << r.kind << '\t' << r.actor << '\t';
    if (r.instance >= 0) {
      out << r.instance;
    } else {
      out << '-';
    }
    out << '\t' << r.detail << '\n';
  }
  return out.str();
}

void Engine::schedule(Timestamp fire_at, EventBody body) {
  if (fire_at < clock_) {
    throw SchedulingIntoPast("cannot schedule at " + std::to_string(fire_at) +
                             ", clock is at " + std::to_string(clock_));
  }
  queue_.push(SimEvent{fire_at, next_seq_++, std::move(body)});
}

void Engine::run_until_quiescence(EventHandler& handler) { run(handler, std::nullopt); }

void Engine::run_until(Timestamp end, EventHandler& handler) { run(handler, end); }

void Engine::run(EventHandler& handler, std::optional<Timestamp> end) {
  for (;;) {
    // Once every event at the current instant has fired, give the handler
    // its end-of-tick pass (same-instant commit batches flush here).
    if (queue_.empty() || queue_.top().fire_at > clock_) {
      if (handler.flush_tick(clock_)) continue;
    }
    if (queue_.empty()) break;
    if (end && queue_.top().fire_at > *end) break;
    SimEvent event = queue_.top();
    queue_.pop();
    clock_ = event.fire_at;
    handler.handle(event);
  }
}

}  // namespace occsim
