#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "occsim/engine.hpp"
#include "occsim/ids.hpp"

namespace occsim {

/// Deterministic generator (splitmix64 core) so workloads are reproducible
/// across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi] inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  double uniform01();
  /// Inverse-CDF exponential, rounded up to at least 1 ms.
  Timestamp exponential_ms(double mean_ms);
  /// Index into non-negative weights with at least one positive entry.
  std::size_t weighted_pick(const std::vector<double>& weights);

 private:
  std::uint64_t state_;
};

struct KeyDistribution {
  enum class Mode : std::uint8_t { Uniform, HotSpot };
  Mode mode{Mode::Uniform};
  double hot_fraction{0.8};  // share of arrivals aimed at the hot set
  int hot_keys{1};           // size of the hot set (first keys in order)
};

struct DisconnectWindow {
  SiteId site;
  Timestamp from{0};
  Timestamp to{0};
};

struct MobilityStep {
  SiteId site;
  Timestamp at{0};
  CellId to_cell;
};

/// Everything that shapes a generated workload. All randomness flows from
/// `seed`; an identical spec yields an identical workload.
struct WorkloadSpec {
  std::uint64_t seed{1};
  Timestamp duration_ms{30000};
  double mean_interarrival_ms{500.0};
  std::map<std::string, double> mix;  // txn type id -> weight
  KeyDistribution keys;
  std::int64_t amount_min{1};
  std::int64_t amount_max{500};
  std::vector<DisconnectWindow> disconnects;
  std::vector<MobilityStep> moves;
};

/// A pre-scheduled event: the common currency of generated workloads and
/// scripted scenarios.
struct ScheduledAction {
  Timestamp at{0};
  EventBody body;
};

/// Expands the spec into a deterministic, time-ordered action list over
/// the given hosts and row keys. Throws InvalidSpec on bad weights, an
/// empty host or key set, or a nonpositive mean.
std::vector<ScheduledAction> generate_workload(const WorkloadSpec& spec,
                                               const std::vector<SiteId>& hosts,
                                               const std::vector<std::int64_t>& row_keys);

}  // namespace occsim
