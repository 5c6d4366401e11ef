#pragma once

#include <optional>
#include <string>
#include <vector>

#include "occsim/config.hpp"
#include "occsim/simulation.hpp"
#include "occsim/workload.hpp"

namespace occsim {

/// A runnable scenario: a world plus its time-ordered actions.
struct Scenario {
  std::string name;
  WorldConfig world;
  std::vector<ScheduledAction> actions;
};

/// Scripted builtins:
///   banking-case-i    M1 deposits before M2 withdraws; M2 restarts once
///   banking-case-ii   M2's withdrawal lands first; M1 restarts once
///   banking-case-iii  both commits arrive in the same instant; the
///                     earlier-arrived transaction wins
///   handoff-midtxn    a host moves cells mid-transaction, then commits
///                     through inter-base-station forwarding
///   offline-commit    a host disconnects, commits locally, reconnects
///                     with no intervening conflict
///   offline-restart   as above but a conflicting commit lands while the
///                     host is offline, forcing a restart at reconnect
std::optional<Scenario> builtin_scenario(const std::string& name);
std::vector<std::string> builtin_scenario_names();

/// Expands a parsed config into a scenario (generates the workload).
Scenario scenario_from_config(const RunConfig& config);

}  // namespace occsim
