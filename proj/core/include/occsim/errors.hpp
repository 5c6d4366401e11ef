#pragma once

#include <stdexcept>
#include <string>

namespace occsim {

struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateRelation : SimError { using SimError::SimError; };
struct DuplicateRowKey : SimError { using SimError::SimError; };
struct UnknownDataItem : SimError { using SimError::SimError; };
struct UnknownTransactionType : SimError { using SimError::SimError; };
struct UnknownInstance : SimError { using SimError::SimError; };
struct DisconnectedHost : SimError { using SimError::SimError; };
struct IllegalTransition : SimError { using SimError::SimError; };
struct SchedulingIntoPast : SimError { using SimError::SimError; };
struct NoSuchLink : SimError { using SimError::SimError; };
struct InvalidSpec : SimError { using SimError::SimError; };
struct InconsistentHistory : SimError { using SimError::SimError; };

}  // namespace occsim
