#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "occsim/ids.hpp"
#include "occsim/txn.hpp"

namespace occsim {

// The closed catalog of protocol messages. Every message carries sender,
// receiver and a deterministic payload size for bandwidth accounting:
// a fixed 16-byte header plus 4 bytes per id field, 8 bytes per
// timestamp/key/amount/sequence field, 24 bytes per fragment item
// (8 id-hash + 8 value + 8 version), 16 bytes per version or write entry
// (8 id-hash + 8 payload) and 8 bytes per bare item id.

struct DataRequest {
  InstanceId instance{0};
  std::string txn_type_id;
  std::int64_t row_key{0};
};

struct DataReply {
  InstanceId instance{0};
  std::map<DataItemId, VersionedValue> fragment;
  Timestamp arrival_time{0};
};

/// Informational only: tells a requester that an earlier in-flight
/// transaction already holds intersecting items. Never blocks.
struct ConflictNotice {
  InstanceId instance{0};
  Timestamp earliest_arrival{0};
};

/// Locally committed results propagated for backward validation. Carries
/// the transaction parameters so the commit log can re-execute the
/// transaction's logic during verification.
struct CommitRequest {
  InstanceId instance{0};
  TxnParams params;
  std::map<DataItemId, std::uint64_t> read_versions;
  std::map<DataItemId, std::int64_t> write_set;  // empty for read-only
};

struct CommitAck {
  InstanceId instance{0};
  std::uint64_t commit_seq{0};
};

/// Fresh values multicast to a host whose in-flight transaction used items
/// a commit just changed; directs the host to restart with these values.
struct UpdateReport {
  InstanceId instance{0};
  std::map<DataItemId, VersionedValue> fresh_values;
  Timestamp new_arrival_time{0};
};

/// Registers, at the base station of the cell a host moved into, which
/// base station keeps commit authority for an in-flight transaction.
struct HandoffTransfer {
  InstanceId instance{0};
  BaseStationId coordinator_of_record;
};

/// Protocol traffic relayed between base stations during handoff.
struct HandoffForward {
  std::shared_ptr<const struct Message> inner;
};

enum class AbortReason : std::uint8_t {
  Conflict,  // AbortOnConflict baseline: stale at validation
  Starved,   // restart cap exhausted (any strategy)
};

struct AbortNotice {
  InstanceId instance{0};
  AbortReason reason{AbortReason::Conflict};
};

/// BroadcastInvalidate baseline: item ids changed since the last period,
/// sent to every registered host. When `target_instance` is set, this is a
/// point rejection of a stale commit rather than a periodic broadcast.
struct InvalidationReport {
  std::vector<DataItemId> changed;  // kept sorted
  InstanceId target_instance{-1};   // -1 for periodic broadcast
};

enum class MsgKind : std::uint8_t {
  DataRequest,
  DataReply,
  ConflictNotice,
  CommitRequest,
  CommitAck,
  UpdateReport,
  HandoffTransfer,
  HandoffForward,
  AbortNotice,
  InvalidationReport,
};

const char* to_string(MsgKind k);

using MessagePayload =
    std::variant<DataRequest, DataReply, ConflictNotice, CommitRequest, CommitAck,
                 UpdateReport, HandoffTransfer, HandoffForward, AbortNotice,
                 InvalidationReport>;

struct Message {
  Actor sender;
  Actor receiver;
  MessagePayload payload;

  MsgKind kind() const { return static_cast<MsgKind>(payload.index()); }

  template <class T>
  const T& as() const {
    return std::get<T>(payload);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(payload);
  }

  /// The instance the message concerns, or -1 (broadcast invalidations).
  InstanceId instance() const;
};

/// Deterministic wire size of a message; a pure function of the payload.
std::size_t message_size_bytes(const Message& msg);

/// One-line rendering for trace records, e.g. "CommitRequest 64B".
std::string describe(const Message& msg);

}  // namespace occsim
