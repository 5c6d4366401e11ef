#include "occsim/message.hpp"

namespace occsim {

namespace {
constexpr std::size_t kHeaderBytes = 16;
constexpr std::size_t kIdBytes = 4;
constexpr std::size_t kWordBytes = 8;           // timestamps, keys, amounts, seqs
constexpr std::size_t kFragmentItemBytes = 24;  // id-hash + value + version
constexpr std::size_t kEntryBytes = 16;         // id-hash + one word
constexpr std::size_t kItemIdBytes = 8;
}  // namespace

const char* to_string(MsgKind k) {
  switch (k) {
    case MsgKind::DataRequest: return "DataRequest";
    case MsgKind::DataReply: return "DataReply";
    case MsgKind::ConflictNotice: return "ConflictNotice";
    case MsgKind::CommitRequest: return "CommitRequest";
    case MsgKind::CommitAck: return "CommitAck";
    case MsgKind::UpdateReport: return "UpdateReport";
    case MsgKind::HandoffTransfer: return "HandoffTransfer";
    case MsgKind::HandoffForward: return "HandoffForward";
    case MsgKind::AbortNotice: return "AbortNotice";
    case MsgKind::InvalidationReport: return "InvalidationReport";
  }
  return "?";
}

InstanceId Message::instance() const {
  return std::visit(
      [](const auto& p) -> InstanceId {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HandoffForward>) {
          return p.inner ? p.inner->instance() : -1;
        } else if constexpr (std::is_same_v<T, InvalidationReport>) {
          return p.target_instance;
        } else {
          return p.instance;
        }
      },
      payload);
}

std::size_t message_size_bytes(const Message& msg) {
  return kHeaderBytes +
         std::visit(
             [](const auto& p) -> std::size_t {
               using T = std::decay_t<decltype(p)>;
               if constexpr (std::is_same_v<T, DataRequest>) {
                 return 3 * kIdBytes;  // instance, type, row key
               } else if constexpr (std::is_same_v<T, DataReply>) {
                 return p.fragment.size() * kFragmentItemBytes;
               } else if constexpr (std::is_same_v<T, ConflictNotice>) {
                 return kIdBytes + kWordBytes;
               } else if constexpr (std::is_same_v<T, CommitRequest>) {
                 return 2 * kWordBytes +  // params: row key + amount
                        p.read_versions.size() * kEntryBytes +
                        p.write_set.size() * kEntryBytes;
               } else if constexpr (std::is_same_v<T, CommitAck>) {
                 return kIdBytes + kWordBytes;
               } else if constexpr (std::is_same_v<T, UpdateReport>) {
                 return p.fresh_values.size() * kFragmentItemBytes;
               } else if constexpr (std::is_same_v<T, HandoffTransfer>) {
                 return 2 * kIdBytes;
               } else if constexpr (std::is_same_v<T, HandoffForward>) {
                 return p.inner ? message_size_bytes(*p.inner) : 0;
               } else if constexpr (std::is_same_v<T, AbortNotice>) {
                 return 2 * kIdBytes;
               } else {  // InvalidationReport
                 return kIdBytes + p.changed.size() * kItemIdBytes;
               }
             },
             msg.payload);
}

std::string describe(const Message& msg) {
  std::string text = to_string(msg.kind());
  if (msg.is<HandoffForward>()) {
    const auto& fwd = msg.as<HandoffForward>();
    if (fwd.inner) text += "(" + std::string(to_string(fwd.inner->kind())) + ")";
  }
  text += " " + std::to_string(message_size_bytes(msg)) + "B";
  return text;
}

}  // namespace occsim
