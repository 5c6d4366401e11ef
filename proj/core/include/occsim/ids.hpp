#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace occsim {

/// Simulated time in integer milliseconds since simulation start.
using Timestamp = std::int64_t;

using InstanceId = std::int64_t;

struct SiteId {
  std::int32_t v{-1};
  auto operator<=>(const SiteId&) const = default;
  bool valid() const { return v >= 0; }
};

struct BaseStationId {
  std::int32_t v{-1};
  auto operator<=>(const BaseStationId&) const = default;
  bool valid() const { return v >= 0; }
};

struct CellId {
  std::int32_t v{-1};
  auto operator<=>(const CellId&) const = default;
  bool valid() const { return v >= 0; }
};

/// Addressable cell of a relation: (relation, row primary key, attribute).
/// Totally ordered so item sets have a canonical order.
struct DataItemId {
  std::string relation;
  std::int64_t row_key{0};
  std::string attribute;

  auto operator<=>(const DataItemId&) const = default;
  std::string to_string() const;
};

/// A committed value: version 0 is the initial load, otherwise the
/// commit_seq of the write that produced it.
struct VersionedValue {
  std::int64_t value{0};
  std::uint64_t version{0};

  bool operator==(const VersionedValue&) const = default;
};

/// Any addressable endpoint in the simulated system.
struct Actor {
  enum class Kind : std::uint8_t { Host, BaseStation, Dbs };

  Kind kind{Kind::Host};
  std::int32_t id{-1};

  auto operator<=>(const Actor&) const = default;

  static Actor host(SiteId s) { return {Kind::Host, s.v}; }
  static Actor base_station(BaseStationId b) { return {Kind::BaseStation, b.v}; }
  static Actor dbs() { return {Kind::Dbs, 0}; }

  bool is_host() const { return kind == Kind::Host; }
  bool is_base_station() const { return kind == Kind::BaseStation; }
  SiteId site() const { return SiteId{id}; }
  BaseStationId bs() const { return BaseStationId{id}; }

  std::string name() const;
};

}  // namespace occsim
