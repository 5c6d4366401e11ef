#include "occsim/store.hpp"

#include <set>

#include "occsim/errors.hpp"

namespace occsim {

Relation make_relation(std::string name, std::vector<std::string> schema,
                       const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>& rows) {
  if (schema.size() < 2) {
    throw InvalidSpec("relation '" + name + "' needs a primary key and at least one attribute");
  }
  Relation rel;
  rel.name = std::move(name);
  rel.schema = std::move(schema);
  for (const auto& [key, values] : rows) {
    if (values.size() != rel.schema.size() - 1) {
      throw InvalidSpec("row " + std::to_string(key) + " of '" + rel.name +
                        "' has wrong arity");
    }
    if (rel.rows.count(key)) {
      throw DuplicateRowKey("duplicate row key " + std::to_string(key) + " in '" + rel.name +
                            "'");
    }
    std::map<std::string, VersionedValue> cells;
    for (std::size_t i = 0; i < values.size(); ++i) {
      cells[rel.schema[i + 1]] = VersionedValue{values[i], 0};
    }
    rel.rows[key] = std::move(cells);
  }
  return rel;
}

DbsStore DbsStore::load_initial(std::vector<Relation> relations) {
  std::set<std::string> names;
  for (auto& rel : relations) {
    if (rel.name.empty() || rel.schema.empty()) {
      throw InvalidSpec("relation needs a name and a schema");
    }
    if (!names.insert(rel.name).second) {
      throw DuplicateRelation("duplicate relation '" + rel.name + "'");
    }
    for (auto& [key, cells] : rel.rows) {
      for (auto& [attr, vv] : cells) vv.version = 0;
      (void)key;
    }
  }
  DbsStore store;
  store.state_.relations = relations;
  store.initial_ = std::move(relations);
  return store;
}

const VersionedValue* DbsStore::find(const DataItemId& item) const {
  for (const auto& rel : state_.relations) {
    if (rel.name != item.relation) continue;
    auto row = rel.rows.find(item.row_key);
    if (row == rel.rows.end()) return nullptr;
    auto cell = row->second.find(item.attribute);
    if (cell == row->second.end()) return nullptr;
    return &cell->second;
  }
  return nullptr;
}

VersionedValue* DbsStore::find(const DataItemId& item) {
  return const_cast<VersionedValue*>(static_cast<const DbsStore*>(this)->find(item));
}

bool DbsStore::has_item(const DataItemId& item) const { return find(item) != nullptr; }

bool DbsStore::has_row(const std::string& relation, std::int64_t row_key) const {
  for (const auto& rel : state_.relations) {
    if (rel.name == relation) return rel.rows.count(row_key) > 0;
  }
  return false;
}

const Relation& DbsStore::relation(const std::string& name) const {
  for (const auto& rel : state_.relations) {
    if (rel.name == name) return rel;
  }
  throw UnknownDataItem("unknown relation '" + name + "'");
}

std::map<DataItemId, VersionedValue> DbsStore::extract_fragment(
    const std::set<DataItemId>& items) const {
  std::map<DataItemId, VersionedValue> fragment;
  for (const auto& item : items) {
    const VersionedValue* vv = find(item);
    if (!vv) throw UnknownDataItem("unknown data item " + item.to_string());
    fragment[item] = *vv;
  }
  return fragment;
}

std::uint64_t DbsStore::apply_commit(const CommitMeta& meta,
                                     const std::map<DataItemId, std::uint64_t>& read_versions,
                                     const std::map<DataItemId, std::int64_t>& write_set,
                                     Timestamp now) {
  // Validate the whole write set before mutating anything.
  for (const auto& [item, value] : write_set) {
    (void)value;
    if (!has_item(item)) throw UnknownDataItem("unknown data item " + item.to_string());
  }
  const std::uint64_t seq = state_.next_seq++;
  CommitRecord record;
  record.seq = seq;
  record.meta = meta;
  record.read_versions = read_versions;
  record.at = now;
  for (const auto& [item, value] : write_set) {
    VersionedValue* cell = find(item);
    record.writes[item] = WriteImage{*cell, VersionedValue{value, seq}};
    *cell = VersionedValue{value, seq};
  }
  state_.log.push_back(std::move(record));
  return seq;
}

std::uint64_t DbsStore::latest_version(const DataItemId& item) const {
  const VersionedValue* vv = find(item);
  if (!vv) throw UnknownDataItem("unknown data item " + item.to_string());
  return vv->version;
}

VersionedValue DbsStore::read(const DataItemId& item) const {
  const VersionedValue* vv = find(item);
  if (!vv) throw UnknownDataItem("unknown data item " + item.to_string());
  return *vv;
}

std::vector<DataItemId> DbsStore::all_items() const {
  std::vector<DataItemId> items;
  for (const auto& rel : state_.relations) {
    for (const auto& [key, cells] : rel.rows) {
      for (const auto& [attr, vv] : cells) {
        (void)vv;
        items.push_back(DataItemId{rel.name, key, attr});
      }
    }
  }
  return items;  // maps iterate in order, so this is canonical
}

}  // namespace occsim
