#include "occsim/ids.hpp"

namespace occsim {

std::string DataItemId::to_string() const {
  return relation + "[" + std::to_string(row_key) + "]." + attribute;
}

std::string Actor::name() const {
  switch (kind) {
    case Kind::Host:
      return "M" + std::to_string(id);
    case Kind::BaseStation:
      return "BS" + std::to_string(id);
    case Kind::Dbs:
      return "DBS";
  }
  return "?";
}

}  // namespace occsim
