#ifndef BFSS_UNIVERSE_HPP
#define BFSS_UNIVERSE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bfss/errors.hpp"

namespace bfss {

// Finite ordered set of object identifiers. The order is fixed at
// construction and defines the row order of every table built over it.
class Universe {
public:
  explicit Universe(std::vector<std::string> objects) : objects_(std::move(objects)) {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      if (objects_[i].empty()) throw ValidationError("universe: object id must be non-empty");
      auto [it, inserted] = index_.emplace(objects_[i], i);
      if (!inserted) throw ValidationError("universe: duplicate object id '" + objects_[i] + "'");
    }
  }

  std::size_t size() const { return objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object(std::size_t i) const { return objects_[i]; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const Universe& other) const { return objects_ == other.objects_; }

private:
  std::vector<std::string> objects_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<std::string> objects) {
  return std::make_shared<const Universe>(std::move(objects));
}

}  // namespace bfss

#endif  // BFSS_UNIVERSE_HPP
