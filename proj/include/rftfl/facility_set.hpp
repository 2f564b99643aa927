#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace rftfl {

/// Node identifier; instances number their nodes 1..n.
using NodeId = int;

/// An ordered set of facility node ids. Ids are kept sorted and deduplicated,
/// so comparing two sets compares their id vectors lexicographically.
class FacilitySet {
 public:
  FacilitySet() = default;
  explicit FacilitySet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }
  FacilitySet(std::initializer_list<NodeId> ids)
      : FacilitySet(std::vector<NodeId>(ids)) {}

  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  const std::vector<NodeId>& ids() const { return ids_; }

  bool contains(NodeId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }

  FacilitySet with(NodeId v) const {
    std::vector<NodeId> out = ids_;
    out.push_back(v);
    return FacilitySet(std::move(out));
  }

  FacilitySet without(NodeId v) const {
    std::vector<NodeId> out;
    out.reserve(ids_.size());
    for (NodeId id : ids_)
      if (id != v) out.push_back(id);
    FacilitySet res;
    res.ids_ = std::move(out);  // already sorted unique
    return res;
  }

  FacilitySet union_with(const FacilitySet& other) const {
    FacilitySet res;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(res.ids_));
    return res;
  }

  FacilitySet minus(const FacilitySet& other) const {
    FacilitySet res;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(res.ids_));
    return res;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(ids_[i]);
    }
    s += "}";
    return s;
  }

  auto operator<=>(const FacilitySet&) const = default;

 private:
  std::vector<NodeId> ids_;
};

}  // namespace rftfl
