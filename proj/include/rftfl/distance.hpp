#pragma once

#include <limits>
#include <vector>

#include "rftfl/facility_set.hpp"
#include "rftfl/instance.hpp"

namespace rftfl {

/// Marker for unreachable pairs and infeasible solutions.
inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

/// All-pairs shortest-path metric over an instance's graph. Entries for node
/// pairs in different connected components are +infinity, and the distance
/// from any node to the empty set is +infinity as well.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<size_t>(n + 1) * (n + 1), kInfiniteCost) {}

  int nodes() const { return n_; }

  double operator()(NodeId u, NodeId v) const { return d_[idx(u, v)]; }
  double& at(NodeId u, NodeId v) { return d_[idx(u, v)]; }

  /// min over r in R of d(v, r); +infinity when R is empty.
  double to_set(NodeId v, const FacilitySet& r) const {
    double best = kInfiniteCost;
    for (NodeId id : r.ids()) best = std::min(best, (*this)(v, id));
    return best;
  }

  /// The nearest member of R, lowest id on ties; 0 when R is empty.
  NodeId nearest(NodeId v, const FacilitySet& r) const {
    NodeId best = 0;
    double best_d = kInfiniteCost;
    for (NodeId id : r.ids()) {
      double d = (*this)(v, id);
      if (best == 0 || d < best_d) {
        best = id;
        best_d = d;
      }
    }
    return best;
  }

 private:
  size_t idx(NodeId u, NodeId v) const {
    return static_cast<size_t>(u) * (n_ + 1) + static_cast<size_t>(v);
  }

  int n_;
  std::vector<double> d_;
};

/// Exact shortest-path distances, one single-source run per node.
DistanceMatrix all_pairs_distances(const Instance& inst);

}  // namespace rftfl
