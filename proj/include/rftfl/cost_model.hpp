#pragma once

#include <cmath>
#include <vector>

#include "rftfl/distance.hpp"
#include "rftfl/facility_set.hpp"
#include "rftfl/instance.hpp"

namespace rftfl {

/// Client-to-facility map. Every node is served by its nearest open facility;
/// among equidistant facilities the lowest node id wins.
struct Assignment {
  std::vector<NodeId> server_of;  // 1-based; server_of[v] is v's facility

  NodeId of(NodeId v) const { return server_of[static_cast<size_t>(v)]; }
};

/// Builds the deterministic nearest-facility assignment. Throws
/// std::invalid_argument on an empty facility set.
Assignment assign(const DistanceMatrix& dist, const FacilitySet& r);

/// Cost bundle for one facility set. An infeasible solution (a failure can
/// leave some demand without any reachable facility) carries total =
/// +infinity rather than raising an error, so searches can compare it.
struct CostBreakdown {
  double facility = 0.0;
  double ship = 0.0;
  double backup = 0.0;
  double total = 0.0;
  FacilitySet worst_failure;

  bool feasible() const { return std::isfinite(total); }
};

/// demand * distance with the convention that zero demand ships for free
/// even over an infinite distance.
inline double shipping_cost(double demand, double distance) {
  return demand == 0.0 ? 0.0 : demand * distance;
}

/// Sum of opening costs over the set.
double facility_cost(const Instance& inst, const FacilitySet& r);

/// Sum over all nodes of demand(v) * d(v, R).
double ship_cost(const Instance& inst, const DistanceMatrix& dist,
                 const FacilitySet& r);

/// Plain facility location cost: opening plus nearest-facility shipping.
CostBreakdown cost_ufl(const Instance& inst, const DistanceMatrix& dist,
                       const FacilitySet& r);

/// Single-failure robust cost: opening plus the worst shipping cost over all
/// single facility failures. Needs |R| >= 2 to be feasible; the breakdown
/// reports the no-failure shipping cost and charges the rest to backup.
/// worst_failure is the lowest-id arg-max singleton.
CostBreakdown cost_rftfl(const Instance& inst, const DistanceMatrix& dist,
                         const FacilitySet& r);

/// Robust cost under up to alpha simultaneous failures. Only failure sets of
/// size exactly alpha are enumerated: dropping a facility never shrinks any
/// client distance, so the maximum is attained at full cardinality.
/// worst_failure is the lexicographically smallest arg-max set. Needs
/// |R| >= alpha + 1 to be feasible.
CostBreakdown cost_alpha_rftfl(const Instance& inst, const DistanceMatrix& dist,
                               const FacilitySet& r, int alpha);

/// Single-failure robust cost evaluated through an explicit assignment
/// (opening + shipping + max per-facility reroute surcharge). Agrees with
/// cost_rftfl(...).total for every choice of nearest-facility tie-breaking;
/// kept as an independent cross-check of the max-over-failures form.
double cost_rftfl_assignment_form(const Instance& inst,
                                  const DistanceMatrix& dist,
                                  const FacilitySet& r,
                                  const Assignment& assignment);
double cost_rftfl_assignment_form(const Instance& inst,
                                  const DistanceMatrix& dist,
                                  const FacilitySet& r);

}  // namespace rftfl
