#include "rftfl/cost_model.hpp"

#include <stdexcept>

#include "enumeration.hpp"

namespace rftfl {

Assignment assign(const DistanceMatrix& dist, const FacilitySet& r) {
  if (r.empty()) throw std::invalid_argument("assign: empty facility set");
  Assignment a;
  a.server_of.assign(static_cast<size_t>(dist.nodes()) + 1, 0);
  for (NodeId v = 1; v <= dist.nodes(); ++v)
    a.server_of[static_cast<size_t>(v)] = dist.nearest(v, r);
  return a;
}

double facility_cost(const Instance& inst, const FacilitySet& r) {
  double sum = 0.0;
  for (NodeId id : r.ids()) sum += inst.cost_of(id);
  return sum;
}

double ship_cost(const Instance& inst, const DistanceMatrix& dist,
                 const FacilitySet& r) {
  double sum = 0.0;
  for (NodeId v = 1; v <= inst.n; ++v)
    sum += shipping_cost(inst.demand_of(v), dist.to_set(v, r));
  return sum;
}

CostBreakdown cost_ufl(const Instance& inst, const DistanceMatrix& dist,
                       const FacilitySet& r) {
  if (r.empty()) throw std::invalid_argument("cost_ufl: empty facility set");
  CostBreakdown c;
  c.facility = facility_cost(inst, r);
  c.ship = ship_cost(inst, dist, r);
  c.backup = 0.0;
  c.total = c.facility + c.ship;
  return c;
}

CostBreakdown cost_rftfl(const Instance& inst, const DistanceMatrix& dist,
                         const FacilitySet& r) {
  CostBreakdown c;
  c.facility = facility_cost(inst, r);
  c.ship = ship_cost(inst, dist, r);
  if (r.size() < 2) {  // a single failure must leave a survivor
    c.backup = kInfiniteCost;
    c.total = kInfiniteCost;
    return c;
  }
  double worst = -1.0;
  for (NodeId failed : r.ids()) {
    double s = ship_cost(inst, dist, r.without(failed));
    if (s > worst) {
      worst = s;
      c.worst_failure = FacilitySet{failed};
    }
  }
  c.total = c.facility + worst;
  c.backup = (std::isfinite(worst) && std::isfinite(c.ship)) ? worst - c.ship
                                                             : kInfiniteCost;
  return c;
}

CostBreakdown cost_alpha_rftfl(const Instance& inst, const DistanceMatrix& dist,
                               const FacilitySet& r, int alpha) {
  if (alpha < 1) throw std::invalid_argument("cost_alpha_rftfl: alpha must be >= 1");
  CostBreakdown c;
  c.facility = facility_cost(inst, r);
  c.ship = ship_cost(inst, dist, r);
  if (r.size() <= static_cast<size_t>(alpha)) {
    c.backup = kInfiniteCost;
    c.total = kInfiniteCost;
    return c;
  }
  const auto& ids = r.ids();
  double worst = -1.0;
  detail::for_each_combination(static_cast<int>(ids.size()), alpha,
                               [&](const std::vector<int>& picks) {
                                 std::vector<NodeId> failed;
                                 failed.reserve(picks.size());
                                 for (int i : picks)
                                   failed.push_back(ids[static_cast<size_t>(i)]);
                                 FacilitySet f(std::move(failed));
                                 double s = ship_cost(inst, dist, r.minus(f));
                                 if (s > worst) {
                                   worst = s;
                                   c.worst_failure = std::move(f);
                                 }
                               });
  c.total = c.facility + worst;
  c.backup = (std::isfinite(worst) && std::isfinite(c.ship)) ? worst - c.ship
                                                             : kInfiniteCost;
  return c;
}

double cost_rftfl_assignment_form(const Instance& inst,
                                  const DistanceMatrix& dist,
                                  const FacilitySet& r,
                                  const Assignment& assignment) {
  double facility = facility_cost(inst, r);
  double ship = ship_cost(inst, dist, r);
  double worst_surcharge = -kInfiniteCost;
  for (NodeId failed : r.ids()) {
    FacilitySet survivors = r.without(failed);
    double surcharge = 0.0;
    for (NodeId v = 1; v <= inst.n; ++v) {
      if (assignment.of(v) != failed) continue;
      double w = inst.demand_of(v);
      if (w == 0.0) continue;
      double rerouted = dist.to_set(v, survivors);
      if (!std::isfinite(rerouted)) {
        surcharge = kInfiniteCost;
        break;
      }
      surcharge += w * (rerouted - dist(v, failed));
    }
    worst_surcharge = std::max(worst_surcharge, surcharge);
  }
  return facility + ship + worst_surcharge;
}

double cost_rftfl_assignment_form(const Instance& inst,
                                  const DistanceMatrix& dist,
                                  const FacilitySet& r) {
  if (r.size() < 2) return kInfiniteCost;
  return cost_rftfl_assignment_form(inst, dist, r, assign(dist, r));
}

}  // namespace rftfl
