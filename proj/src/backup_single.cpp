#include "rftfl/backup_single.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rftfl {

namespace {

// min over q in members, q != excluded, of d(v, q)
double dist_excluding(const DistanceMatrix& dist, NodeId v,
                      const FacilitySet& members, NodeId excluded) {
  double best = kInfiniteCost;
  for (NodeId q : members.ids()) {
    if (q == excluded) continue;
    best = std::min(best, dist(v, q));
  }
  return best;
}

}  // namespace

double cost_bu(const BackupInstance& bi, const DistanceMatrix& dist,
               const FacilitySet& r2) {
  FacilitySet open = bi.servers.union_with(r2);
  double worst = 0.0;
  for (NodeId r : bi.servers.ids()) {
    double w = bi.base.demand_of(r);
    if (w == 0.0) continue;
    worst = std::max(worst, w * dist_excluding(dist, r, open, r));
  }
  return worst;
}

std::vector<double> candidate_values(const Instance& inst,
                                     const DistanceMatrix& dist) {
  std::vector<double> distances;
  distances.reserve(static_cast<size_t>(inst.n) * inst.n);
  for (NodeId u = 1; u <= inst.n; ++u)
    for (NodeId v = 1; v <= inst.n; ++v)
      if (std::isfinite(dist(u, v))) distances.push_back(dist(u, v));
  std::sort(distances.begin(), distances.end());
  distances.erase(std::unique(distances.begin(), distances.end()),
                  distances.end());

  std::vector<double> demands;
  demands.reserve(static_cast<size_t>(inst.n));
  for (NodeId v = 1; v <= inst.n; ++v) demands.push_back(inst.demand_of(v));
  std::sort(demands.begin(), demands.end());
  demands.erase(std::unique(demands.begin(), demands.end()), demands.end());

  std::vector<double> values{0.0};
  values.reserve(demands.size() * distances.size() + 1);
  for (double w : demands)
    for (double d : distances) values.push_back(w * d);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

BbResult algorithm_bb(const BackupInstance& bi, const DistanceMatrix& dist,
                      double m) {
  const Instance& inst = bi.base;
  BbResult res;
  std::vector<NodeId> opened;

  for (NodeId server : bi.servers.ids()) {
    double w = inst.demand_of(server);
    if (w == 0.0) continue;  // no backup requirement

    auto in_relaxed_radius = [&](NodeId v) {
      return v != server && w * dist(v, server) <= 2.0 * m;
    };

    bool covered = false;
    for (NodeId q : bi.servers.ids())
      if (in_relaxed_radius(q)) {
        covered = true;
        break;
      }
    if (!covered)
      for (NodeId q : opened)
        if (in_relaxed_radius(q)) {
          covered = true;
          break;
        }
    if (covered) continue;

    NodeId pick = 0;
    double pick_cost = kInfiniteCost;
    for (NodeId v = 1; v <= inst.n; ++v) {
      if (!in_relaxed_radius(v)) continue;
      if (pick == 0 || inst.cost_of(v) < pick_cost) {
        pick = v;
        pick_cost = inst.cost_of(v);
      }
    }
    if (pick == 0) return res;  // empty relaxed radius: infeasible

    opened.push_back(pick);
    res.phases.push_back({server, pick});
  }

  // The tight-radius sets of the phases that opened must be pairwise
  // disjoint; a shared node would have covered the later phase.
  std::vector<char> seen(static_cast<size_t>(inst.n) + 1, 0);
  for (const BbPhase& phase : res.phases) {
    double w = inst.demand_of(phase.server);
    for (NodeId v = 1; v <= inst.n; ++v) {
      if (v == phase.server || w * dist(v, phase.server) > m) continue;
      if (seen[static_cast<size_t>(v)])
        throw std::logic_error(
            "bounded backup: tight radii of opening phases overlap");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  res.feasible = true;
  res.opened = FacilitySet(std::move(opened));
  return res;
}

ConcBackupResult algorithm_conc_bu(const BackupInstance& bi,
                                   const DistanceMatrix& dist) {
  ConcBackupResult best;
  for (double m : candidate_values(bi.base, dist)) {
    BbResult attempt = algorithm_bb(bi, dist, m);
    if (!attempt.feasible) continue;
    double cost = facility_cost(bi.base, attempt.opened) +
                  cost_bu(bi, dist, attempt.opened);
    if (!std::isfinite(cost)) continue;
    if (!best.feasible || cost < best.cost) {
      best.feasible = true;
      best.r2 = attempt.opened;
      best.cost = cost;
      best.chosen_m = m;
    }
  }
  return best;
}

}  // namespace rftfl
