#include "rftfl/backup_multi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "enumeration.hpp"

namespace rftfl {

namespace {

double min_dist_to_survivors(const DistanceMatrix& dist, NodeId from,
                             const std::vector<NodeId>& open,
                             const std::vector<NodeId>& failed) {
  double best = kInfiniteCost;
  for (NodeId q : open) {
    if (std::find(failed.begin(), failed.end(), q) != failed.end()) continue;
    best = std::min(best, dist(from, q));
  }
  return best;
}

}  // namespace

double cost_alpha_bu(const BackupInstance& bi, const DistanceMatrix& dist,
                     const FacilitySet& r2, int alpha) {
  if (alpha < 1) throw std::invalid_argument("cost_alpha_bu: alpha must be >= 1");
  const FacilitySet open_set = bi.servers.union_with(r2);
  const std::vector<NodeId>& open = open_set.ids();
  double worst = 0.0;
  std::vector<NodeId> failed;
  detail::for_each_subset_up_to(
      static_cast<int>(open.size()), alpha, [&](const std::vector<int>& picks) {
        failed.clear();
        for (int i : picks) failed.push_back(open[static_cast<size_t>(i)]);
        double sum = 0.0;
        for (NodeId r : failed) {
          if (!bi.servers.contains(r)) continue;
          double w = bi.base.demand_of(r);
          if (w == 0.0) continue;
          sum += w * min_dist_to_survivors(dist, r, open, failed);
        }
        worst = std::max(worst, sum);
      });
  return worst;
}

double cost_light_alpha_bu(const BackupInstance& bi, const DistanceMatrix& dist,
                           const FacilitySet& r2, int alpha) {
  if (alpha < 1)
    throw std::invalid_argument("cost_light_alpha_bu: alpha must be >= 1");
  const FacilitySet open = bi.servers.union_with(r2);
  double worst = 0.0;
  std::vector<double> around;
  for (NodeId r : bi.servers.ids()) {
    double w = bi.base.demand_of(r);
    if (w == 0.0) continue;
    around.clear();
    for (NodeId q : open.ids())
      if (q != r) around.push_back(dist(r, q));
    if (around.size() < static_cast<size_t>(alpha)) return kInfiniteCost;
    std::nth_element(around.begin(), around.begin() + (alpha - 1), around.end());
    worst = std::max(worst, w * around[static_cast<size_t>(alpha) - 1]);
  }
  return worst;
}

AlphaBbResult algorithm_alpha_bb(const BackupInstance& bi,
                                 const DistanceMatrix& dist, double m,
                                 int alpha) {
  if (alpha < 1)
    throw std::invalid_argument("algorithm_alpha_bb: alpha must be >= 1");
  const Instance& inst = bi.base;
  AlphaBbResult res;

  std::vector<NodeId> order = bi.servers.ids();
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (inst.demand_of(a) != inst.demand_of(b))
      return inst.demand_of(a) > inst.demand_of(b);
    return a < b;
  });

  std::vector<NodeId> anchors;
  std::vector<NodeId> opened;

  for (NodeId server : order) {
    double w = inst.demand_of(server);
    if (w == 0.0) continue;  // no backup requirement

    bool covered = false;
    for (NodeId z : anchors)
      if (z != server && w * dist(z, server) <= 2.0 * m) {
        covered = true;
        break;
      }
    if (covered) continue;

    // Tight-radius nodes, split into already-open ones and candidates.
    int have = 0;
    std::vector<NodeId> pool;
    for (NodeId v = 1; v <= inst.n; ++v) {
      if (v == server || w * dist(v, server) > m) continue;
      bool open_already =
          bi.servers.contains(v) ||
          std::find(opened.begin(), opened.end(), v) != opened.end();
      if (open_already)
        ++have;
      else
        pool.push_back(v);
    }

    int need = alpha - have;
    if (need > static_cast<int>(pool.size())) return res;  // infeasible

    AlphaBbPhase phase;
    phase.server = server;
    if (need > 0) {
      std::stable_sort(pool.begin(), pool.end(), [&](NodeId a, NodeId b) {
        if (inst.cost_of(a) != inst.cost_of(b))
          return inst.cost_of(a) < inst.cost_of(b);
        return a < b;
      });
      for (int i = 0; i < need; ++i) {
        opened.push_back(pool[static_cast<size_t>(i)]);
        phase.opened.push_back(pool[static_cast<size_t>(i)]);
      }
    }
    anchors.push_back(server);
    res.phases.push_back(std::move(phase));
  }

  // Tight radii of anchors must be pairwise disjoint; a shared node would
  // put the earlier anchor inside the later server's relaxed radius.
  std::vector<char> seen(static_cast<size_t>(inst.n) + 1, 0);
  for (NodeId z : anchors) {
    double w = inst.demand_of(z);
    for (NodeId v = 1; v <= inst.n; ++v) {
      if (v == z || w * dist(v, z) > m) continue;
      if (seen[static_cast<size_t>(v)])
        throw std::logic_error(
            "alpha bounded backup: tight radii of anchors overlap");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  res.feasible = true;
  res.opened = FacilitySet(std::move(opened));
  res.anchors = FacilitySet(std::move(anchors));
  return res;
}

ConcAlphaResult algorithm_conc_alpha_bu(const BackupInstance& bi,
                                        const DistanceMatrix& dist, int alpha,
                                        std::uint64_t candidate_cap) {
  if (alpha < 1)
    throw std::invalid_argument("algorithm_conc_alpha_bu: alpha must be >= 1");
  const std::vector<double> values = candidate_values(bi.base, dist);
  const int d = static_cast<int>(values.size());

  ConcAlphaResult best;
  std::vector<double> thresholds;
  std::uint64_t all_subsets =
      detail::subset_count_up_to(static_cast<std::uint64_t>(d),
                                 static_cast<std::uint64_t>(alpha));
  if (all_subsets <= candidate_cap) {
    detail::for_each_subset_up_to(d, alpha, [&](const std::vector<int>& picks) {
      double sum = 0.0;
      for (int i : picks) sum += values[static_cast<size_t>(i)];
      thresholds.push_back(sum);
    });
  } else {
    // Degraded sweep: all single values, plus subset sums drawn from the
    // largest values under the remaining budget.
    best.heuristic_sweep = true;
    thresholds = values;
    std::uint64_t budget =
        candidate_cap > thresholds.size() ? candidate_cap - thresholds.size() : 0;
    int top = 0;
    while (top < d &&
           detail::subset_count_up_to(static_cast<std::uint64_t>(top + 1),
                                      static_cast<std::uint64_t>(alpha)) <= budget)
      ++top;
    const size_t base = values.size() - static_cast<size_t>(top);
    detail::for_each_subset_up_to(top, alpha, [&](const std::vector<int>& picks) {
      double sum = 0.0;
      for (int i : picks) sum += values[base + static_cast<size_t>(i)];
      thresholds.push_back(sum);
    });
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  for (double m : thresholds) {
    AlphaBbResult attempt = algorithm_alpha_bb(bi, dist, m, alpha);
    ++best.thresholds_tried;
    if (!attempt.feasible) continue;
    double cost = facility_cost(bi.base, attempt.opened) +
                  cost_alpha_bu(bi, dist, attempt.opened, alpha);
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
