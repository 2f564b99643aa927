#pragma once

#include <vector>

#include "rftfl/cost_model.hpp"
#include "rftfl/distance.hpp"
#include "rftfl/facility_set.hpp"
#include "rftfl/instance.hpp"

namespace rftfl {

/// A backup problem instance: the servers already own open facilities and act
/// as their own clients. When produced by the pipeline transform, demands are
/// concentrated on the servers (zero elsewhere) and server opening costs are
/// zero.
struct BackupInstance {
  Instance base;        // demands/opening costs are the transformed values
  FacilitySet servers;  // R1
};

/// Worst single-server reroute cost: max over servers r of
/// demand(r) * d(r, servers ∪ R2 \ {r}). +infinity when some positive-demand
/// server has no reachable company at all.
double cost_bu(const BackupInstance& bi, const DistanceMatrix& dist,
               const FacilitySet& r2);

/// The threshold sweep values: every product of a node demand with a finite
/// pairwise distance, deduplicated and sorted ascending; always contains 0.
std::vector<double> candidate_values(const Instance& inst,
                                     const DistanceMatrix& dist);

struct BbPhase {
  NodeId server = 0;  // the server whose phase opened a facility
  NodeId opened = 0;
};

struct BbResult {
  bool feasible = false;
  FacilitySet opened;           // R2
  std::vector<BbPhase> phases;  // phases that opened a facility, in order
};

/// Threshold relaxation for the bounded backup problem. Walks the servers in
/// ascending id order; a server whose relaxed radius (demand * d <= 2M)
/// already contains an open facility is left alone, otherwise the cheapest
/// node in the radius is opened (lowest id on cost ties). Zero-demand servers
/// impose no requirement and are skipped. Infeasible when a server with an
/// empty relaxed radius needs one.
///
/// A feasible result satisfies cost_bu <= 2M and has facility cost at most
/// the exact bounded-backup optimum for (servers, M).
BbResult algorithm_bb(const BackupInstance& bi, const DistanceMatrix& dist,
                      double m);

struct ConcBackupResult {
  bool feasible = false;
  FacilitySet r2;
  double cost = kInfiniteCost;  // facility cost of R2 plus cost_bu
  double chosen_m = 0.0;        // threshold that produced the winner
};

/// Sweeps algorithm_bb over every candidate threshold and keeps the cheapest
/// feasible outcome (ties toward the smaller threshold). The winner costs at
/// most twice the exact concentrated-backup optimum.
ConcBackupResult algorithm_conc_bu(const BackupInstance& bi,
                                   const DistanceMatrix& dist);

}  // namespace rftfl
