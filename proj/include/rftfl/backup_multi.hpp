#pragma once

#include <cstdint>
#include <vector>

#include "rftfl/backup_single.hpp"
#include "rftfl/distance.hpp"
#include "rftfl/facility_set.hpp"

namespace rftfl {

/// Worst-case total reroute cost over all failure sets F of size at most
/// alpha drawn from servers ∪ R2: failed servers ship their demand to the
/// nearest survivor. Exact brute-force enumeration; +infinity when some
/// failure set leaves a positive-demand server with no survivor.
double cost_alpha_bu(const BackupInstance& bi, const DistanceMatrix& dist,
                     const FacilitySet& r2, int alpha);

/// Per-server worst case: max over servers r of demand(r) times the alpha-th
/// smallest distance from r to the other open facilities (+infinity when a
/// positive-demand server has fewer than alpha companions). Equals the max
/// over r and |F| <= alpha of the single-server reroute cost: the adversary
/// fails r plus its alpha-1 nearest companions.
double cost_light_alpha_bu(const BackupInstance& bi, const DistanceMatrix& dist,
                           const FacilitySet& r2, int alpha);

struct AlphaBbPhase {
  NodeId server = 0;
  std::vector<NodeId> opened;  // may be empty when the radius was full already
};

struct AlphaBbResult {
  bool feasible = false;
  FacilitySet opened;   // R2
  FacilitySet anchors;  // servers whose phase passed the coverage test (Z)
  std::vector<AlphaBbPhase> phases;
};

/// Threshold relaxation for the alpha-bounded backup problem. Servers are
/// processed by nonincreasing demand (lowest id on ties). A server whose
/// relaxed radius (demand * d <= 2M) contains an earlier anchor is covered;
/// otherwise the phase tops its tight radius (demand * d <= M) up to alpha
/// open facilities, opening the cheapest missing nodes, and the server
/// becomes an anchor. Zero-demand servers impose no requirement. Infeasible
/// when a tight radius cannot reach alpha facilities; the exact problem is
/// infeasible for that threshold too.
///
/// A feasible result satisfies cost_light_alpha_bu <= 3M and has facility
/// cost at most the exact alpha-bounded-backup optimum.
AlphaBbResult algorithm_alpha_bb(const BackupInstance& bi,
                                 const DistanceMatrix& dist, double m,
                                 int alpha);

inline constexpr std::uint64_t kDefaultCandidateCap = 200000;

struct ConcAlphaResult {
  bool feasible = false;
  FacilitySet r2;
  double cost = kInfiniteCost;  // facility cost of R2 plus cost_alpha_bu
  double chosen_m = 0.0;
  bool heuristic_sweep = false;  // candidate cap hit; guarantee not certified
  std::uint64_t thresholds_tried = 0;
};

/// Sweeps algorithm_alpha_bb over the sums of every subset of at most alpha
/// distinct candidate values and keeps the cheapest feasible outcome (ties
/// toward the smaller threshold). The winner costs at most 3*alpha times the
/// exact concentrated alpha-backup optimum. When the subset count exceeds
/// candidate_cap the sweep degrades to all single values plus the subsets of
/// the largest values that fit the budget, and the result is flagged.
ConcAlphaResult algorithm_conc_alpha_bu(
    const BackupInstance& bi, const DistanceMatrix& dist, int alpha,
    std::uint64_t candidate_cap = kDefaultCandidateCap);

}  // namespace rftfl
