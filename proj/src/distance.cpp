#include "rftfl/distance.hpp"

#include <queue>
#include <utility>

namespace rftfl {

DistanceMatrix all_pairs_distances(const Instance& inst) {
  const int n = inst.n;
  std::vector<std::vector<std::pair<NodeId, double>>> adj(static_cast<size_t>(n) + 1);
  for (const Edge& e : inst.edges) {
    adj[static_cast<size_t>(e.u)].emplace_back(e.v, e.length);
    adj[static_cast<size_t>(e.v)].emplace_back(e.u, e.length);
  }

  DistanceMatrix dm(n);
  using Item = std::pair<double, NodeId>;  // (distance, node)
  for (NodeId src = 1; src <= n; ++src) {
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dm.at(src, src) = 0.0;
    heap.emplace(0.0, src);
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dm(src, u)) continue;
      for (auto [v, len] : adj[static_cast<size_t>(u)]) {
        double nd = d + len;
        if (nd < dm(src, v)) {
          dm.at(src, v) = nd;
          heap.emplace(nd, v);
        }
      }
    }
  }
  return dm;
}

}  // namespace rftfl
