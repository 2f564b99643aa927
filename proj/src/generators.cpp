#include "rftfl/generators.hpp"

#include <random>
#include <stdexcept>

namespace rftfl {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random tree edges: node i attaches to a uniformly random earlier node.
std::vector<std::pair<NodeId, NodeId>> random_tree(int n, std::mt19937_64& rng) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<size_t>(n) - 1);
  for (NodeId v = 2; v <= n; ++v) {
    NodeId parent = uniform_int(rng, 1, v - 1);
    edges.emplace_back(parent, v);
  }
  return edges;
}

}  // namespace

TreeFamily tree_family_from_string(const std::string& name) {
  if (name == "unit_length_variable_demand")
    return TreeFamily::unit_length_variable_demand;
  if (name == "unit_demand_variable_length")
    return TreeFamily::unit_demand_variable_length;
  throw std::invalid_argument("unknown tree family: " + name);
}

std::string to_string(TreeFamily family) {
  switch (family) {
    case TreeFamily::unit_length_variable_demand:
      return "unit_length_variable_demand";
    case TreeFamily::unit_demand_variable_length:
      return "unit_demand_variable_length";
  }
  throw std::invalid_argument("unknown tree family value");
}

Instance generate_random_instance(int n, double edge_density, int max_length,
                                  int max_demand, int max_cost,
                                  std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_random_instance: n must be >= 2");
  if (!(edge_density > 0.0) || edge_density > 1.0)
    throw std::invalid_argument("edge_density must lie in (0, 1]");
  if (max_length < 1) throw std::invalid_argument("max_length must be positive");
  if (max_demand < 0 || max_cost < 0)
    throw std::invalid_argument("max_demand and max_cost must be nonnegative");

  std::mt19937_64 rng(seed);
  Instance inst;
  inst.n = n;
  inst.demand.assign(static_cast<size_t>(n) + 1, 0.0);
  inst.opening_cost.assign(static_cast<size_t>(n) + 1, 0.0);
  for (NodeId v = 1; v <= n; ++v) {
    inst.demand[static_cast<size_t>(v)] = uniform_int(rng, 0, max_demand);
    inst.opening_cost[static_cast<size_t>(v)] = uniform_int(rng, 0, max_cost);
  }

  std::vector<std::vector<char>> in_tree(static_cast<size_t>(n) + 1,
                                         std::vector<char>(static_cast<size_t>(n) + 1, 0));
  for (auto [u, v] : random_tree(n, rng)) {
    in_tree[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
    in_tree[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    inst.edges.push_back({u, v, static_cast<double>(uniform_int(rng, 1, max_length))});
  }

  std::bernoulli_distribution keep(edge_density);
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v) {
      if (in_tree[static_cast<size_t>(u)][static_cast<size_t>(v)]) continue;
      if (!keep(rng)) continue;
      inst.edges.push_back({u, v, static_cast<double>(uniform_int(rng, 1, max_length))});
    }
  }
  return inst;
}

Instance generate_tree_instance(TreeFamily family, int n, int value_range,
                                std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_tree_instance: n must be >= 2");
  if (value_range < 1) throw std::invalid_argument("value_range must be positive");

  std::mt19937_64 rng(seed);
  Instance inst;
  inst.n = n;
  inst.demand.assign(static_cast<size_t>(n) + 1, 1.0);
  inst.opening_cost.assign(static_cast<size_t>(n) + 1, 1.0);

  auto tree = random_tree(n, rng);
  if (family == TreeFamily::unit_length_variable_demand) {
    for (NodeId v = 1; v <= n; ++v)
      inst.demand[static_cast<size_t>(v)] = uniform_int(rng, 0, value_range);
    for (auto [u, v] : tree) inst.edges.push_back({u, v, 1.0});
  } else {
    for (auto [u, v] : tree)
      inst.edges.push_back({u, v, static_cast<double>(uniform_int(rng, 1, value_range))});
  }
  return inst;
}

}  // namespace rftfl
