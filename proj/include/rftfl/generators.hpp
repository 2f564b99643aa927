#pragma once

#include <cstdint>
#include <string>

#include "rftfl/instance.hpp"

namespace rftfl {

/// Tree instance families with one uniform attribute class and one variable
/// one. Both keep unit opening costs.
enum class TreeFamily {
  unit_length_variable_demand,
  unit_demand_variable_length,
};

TreeFamily tree_family_from_string(const std::string& name);
std::string to_string(TreeFamily family);

/// Connected random instance: a random spanning tree plus extra edges drawn
/// with probability edge_density per remaining pair. All attributes are
/// integers (lengths in [1, max_length], demands in [0, max_demand], opening
/// costs in [0, max_cost]). Same seed, same instance.
Instance generate_random_instance(int n, double edge_density, int max_length,
                                  int max_demand, int max_cost,
                                  std::uint64_t seed);

/// Random tree on n nodes from the given family. value_range bounds the
/// variable attribute (demands in [0, value_range] or lengths in
/// [1, value_range]).
Instance generate_tree_instance(TreeFamily family, int n, int value_range,
                                std::uint64_t seed);

}  // namespace rftfl
