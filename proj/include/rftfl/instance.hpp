#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rftfl/facility_set.hpp"

namespace rftfl {

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double length = 0.0;

  bool operator==(const Edge&) const = default;
};

/// A facility location instance: n nodes (ids 1..n) on an undirected graph
/// with positive edge lengths, a nonnegative demand and a nonnegative
/// facility opening cost per node.
struct Instance {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<double> demand;        // 1-based; demand[0] unused
  std::vector<double> opening_cost;  // 1-based; opening_cost[0] unused

  double demand_of(NodeId v) const { return demand[static_cast<size_t>(v)]; }
  double cost_of(NodeId v) const { return opening_cost[static_cast<size_t>(v)]; }

  /// Checks the structural invariants (positive lengths, nonnegative demands
  /// and costs, ids in range, no self-loops). Throws std::invalid_argument.
  void validate() const;

  bool operator==(const Instance&) const = default;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the line-oriented instance format. '#' starts a comment, blank
/// lines are ignored. Layout:
///
///   n m
///   <node_id> <demand> <opening_cost>    (n lines, each id 1..n once)
///   <u> <v> <length>                     (m lines)
///
/// Throws ParseError with a line number on malformed input.
Instance parse_instance(const std::string& text);

/// Inverse of parse_instance on the Instance model.
std::string serialize_instance(const Instance& inst);

/// Minimal decimal rendering of a numeric value: integers print without a
/// fractional part, everything else round-trips at full precision.
std::string format_number(double x);

}  // namespace rftfl
