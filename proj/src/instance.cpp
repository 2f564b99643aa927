#include "rftfl/instance.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rftfl {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

// Strips comments and reports whether anything meaningful remains.
bool meaningful(std::string& line) {
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

}  // namespace

void Instance::validate() const {
  if (n < 1) throw std::invalid_argument("instance must have at least one node");
  if (demand.size() != static_cast<size_t>(n) + 1 ||
      opening_cost.size() != static_cast<size_t>(n) + 1)
    throw std::invalid_argument("node attribute arrays do not match n");
  for (NodeId v = 1; v <= n; ++v) {
    if (demand_of(v) < 0.0) throw std::invalid_argument("negative demand");
    if (cost_of(v) < 0.0) throw std::invalid_argument("negative opening cost");
  }
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop edge");
    if (!(e.length > 0.0)) throw std::invalid_argument("nonpositive edge length");
  }
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  auto next_line = [&](std::istringstream& out) -> bool {
    while (std::getline(in, raw)) {
      ++line_no;
      if (!meaningful(raw)) continue;
      out.clear();
      out.str(raw);
      return true;
    }
    return false;
  };

  std::istringstream ls;
  if (!next_line(ls)) throw ParseError("line 1: empty input");

  int n = 0;
  long long m = -1;
  std::string extra;
  if (!(ls >> n >> m) || (ls >> extra)) fail(line_no, "expected header \"n m\"");
  if (n < 1) fail(line_no, "node count must be at least 1");
  if (m < 0) fail(line_no, "negative edge count");

  Instance inst;
  inst.n = n;
  inst.demand.assign(static_cast<size_t>(n) + 1, 0.0);
  inst.opening_cost.assign(static_cast<size_t>(n) + 1, 0.0);

  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (!next_line(ls)) fail(line_no + 1, "expected " + std::to_string(n) +
                                              " node lines, got " + std::to_string(i));
    int id = 0;
    double w = 0.0, f = 0.0;
    if (!(ls >> id >> w >> f) || (ls >> extra))
      fail(line_no, "expected node line \"id demand opening_cost\"");
    if (id < 1 || id > n) fail(line_no, "node id out of range");
    if (seen[static_cast<size_t>(id)]) fail(line_no, "duplicate node id");
    if (w < 0.0) fail(line_no, "negative demand");
    if (f < 0.0) fail(line_no, "negative opening cost");
    seen[static_cast<size_t>(id)] = 1;
    inst.demand[static_cast<size_t>(id)] = w;
    inst.opening_cost[static_cast<size_t>(id)] = f;
  }

  for (long long i = 0; i < m; ++i) {
    if (!next_line(ls)) fail(line_no + 1, "expected " + std::to_string(m) +
                                              " edge lines, got " + std::to_string(i));
    Edge e;
    if (!(ls >> e.u >> e.v >> e.length) || (ls >> extra))
      fail(line_no, "expected edge line \"u v length\"");
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      fail(line_no, "edge endpoint out of range");
    if (e.u == e.v) fail(line_no, "self-loop edge");
    if (!(e.length > 0.0)) fail(line_no, "nonpositive edge length");
    inst.edges.push_back(e);
  }

  if (next_line(ls)) fail(line_no, "unexpected trailing content");
  return inst;
}

std::string format_number(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(x));
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string serialize_instance(const Instance& inst) {
  std::string out;
  out += std::to_string(inst.n) + " " + std::to_string(inst.edges.size()) + "\n";
  for (NodeId v = 1; v <= inst.n; ++v) {
    out += std::to_string(v) + " " + format_number(inst.demand_of(v)) + " " +
           format_number(inst.cost_of(v)) + "\n";
  }
  for (const Edge& e : inst.edges) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           format_number(e.length) + "\n";
  }
  return out;
}

}  // namespace rftfl
