#include "permbound/error.hpp"

#include <sstream>

namespace permbound {

namespace {

std::string describe_cycle(const std::vector<Vertex>& cycle) {
  std::ostringstream oss;
  oss << "graph contains an oriented cycle: ";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0) oss << " -> ";
    oss << cycle[i];
  }
  return oss.str();
}

}  // namespace

VertexOutOfRange::VertexOutOfRange(Vertex v, int n)
    : Error("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]"),
      vertex_(v) {}

CyclicGraph::CyclicGraph(std::vector<Vertex> cycle)
    : Error(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

SizeMismatch::SizeMismatch(int lhs, int rhs)
    : Error("size mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

LimitExceeded::LimitExceeded(int n, int limit)
    : Error("n = " + std::to_string(n) + " exceeds enumeration limit " + std::to_string(limit)),
      n_(n),
      limit_(limit) {}

}  // namespace permbound
