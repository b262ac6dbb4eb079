#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "permbound/error.hpp"

namespace permbound {

using BitRow = boost::dynamic_bitset<>;

// Directed edge u -> v: every satisfying permutation has sigma_u > sigma_v.
struct Edge {
  Vertex from;
  Vertex to;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed graph on [n]. Edges are kept sorted and deduplicated; self-loops
// and out-of-range endpoints are rejected at construction. The graph may be
// cyclic; operations that need a DAG check and throw CyclicGraph.
class RestrictionGraph {
public:
  RestrictionGraph() = default;
  explicit RestrictionGraph(int n, std::span<const Edge> edges = {});
  RestrictionGraph(int n, std::initializer_list<Edge> edges)
      : RestrictionGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Out-neighbours of v in ascending label order.
  std::span<const Vertex> successors(Vertex v) const;
  std::span<const Vertex> predecessors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const RestrictionGraph& a, const RestrictionGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> succ_;
  std::vector<std::vector<Vertex>> pred_;
};

// One oriented cycle {v_1, ..., v_k, v_1}, or nullopt if g is acyclic. The
// search starts from the smallest label and follows successors in ascending
// order, so the witness is deterministic.
std::optional<std::vector<Vertex>> find_cycle(const RestrictionGraph& g);

bool is_acyclic(const RestrictionGraph& g);

// Kahn's algorithm always taking the smallest-labelled source. Throws
// CyclicGraph when no source remains before all vertices are emitted.
std::vector<Vertex> topological_order(const RestrictionGraph& g);

// Strict reachability u ~> v (path of length >= 1), stored as bit rows in
// both directions.
class Reachability {
public:
  Reachability() = default;
  Reachability(int n, std::vector<BitRow> forward);

  int size() const noexcept { return n_; }
  bool reaches(Vertex u, Vertex v) const;

  // R(v): vertices u != v with v ~> u.
  std::vector<Vertex> reachable_set(Vertex v) const;
  // R^-1(v): vertices u != v with u ~> v.
  std::vector<Vertex> inverse_reachable_set(Vertex v) const;
  int reachable_count(Vertex v) const;
  int inverse_reachable_count(Vertex v) const;

  // Row v-1 holds R(v) with bit u-1 set for u in R(v).
  const BitRow& forward_row(Vertex v) const;
  const BitRow& backward_row(Vertex v) const;

  friend bool operator==(const Reachability&, const Reachability&) = default;

private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<BitRow> forward_;
  std::vector<BitRow> backward_;
};

// Rows are OR-ed in reverse topological order. Throws CyclicGraph.
Reachability transitive_closure(const RestrictionGraph& g);

std::vector<Vertex> reachable_set(const Reachability& r, Vertex v);
std::vector<Vertex> inverse_reachable_set(const Reachability& r, Vertex v);

// The order a <= b iff a ~> b or a = b.
class Poset {
public:
  explicit Poset(Reachability reach);

  int size() const noexcept { return reach_.size(); }
  bool leq(Vertex a, Vertex b) const;
  bool comparable(Vertex a, Vertex b) const { return leq(a, b) || leq(b, a); }
  const Reachability& reachability() const noexcept { return reach_; }

  // Pairs (i, j), i < j, with neither i ~> j nor j ~> i, lexicographic.
  const std::vector<std::pair<Vertex, Vertex>>& incomparable_pairs() const noexcept {
    return incomp_;
  }
  std::size_t comparable_pair_count() const;

private:
  Reachability reach_;
  std::vector<std::pair<Vertex, Vertex>> incomp_;
};

Poset to_poset(const RestrictionGraph& g);

struct InducedSubgraph {
  RestrictionGraph graph;
  // original[k-1] is the vertex of g relabelled to k; strictly increasing.
  std::vector<Vertex> original;

  // Label in the subgraph of an original vertex, or nullopt if not in s.
  std::optional<Vertex> relabel(Vertex v) const;
};

// G[s] with vertices relabelled 1..|s| in increasing original order.
InducedSubgraph induced_subgraph(const RestrictionGraph& g, std::span<const Vertex> s);

}  // namespace permbound
