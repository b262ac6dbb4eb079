#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permbound/graph.hpp"
#include "permbound/oracle.hpp"
#include "permbound/permutation.hpp"

namespace permbound {

using PermutationPair = std::pair<Permutation, Permutation>;

// Repeatedly gives the largest unused value to the smallest-labelled source
// and deletes it. The result satisfies g. Throws CyclicGraph.
Permutation greedy_construct(const RestrictionGraph& g);

// max over i of n - |R(i)| - |R^-1(i)| - 1; 0 for n <= 1.
int linf_diameter_bound(const RestrictionGraph& g);

// Two members of P(G) at l-inf distance linf_diameter_bound(g).
//
// k is the smallest vertex minimising |R(k)| + |R^-1(k)|. Both permutations
// give R(k) the values [1, |R(k)|] and R^-1(k) the values [n - |R^-1(k)| + 1, n],
// each filled by greedy_construct on the induced subgraph. The first puts k at
// the bottom of its feasible interval and the second at the top; the remaining
// vertices take the leftover middle interval, again via greedy_construct.
// A total order yields the identical pair at distance 0.
PermutationPair linf_extremal_pair(const RestrictionGraph& g);

// |Incomp(P)|: no two members of P(G) can disagree on a comparable pair.
std::int64_t kendall_upper_bound(const RestrictionGraph& g);

using UndirectedEdge = std::pair<Vertex, Vertex>;

// Transitive orientation of an undirected graph on [n], or nullopt when it is
// not a comparability graph. Edges are unordered; each returned pair (a, b)
// orients a--b as a -> b. Implication classes are peeled off the remaining
// edge set one at a time; a class containing both orientations of some edge
// means no orientation exists. The assembled orientation is then checked for
// transitivity and InternalInconsistency is thrown if the check fails.
std::optional<std::vector<UndirectedEdge>> transitive_orientation(
    int n, const std::vector<UndirectedEdge>& edges);

// Two linear extensions (a listed before b whenever a ~> b) whose common
// pairs are exactly the poset order.
struct Realizer2 {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

// True iff both orders are linear extensions and their intersection is <=_G.
bool is_realizer(const Poset& p, const Realizer2& r);

// Realizer of size <= 2 built from a transitive orientation Q of the
// incomparability graph: the orders are the smallest-label-first topological
// orders of <=_G + Q and <=_G + Q^-1. nullopt iff dim P >= 3.
std::optional<Realizer2> dimension_at_most_two(const RestrictionGraph& g);

// from_linear_extension applied to both orders of the realizer; the pair is
// at Kendall distance kendall_upper_bound(g). nullopt iff dim P >= 3.
std::optional<PermutationPair> kendall_extremal_pair(const RestrictionGraph& g);

enum class DiameterMethod { Formula, Realizer, Oracle };

std::string_view to_string(DiameterMethod m);

struct DiameterReport {
  Metric metric = Metric::Linf;
  std::int64_t bound = 0;
  bool attained = false;
  std::optional<PermutationPair> witness;
  DiameterMethod method = DiameterMethod::Formula;
};

// Always attained: the witness comes from linf_extremal_pair.
DiameterReport linf_diameter(const RestrictionGraph& g);

// Realizer when dim <= 2; exact oracle value when dim >= 3 and n <=
// exhaustive_limit; otherwise |Incomp(P)| flagged as not attained.
DiameterReport kendall_diameter(const RestrictionGraph& g,
                                int exhaustive_limit = kDefaultExhaustiveLimit);

}  // namespace permbound
