#pragma once

// Brute-force ground truth. Everything here enumerates; use it at small n to
// check the constructive algorithms.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "permbound/graph.hpp"
#include "permbound/permutation.hpp"

namespace permbound {

inline constexpr int kDefaultExhaustiveLimit = 8;

// P(G) in lexicographic order, by backtracking over positions. Each position v
// is restricted to [|R(v)| + 1, n - |R^-1(v)|] and checked against the edges
// to earlier positions. A cyclic graph gives an empty family.
std::vector<Permutation> enumerate_family(const RestrictionGraph& g,
                                          int limit = kDefaultExhaustiveLimit);

std::int64_t count_admissible(const RestrictionGraph& g, int limit = kDefaultExhaustiveLimit);

struct BruteDiameter {
  std::int64_t value = 0;
  // First maximising pair in lexicographic scan order; absent when |family| <= 1.
  std::optional<std::pair<Permutation, Permutation>> witness;
};

BruteDiameter brute_diameter(std::span<const Permutation> family, Metric metric);
BruteDiameter brute_diameter(const RestrictionGraph& g, Metric metric,
                             int limit = kDefaultExhaustiveLimit);

// All linear extensions (a before b whenever a ~> b), lexicographic.
std::vector<std::vector<Vertex>> linear_extensions(const RestrictionGraph& g,
                                                   int limit = kDefaultExhaustiveLimit);

// Searches pairs of linear extensions for one whose intersection is <=_G.
// While the second order is built, a vertex may only be placed once every
// still-unplaced vertex incomparable to it precedes it in the first order.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> brute_realizer(
    const RestrictionGraph& g, int limit = kDefaultExhaustiveLimit);

bool brute_dimension_le2(const RestrictionGraph& g, int limit = kDefaultExhaustiveLimit);

// Minimal edge set with the same reachability. Throws CyclicGraph.
RestrictionGraph transitive_reduction(const RestrictionGraph& g);

}  // namespace permbound
