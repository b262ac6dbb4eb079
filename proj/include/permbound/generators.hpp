#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "permbound/graph.hpp"

namespace permbound {

// Uniform random labelling used as a hidden topological order; each forward
// pair becomes an edge with probability p. Always acyclic.
RestrictionGraph random_dag(int n, double p, std::mt19937_64& rng);

// Every edge subset of the forward pairs (i < j, edge i -> j) under the
// identity labelling: 2^(n(n-1)/2) graphs, one per DAG up to isomorphism and
// more. n <= 7.
std::vector<RestrictionGraph> naturally_labelled_dags(int n);

// Every labelled DAG on [n], deduplicated, in a deterministic order. n <= 5.
std::vector<RestrictionGraph> labelled_dags(int n);

}  // namespace permbound
