#include "permbound/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace permbound {

RestrictionGraph random_dag(int n, double p, std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({order[i], order[j]});
  return RestrictionGraph(n, edges);
}

namespace {

std::vector<Edge> forward_pairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  return pairs;
}

}  // namespace

std::vector<RestrictionGraph> naturally_labelled_dags(int n) {
  if (n < 0 || n > 7) throw InvalidArgument("naturally_labelled_dags supports 0 <= n <= 7");
  const auto pairs = forward_pairs(n);
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  std::vector<RestrictionGraph> out;
  out.reserve(subsets);
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    edges.clear();
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) edges.push_back(pairs[b]);
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<RestrictionGraph> labelled_dags(int n) {
  if (n < 0 || n > 5) throw InvalidArgument("labelled_dags supports 0 <= n <= 5");
  std::set<std::vector<Edge>> seen;
  std::vector<RestrictionGraph> out;
  std::vector<Vertex> labels(n);
  for (const RestrictionGraph& base : naturally_labelled_dags(n)) {
    std::iota(labels.begin(), labels.end(), 1);
    do {
      std::vector<Edge> edges;
      for (const Edge& e : base.edges()) edges.push_back({labels[e.from - 1], labels[e.to - 1]});
      RestrictionGraph g(n, edges);
      if (seen.insert(g.edges()).second) out.push_back(std::move(g));
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  return out;
}

}  // namespace permbound
