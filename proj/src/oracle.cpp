#include "permbound/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace permbound {

namespace {

void check_limit(int n, int limit) {
  if (n > limit) throw LimitExceeded(n, limit);
}

}  // namespace

std::vector<Permutation> enumerate_family(const RestrictionGraph& g, int limit) {
  const int n = g.size();
  check_limit(n, limit);
  if (!is_acyclic(g)) return {};

  const Reachability r = transitive_closure(g);
  std::vector<int> lo(n + 1), hi(n + 1);
  for (Vertex v = 1; v <= n; ++v) {
    lo[v] = r.reachable_count(v) + 1;
    hi[v] = n - r.inverse_reachable_count(v);
  }

  std::vector<Permutation> family;
  std::vector<int> value(n + 1, 0);
  std::vector<bool> used(n + 2, false);

  std::function<void(Vertex)> place = [&](Vertex pos) {
    if (pos > n) {
      family.emplace_back(std::vector<int>(value.begin() + 1, value.end()));
      return;
    }
    for (int x = lo[pos]; x <= hi[pos]; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (Vertex w : g.successors(pos))
        if (w < pos && value[w] >= x) ok = false;
      for (Vertex u : g.predecessors(pos))
        if (u < pos && value[u] <= x) ok = false;
      if (!ok) continue;
      used[x] = true;
      value[pos] = x;
      place(pos + 1);
      used[x] = false;
    }
    value[pos] = 0;
  };
  place(1);
  return family;
}

std::int64_t count_admissible(const RestrictionGraph& g, int limit) {
  return static_cast<std::int64_t>(enumerate_family(g, limit).size());
}

namespace {

// Bit (i, j), i < j, set when sigma_i > sigma_j. Kendall distance is the
// popcount of the xor of two masks.
std::uint64_t pair_mask(const Permutation& p) {
  auto v = p.values();
  std::uint64_t mask = 0;
  int bit = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j, ++bit)
      if (v[i] > v[j]) mask |= std::uint64_t{1} << bit;
  return mask;
}

}  // namespace

BruteDiameter brute_diameter(std::span<const Permutation> family, Metric metric) {
  BruteDiameter best;
  if (family.size() < 2) return best;
  const int n = family.front().size();
  const bool use_masks = metric == Metric::Kendall && n * (n - 1) / 2 <= 64;
  std::vector<std::uint64_t> masks;
  if (use_masks) {
    masks.reserve(family.size());
    for (const auto& p : family) masks.push_back(pair_mask(p));
  }

  std::int64_t value = -1;
  std::size_t bi = 0, bj = 1;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const std::int64_t d = use_masks ? std::popcount(masks[i] ^ masks[j])
                                       : distance(metric, family[i], family[j]);
      if (d > value) {
        value = d;
        bi = i;
        bj = j;
      }
    }
  best.value = value;
  best.witness.emplace(family[bi], family[bj]);
  return best;
}

BruteDiameter brute_diameter(const RestrictionGraph& g, Metric metric, int limit) {
  const auto family = enumerate_family(g, limit);
  return brute_diameter(family, metric);
}

std::vector<std::vector<Vertex>> linear_extensions(const RestrictionGraph& g, int limit) {
  const int n = g.size();
  check_limit(n, limit);
  if (!is_acyclic(g)) throw CyclicGraph(*find_cycle(g));

  std::vector<int> indegree(n + 1, 0);
  for (const Edge& e : g.edges()) ++indegree[e.to];
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> prefix;
  std::vector<bool> placed(n + 1, false);

  std::function<void()> extend = [&] {
    if (static_cast<int>(prefix.size()) == n) {
      out.push_back(prefix);
      return;
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (placed[v] || indegree[v] != 0) continue;
      placed[v] = true;
      prefix.push_back(v);
      for (Vertex w : g.successors(v)) --indegree[w];
      extend();
      for (Vertex w : g.successors(v)) ++indegree[w];
      prefix.pop_back();
      placed[v] = false;
    }
  };
  extend();
  return out;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> brute_realizer(
    const RestrictionGraph& g, int limit) {
  const int n = g.size();
  const auto extensions = linear_extensions(g, limit);
  const Poset p = to_poset(g);

  std::vector<int> indegree(n + 1, 0);
  for (const Edge& e : g.edges()) ++indegree[e.to];
  std::vector<bool> placed(n + 1, false);
  std::vector<Vertex> second;
  std::vector<int> pos1(n + 1);

  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(second.size()) == n) return true;
    for (Vertex v = 1; v <= n; ++v) {
      if (placed[v] || indegree[v] != 0) continue;
      // Every unplaced u incomparable to v lands after v here, so the first
      // order must have it before v.
      bool ok = true;
      for (Vertex u = 1; u <= n && ok; ++u)
        if (u != v && !placed[u] && !p.comparable(u, v) && pos1[u] > pos1[v]) ok = false;
      if (!ok) continue;
      placed[v] = true;
      second.push_back(v);
      for (Vertex w : g.successors(v)) --indegree[w];
      if (extend()) return true;
      for (Vertex w : g.successors(v)) ++indegree[w];
      second.pop_back();
      placed[v] = false;
    }
    return false;
  };

  for (const auto& first : extensions) {
    for (int i = 0; i < n; ++i) pos1[first[i]] = i;
    if (extend()) return std::make_pair(first, second);
  }
  return std::nullopt;
}

bool brute_dimension_le2(const RestrictionGraph& g, int limit) {
  return brute_realizer(g, limit).has_value();
}

RestrictionGraph transitive_reduction(const RestrictionGraph& g) {
  const int n = g.size();
  const Reachability r = transitive_closure(g);
  std::vector<Edge> kept;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      if (r.reaches(u, v) && !r.forward_row(u).intersects(r.backward_row(v))) kept.push_back({u, v});
  return RestrictionGraph(n, kept);
}

}  // namespace permbound
