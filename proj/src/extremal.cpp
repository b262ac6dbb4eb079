#include "permbound/extremal.hpp"

#include <algorithm>
#include <deque>

namespace permbound {

Permutation greedy_construct(const RestrictionGraph& g) {
  const int n = g.size();
  std::vector<int> values(n);
  int next = n;
  for (Vertex s : topological_order(g)) values[s - 1] = next--;
  return Permutation(std::move(values));
}

namespace {

// Writes greedy_construct(G[vertices]) shifted into [low, low + |vertices| - 1].
void fill_greedy(const RestrictionGraph& g, const std::vector<Vertex>& vertices, int low,
                 std::vector<int>& values) {
  if (vertices.empty()) return;
  const InducedSubgraph sub = induced_subgraph(g, vertices);
  const Permutation local = greedy_construct(sub.graph);
  for (Vertex k = 1; k <= local.size(); ++k) values[sub.original[k - 1] - 1] = low - 1 + local.at(k);
}

}  // namespace

int linf_diameter_bound(const RestrictionGraph& g) {
  const Reachability r = transitive_closure(g);
  const int n = g.size();
  int best = 0;
  for (Vertex i = 1; i <= n; ++i)
    best = std::max(best, n - r.reachable_count(i) - r.inverse_reachable_count(i) - 1);
  return best;
}

PermutationPair linf_extremal_pair(const RestrictionGraph& g) {
  const int n = g.size();
  const Reachability r = transitive_closure(g);
  if (n == 0) return {Permutation(), Permutation()};

  Vertex k = 1;
  for (Vertex i = 2; i <= n; ++i)
    if (r.reachable_count(i) + r.inverse_reachable_count(i) <
        r.reachable_count(k) + r.inverse_reachable_count(k))
      k = i;

  const std::vector<Vertex> below = r.reachable_set(k);
  const std::vector<Vertex> above = r.inverse_reachable_set(k);
  std::vector<Vertex> middle;
  for (Vertex v = 1; v <= n; ++v)
    if (v != k && !r.reaches(k, v) && !r.reaches(v, k)) middle.push_back(v);

  const int nb = static_cast<int>(below.size());
  const int na = static_cast<int>(above.size());

  std::vector<int> low(n), high(n);
  low[k - 1] = nb + 1;
  high[k - 1] = n - na;
  for (auto* values : {&low, &high}) {
    fill_greedy(g, below, 1, *values);
    fill_greedy(g, above, n - na + 1, *values);
  }
  fill_greedy(g, middle, nb + 2, low);
  fill_greedy(g, middle, nb + 1, high);

  PermutationPair pair{Permutation(std::move(low)), Permutation(std::move(high))};
  if (!satisfies(pair.first, g) || !satisfies(pair.second, g))
    throw InternalInconsistency("l-inf extremal construction violates the graph");
  return pair;
}

std::int64_t kendall_upper_bound(const RestrictionGraph& g) {
  return static_cast<std::int64_t>(to_poset(g).incomparable_pairs().size());
}

std::optional<std::vector<UndirectedEdge>> transitive_orientation(
    int n, const std::vector<UndirectedEdge>& edges) {
  // present[a][b]: a--b is still in the remaining edge set E_i.
  std::vector<std::vector<char>> present(n + 1, std::vector<char>(n + 1, 0));
  std::size_t remaining = 0;
  for (auto [a, b] : edges) {
    if (a < 1 || a > n) throw VertexOutOfRange(a, n);
    if (b < 1 || b > n) throw VertexOutOfRange(b, n);
    if (a == b) throw InvalidArgument("loop in undirected edge set");
    if (!present[a][b]) ++remaining;
    present[a][b] = present[b][a] = 1;
  }

  // label[a][b] = class id of arc a -> b, 0 when unassigned.
  std::vector<std::vector<int>> label(n + 1, std::vector<int>(n + 1, 0));
  std::vector<UndirectedEdge> orientation;
  orientation.reserve(remaining);
  int class_id = 0;

  while (remaining > 0) {
    Vertex a0 = 0, b0 = 0;
    for (Vertex a = 1; a <= n && a0 == 0; ++a)
      for (Vertex b = a + 1; b <= n; ++b)
        if (present[a][b]) {
          a0 = a;
          b0 = b;
          break;
        }

    ++class_id;
    std::vector<UndirectedEdge> members;
    std::deque<UndirectedEdge> queue;
    auto visit = [&](Vertex x, Vertex y) -> bool {
      if (label[x][y] == class_id) return true;
      if (label[y][x] == class_id) return false;  // both orientations forced
      label[x][y] = class_id;
      members.emplace_back(x, y);
      queue.emplace_back(x, y);
      return true;
    };
    visit(a0, b0);
    while (!queue.empty()) {
      const auto [x, y] = queue.front();
      queue.pop_front();
      for (Vertex z = 1; z <= n; ++z) {
        if (z == x || z == y) continue;
        // x->y forces x->z when x--z is an edge and y--z is not.
        if (present[x][z] && !present[y][z] && !visit(x, z)) return std::nullopt;
        // x->y forces z->y when z--y is an edge and z--x is not.
        if (present[z][y] && !present[z][x] && !visit(z, y)) return std::nullopt;
      }
    }
    for (auto [x, y] : members) {
      present[x][y] = present[y][x] = 0;
      orientation.emplace_back(x, y);
    }
    remaining -= members.size();
  }

  // Transitivity gate: x->y and y->z must imply x->z.
  std::vector<BitRow> out(n, BitRow(n));
  for (auto [x, y] : orientation) out[x - 1].set(y - 1);
  for (auto [x, y] : orientation)
    if (!out[y - 1].is_subset_of(out[x - 1]))
      throw InternalInconsistency("implication-class orientation is not transitive");

  std::sort(orientation.begin(), orientation.end());
  return orientation;
}

bool is_realizer(const Poset& p, const Realizer2& r) {
  const int n = p.size();
  auto positions = [n](const std::vector<Vertex>& order) -> std::optional<std::vector<int>> {
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    std::vector<int> pos(n + 1, -1);
    for (int i = 0; i < n; ++i) {
      const Vertex v = order[i];
      if (v < 1 || v > n || pos[v] != -1) return std::nullopt;
      pos[v] = i;
    }
    return pos;
  };
  const auto p1 = positions(r.first);
  const auto p2 = positions(r.second);
  if (!p1 || !p2) return false;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = 1; b <= n; ++b) {
      if (a == b) continue;
      const bool both = (*p1)[a] < (*p1)[b] && (*p2)[a] < (*p2)[b];
      if (both != p.leq(a, b)) return false;
    }
  return true;
}

std::optional<Realizer2> dimension_at_most_two(const RestrictionGraph& g) {
  const Poset p = to_poset(g);
  const int n = p.size();
  const auto q = transitive_orientation(n, p.incomparable_pairs());
  if (!q) return std::nullopt;

  auto extension = [&](bool reversed) {
    std::vector<Edge> edges(g.edges());
    for (auto [a, b] : *q) edges.push_back(reversed ? Edge{b, a} : Edge{a, b});
    try {
      return topological_order(RestrictionGraph(n, edges));
    } catch (const CyclicGraph&) {
      throw InternalInconsistency("poset order plus incomparability orientation is cyclic");
    }
  };
  Realizer2 r{extension(false), extension(true)};
  if (!is_realizer(p, r)) throw InternalInconsistency("constructed orders do not realize the poset");
  return r;
}

std::optional<PermutationPair> kendall_extremal_pair(const RestrictionGraph& g) {
  const auto r = dimension_at_most_two(g);
  if (!r) return std::nullopt;
  return PermutationPair{from_linear_extension(r->first), from_linear_extension(r->second)};
}

std::string_view to_string(DiameterMethod m) {
  switch (m) {
    case DiameterMethod::Formula:
      return "formula";
    case DiameterMethod::Realizer:
      return "realizer";
    case DiameterMethod::Oracle:
      return "oracle";
  }
  return "formula";
}

DiameterReport linf_diameter(const RestrictionGraph& g) {
  DiameterReport report;
  report.metric = Metric::Linf;
  report.bound = linf_diameter_bound(g);
  report.witness = linf_extremal_pair(g);
  report.attained = true;
  report.method = DiameterMethod::Formula;
  return report;
}

DiameterReport kendall_diameter(const RestrictionGraph& g, int exhaustive_limit) {
  DiameterReport report;
  report.metric = Metric::Kendall;
  if (auto pair = kendall_extremal_pair(g)) {
    report.bound = kendall_upper_bound(g);
    report.attained = true;
    report.witness = std::move(pair);
    report.method = DiameterMethod::Realizer;
  } else if (g.size() <= exhaustive_limit) {
    BruteDiameter exact = brute_diameter(g, Metric::Kendall, exhaustive_limit);
    report.bound = exact.value;
    report.attained = true;
    report.witness = std::move(exact.witness);
    report.method = DiameterMethod::Oracle;
  } else {
    report.bound = kendall_upper_bound(g);
    report.attained = false;
    report.method = DiameterMethod::Formula;
  }
  return report;
}

}  // namespace permbound
