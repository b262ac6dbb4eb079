#include "permbound/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace permbound {

RestrictionGraph::RestrictionGraph(int n, std::span<const Edge> edges)
    : n_(n), edges_(edges.begin(), edges.end()) {
  if (n < 0) throw InvalidGraph("negative vertex count");
  for (const Edge& e : edges_) {
    check_vertex(e.from);
    check_vertex(e.to);
    if (e.from == e.to) throw InvalidGraph("self-loop at vertex " + std::to_string(e.from));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  succ_.resize(n);
  pred_.resize(n);
  for (const Edge& e : edges_) {
    succ_[e.from - 1].push_back(e.to);
    pred_[e.to - 1].push_back(e.from);
  }
  // succ_ is already ascending because edges_ is sorted by (from, to).
  for (auto& p : pred_) std::sort(p.begin(), p.end());
}

void RestrictionGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) throw VertexOutOfRange(v, n_);
}

std::span<const Vertex> RestrictionGraph::successors(Vertex v) const {
  check_vertex(v);
  return succ_[v - 1];
}

std::span<const Vertex> RestrictionGraph::predecessors(Vertex v) const {
  check_vertex(v);
  return pred_[v - 1];
}

bool RestrictionGraph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::optional<std::vector<Vertex>> find_cycle(const RestrictionGraph& g) {
  const int n = g.size();
  enum class Mark : unsigned char { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<Vertex> parent(n, 0);

  // Iterative DFS; each frame remembers how many successors were visited.
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root = 1; root <= n; ++root) {
    if (mark[root - 1] != Mark::White) continue;
    stack.push_back({root, 0});
    mark[root - 1] = Mark::Grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto succ = g.successors(v);
      if (next == succ.size()) {
        mark[v - 1] = Mark::Black;
        stack.pop_back();
        continue;
      }
      const Vertex w = succ[next++];
      if (mark[w - 1] == Mark::Grey) {
        std::vector<Vertex> cycle;
        for (Vertex x = v; x != w; x = parent[x - 1]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        cycle.push_back(w);
        return cycle;
      }
      if (mark[w - 1] == Mark::White) {
        parent[w - 1] = v;
        mark[w - 1] = Mark::Grey;
        stack.push_back({w, 0});
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic(const RestrictionGraph& g) { return !find_cycle(g).has_value(); }

std::vector<Vertex> topological_order(const RestrictionGraph& g) {
  const int n = g.size();
  std::vector<int> indegree(n);
  for (const Edge& e : g.edges()) ++indegree[e.to - 1];

  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> sources;
  for (Vertex v = 1; v <= n; ++v)
    if (indegree[v - 1] == 0) sources.push(v);

  std::vector<Vertex> order;
  order.reserve(n);
  while (!sources.empty()) {
    const Vertex v = sources.top();
    sources.pop();
    order.push_back(v);
    for (Vertex w : g.successors(v))
      if (--indegree[w - 1] == 0) sources.push(w);
  }
  if (static_cast<int>(order.size()) != n) throw CyclicGraph(*find_cycle(g));
  return order;
}

Reachability::Reachability(int n, std::vector<BitRow> forward)
    : n_(n), forward_(std::move(forward)), backward_(n, BitRow(n)) {
  for (int u = 0; u < n; ++u)
    for (auto v = forward_[u].find_first(); v != BitRow::npos; v = forward_[u].find_next(v))
      backward_[v].set(u);
}

void Reachability::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) throw VertexOutOfRange(v, n_);
}

bool Reachability::reaches(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return forward_[u - 1].test(v - 1);
}

namespace {

std::vector<Vertex> members_except(const BitRow& row, Vertex self) {
  std::vector<Vertex> out;
  for (auto i = row.find_first(); i != BitRow::npos; i = row.find_next(i)) {
    const Vertex u = static_cast<Vertex>(i) + 1;
    if (u != self) out.push_back(u);
  }
  return out;
}

}  // namespace

std::vector<Vertex> Reachability::reachable_set(Vertex v) const {
  check_vertex(v);
  return members_except(forward_[v - 1], v);
}

std::vector<Vertex> Reachability::inverse_reachable_set(Vertex v) const {
  check_vertex(v);
  return members_except(backward_[v - 1], v);
}

int Reachability::reachable_count(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(forward_[v - 1].count() - forward_[v - 1].test(v - 1));
}

int Reachability::inverse_reachable_count(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(backward_[v - 1].count() - backward_[v - 1].test(v - 1));
}

const BitRow& Reachability::forward_row(Vertex v) const {
  check_vertex(v);
  return forward_[v - 1];
}

const BitRow& Reachability::backward_row(Vertex v) const {
  check_vertex(v);
  return backward_[v - 1];
}

Reachability transitive_closure(const RestrictionGraph& g) {
  const int n = g.size();
  const std::vector<Vertex> order = topological_order(g);
  std::vector<BitRow> rows(n, BitRow(n));
  // Successors of v come later in `order`, so their rows are final when v is
  // processed from the back.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    BitRow& row = rows[*it - 1];
    for (Vertex w : g.successors(*it)) {
      row.set(w - 1);
      row |= rows[w - 1];
    }
  }
  return Reachability(n, std::move(rows));
}

std::vector<Vertex> reachable_set(const Reachability& r, Vertex v) { return r.reachable_set(v); }

std::vector<Vertex> inverse_reachable_set(const Reachability& r, Vertex v) {
  return r.inverse_reachable_set(v);
}

Poset::Poset(Reachability reach) : reach_(std::move(reach)) {
  const int n = reach_.size();
  for (Vertex i = 1; i <= n; ++i) {
    if (reach_.reaches(i, i)) throw CyclicGraph({i, i});
    for (Vertex j = i + 1; j <= n; ++j)
      if (!reach_.reaches(i, j) && !reach_.reaches(j, i)) incomp_.emplace_back(i, j);
  }
}

bool Poset::leq(Vertex a, Vertex b) const { return a == b ? (a >= 1 && a <= size()) : reach_.reaches(a, b); }

std::size_t Poset::comparable_pair_count() const {
  const std::size_t n = static_cast<std::size_t>(size());
  if (n == 0) return 0;
  return n * (n - 1) / 2 - incomp_.size();
}

Poset to_poset(const RestrictionGraph& g) { return Poset(transitive_closure(g)); }

std::optional<Vertex> InducedSubgraph::relabel(Vertex v) const {
  auto it = std::lower_bound(original.begin(), original.end(), v);
  if (it == original.end() || *it != v) return std::nullopt;
  return static_cast<Vertex>(it - original.begin()) + 1;
}

InducedSubgraph induced_subgraph(const RestrictionGraph& g, std::span<const Vertex> s) {
  const int n = g.size();
  std::vector<Vertex> members(s.begin(), s.end());
  for (Vertex v : members)
    if (v < 1 || v > n) throw VertexOutOfRange(v, n);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<Vertex> label(n + 1, 0);
  for (std::size_t k = 0; k < members.size(); ++k) label[members[k]] = static_cast<Vertex>(k) + 1;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (label[e.from] != 0 && label[e.to] != 0) edges.push_back({label[e.from], label[e.to]});

  return {RestrictionGraph(static_cast<int>(members.size()), edges), std::move(members)};
}

}  // namespace permbound
