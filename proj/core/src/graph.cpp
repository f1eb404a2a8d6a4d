#include "srcomb/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace srcomb {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (auto& [a, b] : edges_) {
    if (a == b) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= vertex_count) throw std::invalid_argument("Graph: edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("Graph: duplicate edge");
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n, std::move(edges));
}

Graph Graph::complete_bipartite(int n1, int n2) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) edges.emplace_back(a, n1 + b);
  return Graph(n1 + n2, std::move(edges));
}

Graph Graph::join_complete_empty(int n, int r) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < r; ++b) edges.emplace_back(a, n + b);
  return Graph(n + r, std::move(edges));
}

Graph Graph::hat_bipartite(int n1, int n2, int r) {
  const int left = n1 + r + 1;
  const int right = n2 + r + 1;
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < left; ++a)
    for (int b = 0; b < right; ++b) edges.emplace_back(a, left + b);
  return Graph(left + right, std::move(edges));
}

bool Graph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < vertex_count_; ++a)
    for (int b = a + 1; b < vertex_count_; ++b)
      if (!adjacent(a, b)) edges.emplace_back(a, b);
  return Graph(vertex_count_, std::move(edges));
}

std::string Graph::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertex_count_;
  nlohmann::json e = nlohmann::json::array();
  for (const auto& [a, b] : edges_) e.push_back(nlohmann::json::array({a, b}));
  j["edges"] = std::move(e);
  return j.dump();
}

Graph Graph::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("vertices").get<int>(), std::move(edges));
}

std::vector<std::pair<int, int>> Orientation::directed_edges(const Graph& g) const {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [a, b] = g.edges()[i];
    if (mask & (1U << i))
      out.emplace_back(b, a);
    else
      out.emplace_back(a, b);
  }
  return out;
}

std::vector<int> Orientation::outdegrees(const Graph& g) const {
  std::vector<int> deg(g.vertex_count(), 0);
  for (const auto& [from, to] : directed_edges(g)) ++deg[from];
  return deg;
}

bool acyclic_by_toposort(const Graph& g, Orientation o) {
  const auto arcs = o.directed_edges(g);
  std::vector<int> indeg(g.vertex_count(), 0);
  for (const auto& [from, to] : arcs) ++indeg[to];
  std::vector<int> queue;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int processed = 0;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    ++processed;
    for (const auto& [from, to] : arcs)
      if (from == v && --indeg[to] == 0) queue.push_back(to);
  }
  return processed == g.vertex_count();
}

bool acyclic_by_dfs(const Graph& g, Orientation o) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const auto& [from, to] : o.directed_edges(g)) adj[from].push_back(to);
  std::vector<int> state(g.vertex_count(), 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : adj[v]) {
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < g.vertex_count(); ++v)
    if (state[v] == 0 && !dfs(v)) return false;
  return true;
}

namespace {

void check_edge_guard(const Graph& g, int edge_guard, const char* what) {
  if (g.edge_count() > edge_guard)
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(g.edge_count()) +
                                " edges exceeds enumeration guard " +
                                std::to_string(edge_guard));
  // the orientation mask is 32-bit; cap even overridden guards
  if (g.edge_count() > 30)
    throw std::invalid_argument(std::string(what) + ": more than 30 edges is not enumerable");
}

}  // namespace

BigInt count_acyclic_orientations(const Graph& g, int edge_guard) {
  check_edge_guard(g, edge_guard, "count_acyclic_orientations");
  BigInt count = 0;
  const std::uint32_t limit = 1U << g.edge_count();
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (acyclic_by_toposort(g, Orientation{mask})) count += 1;
  return count;
}

BigInt count_constrained_orientations(int n1, int n2, int r, const IndexSet& S, int edge_guard) {
  if (n1 < 0 || n2 < 0 || r < 0)
    throw std::invalid_argument("count_constrained_orientations: sizes must be nonnegative");
  const Graph g = Graph::hat_bipartite(n1, n2, r);
  check_edge_guard(g, edge_guard, "count_constrained_orientations");

  const int left = n1 + r + 1;
  const int u_bar = n1 + r;              // last vertex of the left side
  const int v_bar = g.vertex_count() - 1;  // last vertex of the right side

  // Outdegree multiplicities within one bipartite block, u-bar/v-bar excluded.
  auto multiplicities_ok = [&](const std::vector<int>& deg, int begin, int end) {
    std::map<int, long> freq;
    for (int v = begin; v < end; ++v) ++freq[deg[v]];
    for (const auto& [value, count] : freq)
      if (!S.contains(count)) return false;
    return true;
  };
  auto starred_distinct = [&](const std::vector<int>& deg, int begin, int end) {
    for (int a = begin; a < end; ++a)
      for (int b = a + 1; b < end; ++b)
        if (deg[a] == deg[b]) return false;
    return true;
  };

  BigInt count = 0;
  const std::uint32_t limit = 1U << g.edge_count();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const Orientation o{mask};
    const auto arcs = o.directed_edges(g);
    std::vector<int> outdeg(g.vertex_count(), 0), indeg(g.vertex_count(), 0);
    for (const auto& [from, to] : arcs) {
      ++outdeg[from];
      ++indeg[to];
    }
    // [ss]: unique source u-bar, unique sink v-bar
    if (indeg[u_bar] != 0 || outdeg[v_bar] != 0) continue;
    bool ok = true;
    for (int v = 0; v < g.vertex_count() && ok; ++v) {
      if (v != u_bar && indeg[v] == 0) ok = false;
      if (v != v_bar && outdeg[v] == 0) ok = false;
    }
    if (!ok) continue;
    // [r] and [S]
    if (!starred_distinct(outdeg, n1, n1 + r)) continue;
    if (!starred_distinct(outdeg, left + n2, left + n2 + r)) continue;
    if (!multiplicities_ok(outdeg, 0, n1 + r)) continue;
    if (!multiplicities_ok(outdeg, left, left + n2 + r)) continue;
    if (!acyclic_by_toposort(g, o)) continue;
    count += 1;
  }
  return count;
}

namespace {

// Exhaustive partition counter with a per-block admissibility predicate.
BigInt count_partitions(const Graph& g, long k, const IndexSet& S, int vertex_guard,
                        bool want_cliques, bool any_block_count, const char* what) {
  if (g.vertex_count() > vertex_guard)
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                                " vertices exceeds enumeration guard " +
                                std::to_string(vertex_guard));
  std::vector<std::vector<int>> blocks;
  BigInt count = 0;
  auto block_ok = [&](const std::vector<int>& b, int candidate) {
    for (int v : b)
      if (g.adjacent(v, candidate) != want_cliques) return false;
    return true;
  };
  std::function<void(int)> place = [&](int v) {
    if (v == g.vertex_count()) {
      if (!any_block_count && static_cast<long>(blocks.size()) != k) return;
      for (const auto& b : blocks)
        if (!S.contains(static_cast<long>(b.size()))) return;
      count += 1;
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {  // indexed: recursion reallocates
      if (!block_ok(blocks[i], v)) continue;
      blocks[i].push_back(v);
      place(v + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({v});
    place(v + 1);
    blocks.pop_back();
  };
  place(0);
  return count;
}

}  // namespace

BigInt clique_partition_count(const Graph& g, long k, const IndexSet& S, int vertex_guard) {
  return count_partitions(g, k, S, vertex_guard, true, false, "clique_partition_count");
}

BigInt clique_partition_total(const Graph& g, const IndexSet& S, int vertex_guard) {
  return count_partitions(g, 0, S, vertex_guard, true, true, "clique_partition_total");
}

BigInt independent_partition_count(const Graph& g, long k, const IndexSet& S, int vertex_guard) {
  return count_partitions(g, k, S, vertex_guard, false, false, "independent_partition_count");
}

}  // namespace srcomb
