#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "srcomb/index_set.hpp"
#include "srcomb/rational.hpp"

namespace srcomb {

/// Simple undirected graph on vertices 0..vertex_count-1; edges stored with
/// a < b, sorted lexicographically, no loops or duplicates.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph complete_bipartite(int n1, int n2);
  /// Join of the complete graph on n vertices (0..n-1) and the empty graph
  /// on r vertices (n..n+r-1): the r extra vertices are adjacent to the
  /// clique but not to each other.
  static Graph join_complete_empty(int n, int r);
  /// Complete bipartite graph on A ∪ A* ∪ {u-bar} versus B ∪ B* ∪ {v-bar}.
  /// Left side: A = 0..n1-1, A* = n1..n1+r-1, u-bar = n1+r; the right side
  /// mirrors this starting at n1+r+1.  v-bar is the last vertex.
  static Graph hat_bipartite(int n1, int n2, int r);

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool adjacent(int a, int b) const;
  Graph complement() const;

  /// {"vertices": v, "edges": [[a,b],...]} with a < b, sorted.
  std::string to_json() const;
  static Graph from_json(const std::string& text);

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

/// One orientation of a graph's edges: bit i set means edge i points from
/// second(edge) to first(edge), clear means first to second, in the
/// graph's canonical edge order.
struct Orientation {
  std::uint32_t mask = 0;

  std::vector<std::pair<int, int>> directed_edges(const Graph& g) const;
  std::vector<int> outdegrees(const Graph& g) const;
};

/// Acyclicity decided by Kahn's algorithm (topological sort).
bool acyclic_by_toposort(const Graph& g, Orientation o);
/// Acyclicity decided independently by a DFS back-edge search.
bool acyclic_by_dfs(const Graph& g, Orientation o);

/// Brute-force count over all 2^|E| orientations; |E| <= guard.
BigInt count_acyclic_orientations(const Graph& g, int edge_guard = 20);

/// Acyclic orientations of hat_bipartite(n1, n2, r) such that
///   [S]  within each bipartite block (u-bar and v-bar excluded) the number
///        of vertices sharing any given outdegree lies in S,
///   [r]  the starred vertices of a side have pairwise distinct outdegrees,
///   [ss] u-bar is the unique source and v-bar the unique sink.
BigInt count_constrained_orientations(int n1, int n2, int r, const IndexSet& S,
                                      int edge_guard = 20);

/// Partitions of V(g) into exactly k cliques with every clique size in S.
BigInt clique_partition_count(const Graph& g, long k, const IndexSet& S, int vertex_guard = 10);
/// Partitions of V(g) into cliques with sizes in S, any number of blocks.
BigInt clique_partition_total(const Graph& g, const IndexSet& S, int vertex_guard = 10);
/// Partitions of V(g) into k independent sets with sizes in S (the dual
/// enumerator, used to cross-check against complements).
BigInt independent_partition_count(const Graph& g, long k, const IndexSet& S,
                                   int vertex_guard = 10);

}  // namespace srcomb
