#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace triblock {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1. Edge ids index the
/// lexicographically sorted edge list, so they depend only on the edge set.
class Graph {
 public:
  Graph() = default;

  /// Throws Error(InvalidGraph) on loops, duplicates or out-of-range ends.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  /// Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(Vertex a, Vertex b) const;
  std::optional<int> edge_id(Vertex a, Vertex b) const;

  bool is_connected() const;

  /// The same graph with one extra edge; throws if it already exists.
  Graph with_edge(Vertex a, Vertex b) const;

  /// Relabels vertex v to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Subgraph spanned by the given edge ids, vertices compacted to 0..k-1 in
  /// increasing order of their original id.
  Graph edge_induced(std::span<const int> edge_ids) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph path_graph(int n);

}  // namespace triblock
