#include "triblock/graph.hpp"

#include <algorithm>
#include <string>

#include "triblock/error.hpp"

namespace triblock {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorKind::InvalidGraph, "negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= n) {
      throw Error(ErrorKind::InvalidGraph, "edge {" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + "} out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorKind::InvalidGraph, "duplicate edge {" + std::to_string(dup->u) + "," +
                                             std::to_string(dup->v) + "}");
  }
  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  const auto& row = adj_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<int> Graph::edge_id(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  std::vector<Edge> es = edges_;
  es.emplace_back(a, b);
  return Graph(n_, std::move(es));
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const Edge& e : edges_) es.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n_, std::move(es));
}

Graph Graph::edge_induced(std::span<const int> edge_ids) const {
  std::vector<Vertex> verts;
  for (int id : edge_ids) {
    verts.push_back(edges_[id].u);
    verts.push_back(edges_[id].v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto index = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<Edge> es;
  for (int id : edge_ids) es.emplace_back(index(edges_[id].u), index(edges_[id].v));
  return Graph(static_cast<int>(verts.size()), std::move(es));
}

Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(es));
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return Graph(a + b, std::move(es));
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

}  // namespace triblock
