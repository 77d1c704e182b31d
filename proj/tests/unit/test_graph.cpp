#include <doctest.h>

#include "triblock/error.hpp"
#include "triblock/graph.hpp"

using namespace triblock;

TEST_CASE("edges are normalised and sorted") {
  Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  REQUIRE(g.size() == 3);
  CHECK(g.edge(0) == Edge(0, 1));
  CHECK(g.edge(1) == Edge(0, 2));
  CHECK(g.edge(2) == Edge(1, 3));
  CHECK(g.edge_id(3, 1) == 2);
  CHECK_FALSE(g.edge_id(2, 3).has_value());
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(2, 0));
}

TEST_CASE("invalid graphs are rejected") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  CHECK(kind_of([] { Graph(3, {{1, 1}}); }) == ErrorKind::InvalidGraph);
  CHECK(kind_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorKind::InvalidGraph);
  CHECK(kind_of([] { Graph(3, {{0, 3}}); }) == ErrorKind::InvalidGraph);
  CHECK(kind_of([] { Graph(-1, {}); }) == ErrorKind::InvalidGraph);
}

TEST_CASE("standard families") {
  CHECK(cycle_graph(6).size() == 6);
  CHECK(complete_graph(5).size() == 10);
  CHECK(complete_bipartite_graph(3, 3).size() == 9);
  CHECK(path_graph(4).size() == 3);
  CHECK(complete_graph(4).is_connected());
  CHECK_FALSE(Graph(3, {{0, 1}}).is_connected());
  CHECK(Graph(1, {}).is_connected());
}

TEST_CASE("relabel and edge-induced subgraphs") {
  const Graph c = cycle_graph(4);
  const std::vector<Vertex> perm = {2, 0, 3, 1};
  const Graph r = c.relabeled(perm);
  CHECK(r.size() == 4);
  CHECK(r.has_edge(2, 0));
  CHECK(r.has_edge(1, 2));
  const Graph k = complete_graph(4);
  const std::vector<int> ids = {*k.edge_id(1, 2), *k.edge_id(2, 3)};
  const Graph sub = k.edge_induced(ids);
  CHECK(sub.order() == 3);
  CHECK(sub == path_graph(3));
  CHECK_THROWS_AS(c.with_edge(0, 1), Error);
  CHECK(c.with_edge(0, 2).size() == 5);
}
