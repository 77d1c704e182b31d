#include <doctest.h>

#include <random>

#include "../support/corpus.hpp"
#include "../support/reference.hpp"
#include "triblock/blocks.hpp"
#include "triblock/constructions.hpp"
#include "triblock/error.hpp"
#include "triblock/patterns.hpp"

using namespace triblock;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) es.emplace_back(a, b);
    }
  }
  return Graph(n, es);
}

const Graph& b6() { static const Graph g = catalog_entry(BlockLabel::B6).graph(); return g; }

}  // namespace

TEST_CASE("theta patterns") {
  const auto t42 = theta_pattern(4, 2);
  CHECK(t42.graph.order() == 4);
  CHECK(t42.graph.size() == 5);
  CHECK(are_isomorphic(t42.graph, complete_graph(4).edge_induced(std::vector<int>{0, 1, 2, 3, 4})));
  for (int d : {2, 3}) {
    const auto t = theta_pattern(6, d);
    CHECK(degree_sequence(t.graph) == std::vector<int>{3, 3, 2, 2, 2, 2});
    CHECK(t.graph.has_edge(0, d));
  }
  CHECK(theta_pattern(6, 3).name() == "theta6-1");
  CHECK(theta_pattern(6, 2).name() == "theta6-2");
  CHECK(theta_pattern(7, 3).name() == "theta:7:3");
  CHECK_THROWS_AS(theta_pattern(6, 1), Error);
  CHECK_THROWS_AS(theta_pattern(6, 4), Error);
  CHECK_THROWS_AS(theta_pattern(3, 2), Error);
  CHECK(theta_family(6).size() == 2);
  CHECK(theta_family(5).size() == 1);
  CHECK(theta_family(8).size() == 3);
}

TEST_CASE("theta members are pairwise non-isomorphic") {
  for (int k = 4; k <= 8; ++k) {
    const auto fam = theta_family(k);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = 0; j < fam.size(); ++j) {
        CHECK(are_isomorphic(fam[i].graph, fam[j].graph) == (i == j));
        CHECK(ref::brute_isomorphic(fam[i].graph, fam[j].graph) == (i == j));
      }
    }
  }
}

TEST_CASE("containment examples") {
  const Graph t61 = theta_pattern(6, 3).graph;
  const Graph t62 = theta_pattern(6, 2).graph;
  const auto self = contains_subgraph(t61, t61);
  REQUIRE(self);
  CHECK(verify_witness(t61, t61, *self));
  const auto in_b6 = contains_subgraph(b6(), t62);
  REQUIRE(in_b6);
  CHECK(verify_witness(b6(), t62, *in_b6));
  CHECK_FALSE(contains_subgraph(b6(), t61));
  CHECK_FALSE(contains_subgraph(cycle_graph(6), t61));
  CHECK(is_free(complete_graph(4), t61));
  CHECK(is_free(catalog_entry(BlockLabel::B5a).graph(), t62));
  CHECK(is_free(extremal_graph(0).graph(), t61));
}

TEST_CASE("containment agrees with brute force on small hosts") {
  std::mt19937 rng(7);
  std::vector<Graph> patterns;
  for (int k = 4; k <= 6; ++k) {
    for (const auto& t : theta_family(k)) patterns.push_back(t.graph);
  }
  patterns.push_back(cycle_graph(4));
  int hits = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 6;
    const Graph host = random_graph(n, 0.25 + 0.5 * (trial % 3) / 2.0, rng);
    for (const Graph& p : patterns) {
      const auto w = contains_subgraph(host, p);
      CHECK(w.has_value() == ref::brute_contains(host, p));
      if (w) {
        ++hits;
        CHECK(verify_witness(host, p, *w));
      }
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("anchored containment uses the anchor") {
  std::mt19937 rng(11);
  const Graph p = theta_pattern(6, 2).graph;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph host = random_graph(7, 0.5, rng);
    for (const Edge& e : host.edges()) {
      const auto w = contains_subgraph_through(host, p, e);
      if (!w) continue;
      CHECK(verify_witness(host, p, *w));
      bool uses = false;
      for (const Edge& pe : p.edges()) {
        uses |= Edge(w->mapping[pe.u], w->mapping[pe.v]) == e;
      }
      CHECK(uses);
    }
    // Some anchored copy exists iff some copy exists.
    bool any = false;
    for (const Edge& e : host.edges()) any |= contains_subgraph_through(host, p, e).has_value();
    CHECK(any == contains_subgraph(host, p).has_value());
  }
}

TEST_CASE("containment is monotone under adding edges") {
  std::mt19937 rng(3);
  const Graph p = theta_pattern(6, 3).graph;
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(8, 0.3, rng);
    bool before = contains_subgraph(g, p).has_value();
    for (int a = 0; a < 8; ++a) {
      for (int b = a + 1; b < 8; ++b) {
        if (g.has_edge(a, b)) continue;
        g = g.with_edge(a, b);
        const bool after = contains_subgraph(g, p).has_value();
        CHECK((!before || after));
        before = after;
      }
    }
  }
}

TEST_CASE("witness verification rejects bad maps") {
  const Graph t = theta_pattern(6, 3).graph;
  CHECK_FALSE(verify_witness(t, t, {{0, 0, 2, 3, 4, 5}}));
  CHECK_FALSE(verify_witness(t, t, {{1, 0, 2, 3, 4, 5}}));
  CHECK_FALSE(verify_witness(t, t, {{0, 1, 2}}));
  CHECK(verify_witness(t, t, {{0, 1, 2, 3, 4, 5}}));
}

TEST_CASE("pattern names") {
  CHECK(parse_pattern("theta6-1").members.size() == 1);
  CHECK(parse_pattern("theta6-2").members.size() == 1);
  CHECK(parse_pattern("theta:5:2").members.size() == 1);
  CHECK(parse_pattern("theta-family:6").members.size() == 2);
  CHECK_THROWS_AS(parse_pattern("theta7"), Error);
  CHECK_THROWS_AS(parse_pattern("theta:6:x"), Error);
  CHECK_THROWS_AS(parse_pattern("theta:6:1"), Error);
  const auto fam = parse_pattern("theta-family:6");
  const auto m = find_pattern(b6(), fam);
  REQUIRE(m);
  CHECK(are_isomorphic(fam.members[m->member], theta_pattern(6, 2).graph));
  CHECK_FALSE(is_free(b6(), fam));
  CHECK(is_free(b6(), parse_pattern("theta6-1")));
}
