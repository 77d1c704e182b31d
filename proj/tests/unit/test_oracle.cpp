#include <doctest.h>

#include <random>

#include "../support/reference.hpp"
#include "triblock/error.hpp"
#include "triblock/oracle.hpp"

using namespace triblock;

namespace {

Graph from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (mask >> ref::pair_bit(n, i, j) & 1) es.emplace_back(i, j);
    }
  }
  return Graph(n, es);
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

}  // namespace

TEST_CASE("planarity of the standard examples") {
  CHECK(is_planar(complete_graph(4)));
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(complete_bipartite_graph(3, 3)));
  Graph c6 = cycle_graph(6);
  c6 = c6.with_edge(0, 3).with_edge(1, 4).with_edge(2, 5);
  CHECK_FALSE(is_planar(c6));
  CHECK(is_planar(Graph(0, {})));
  CHECK(is_planar(Graph(3, {})));
}

TEST_CASE("planarity agrees with Kuratowski on every labelled graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      const Graph g = from_mask(n, mask);
      const bool p = is_planar(g);
      if (n >= 5) CHECK(p == ref::kuratowski_planar_small(n, mask));
      if (n >= 3 && g.size() > 3 * n - 6) CHECK_FALSE(p);
    }
  }
}

TEST_CASE("planarity agrees with rotation-system search up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    std::set<CanonicalKey> seen;
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      const Graph g = from_mask(n, mask);
      if (n >= 3 && g.size() > 3 * n - 6) continue;
      if (!seen.insert(canonical_form(g).key).second) continue;
      CAPTURE(mask);
      CHECK(is_planar(g) == ref::rotation_search_planar(g));
    }
    if (n == 6) CHECK(seen.size() > 100);
  }
}

TEST_CASE("planar embeddings are valid") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(4 + trial % 8, 0.4, rng);
    if (!g.is_connected()) {
      CHECK_THROWS_AS(planar_embedding(g), Error);
      continue;
    }
    if (!is_planar(g)) {
      CHECK_THROWS_AS(planar_embedding(g), Error);
      continue;
    }
    const PlaneGraph pg = planar_embedding(g);
    CHECK(pg.graph() == g);
    CHECK(pg.order() - pg.size() + pg.num_faces() == 2);
  }
}

TEST_CASE("canonical form decides isomorphism") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 5;
    const Graph a = random_graph(n, 0.5, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph b = a.relabeled(perm);
    CHECK(canonical_form(a).key == canonical_form(b).key);
    CHECK(canonical_graph(a) == canonical_graph(b));
    CHECK(ref::brute_isomorphic(canonical_graph(a), a));
    const Graph c = random_graph(n, 0.5, rng);
    if (c.size() == a.size()) {
      CHECK((canonical_form(a).key == canonical_form(c).key) == ref::brute_isomorphic(a, c));
    }
  }
}

TEST_CASE("canonical labelling is a relabelling") {
  const Graph g = complete_bipartite_graph(2, 3);
  const CanonicalForm cf = canonical_form(g);
  CHECK(g.relabeled(cf.perm) == canonical_graph(g));
}

TEST_CASE("small exact values") {
  CHECK(max_edges(5, parse_pattern("theta6-1")).max_edges == 9);
  CHECK(max_edges(1, parse_pattern("theta6-1")).max_edges == 0);
  CHECK(max_edges(2, parse_pattern("theta6-1")).max_edges == 1);
  const auto a = max_edges(6, parse_pattern("theta6-1"));
  CHECK(a.max_edges >= 9);
  CHECK(a.max_edges <= 10);
  const auto b = max_edges(6, parse_pattern("theta6-2"));
  CHECK(b.max_edges <= 10);
}

TEST_CASE("oracle agrees with Kuratowski brute force up to 6 vertices") {
  for (const char* name : {"theta6-1", "theta6-2", "theta:4:2", "theta:5:2", "theta-family:6"}) {
    const auto patterns = parse_pattern(name);
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK(max_edges(n, patterns).max_edges == ref::brute_ex_p(n, patterns.members));
    }
  }
}

TEST_CASE("witnesses are planar, free, extremal and pairwise distinct") {
  for (const char* name : {"theta6-1", "theta6-2"}) {
    const auto patterns = parse_pattern(name);
    for (int n = 6; n <= 7; ++n) {
      const auto r = max_edges(n, patterns);
      CHECK(r.witness_classes == static_cast<long>(r.witnesses.size()));
      for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
        const Graph& w = r.witnesses[i];
        CHECK(w.order() == n);
        CHECK(w.size() == r.max_edges);
        CHECK(ref::rotation_search_planar(w));
        for (const Graph& p : patterns.members) CHECK_FALSE(ref::brute_contains(w, p));
        for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(ref::brute_isomorphic(w, r.witnesses[j]));
      }
    }
  }
}

TEST_CASE("oracle values are monotone and respect the bounds") {
  for (const char* name : {"theta6-1", "theta6-2"}) {
    const auto patterns = parse_pattern(name);
    int prev = 0;
    for (int n = 1; n <= 8; ++n) {
      const int v = max_edges(n, patterns).max_edges;
      CHECK(v >= prev);
      prev = v;
      if (n >= 6) {
        if (std::string(name) == "theta6-1") {
          CHECK(17 * v <= 45 * (n - 2));
        } else {
          CHECK(7 * v <= 18 * (n - 2));
        }
      }
    }
  }
}

TEST_CASE("parallel search gives the same result") {
  const auto patterns = parse_pattern("theta6-2");
  const auto one = max_edges(7, patterns, {.jobs = 1});
  const auto three = max_edges(7, patterns, {.jobs = 3});
  CHECK(one.max_edges == three.max_edges);
  CHECK(one.witnesses == three.witnesses);
  CHECK(one.explored == three.explored);
}

TEST_CASE("witness cap and range checks") {
  const auto patterns = parse_pattern("theta6-1");
  const auto r = max_edges(6, patterns, {.witness_cap = 1});
  CHECK(r.witnesses.size() == 1);
  CHECK(r.witness_classes >= 1);
  auto kind_of = [&](int n, OracleOptions o) {
    try {
      max_edges(n, patterns, o);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  CHECK(kind_of(9, {}) == ErrorKind::CapExceeded);
  CHECK(kind_of(0, {}) == ErrorKind::ParameterOutOfRange);
  CHECK(max_edges(4, patterns, {.cap = 3, .force = true}).max_edges == 6);
}
