#include "corpus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "triblock/constructions.hpp"
#include "triblock/oracle.hpp"

namespace corpus {

using triblock::Edge;
using triblock::Point2;

PlaneGraph bbar_gadget() {
  const std::vector<Point2> pts = {{0, 1}, {1.732, 0}, {0, -1}, {-1.732, 0}, {0.577, 0},
                                   {-3, 0}, {3, 0}};
  std::vector<Edge> es = {{0, 2}, {0, 3}, {0, 1}, {2, 3}, {2, 1}, {0, 4},
                          {2, 4}, {1, 4}, {0, 5}, {2, 5}, {0, 6}, {2, 6}};
  return triblock::plane_graph_from_drawing(pts, es);
}

PlaneGraph ladder() {
  const std::vector<Point2> pts = {{0, 1}, {1, 1}, {2, 1}, {0, 0}, {1, 0}, {2, 0}};
  std::vector<Edge> es = {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  return triblock::plane_graph_from_drawing(pts, es);
}

PlaneGraph ring_surround(BlockLabel label, int ring_face_length) {
  const auto& entry = triblock::catalog_entry(label);
  const PlaneGraph block = entry.embedding();
  // The outer face of a straight-line drawing has the largest absolute area.
  auto area = [&](int f) {
    const auto& vs = block.face(f).vertices;
    double a = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const Point2 p = entry.drawing[vs[i]], q = entry.drawing[vs[(i + 1) % vs.size()]];
      a += p.x * q.y - q.x * p.y;
    }
    return std::abs(a);
  };
  int outer = 0;
  for (int f = 1; f < block.num_faces(); ++f) {
    if (area(f) > area(outer)) outer = f;
  }
  const auto cycle = block.face(outer).vertices;
  std::vector<Point2> pts = entry.drawing;
  std::vector<Edge> es = entry.edges;
  Point2 c{0, 0};
  for (const auto& p : pts) {
    c.x += p.x / pts.size();
    c.y += p.y / pts.size();
  }
  auto scaled = [&](Point2 p, double s) { return Point2{c.x + s * (p.x - c.x), c.y + s * (p.y - c.y)}; };
  const int L = static_cast<int>(cycle.size());
  std::vector<int> ring(L);
  for (int i = 0; i < L; ++i) {
    ring[i] = static_cast<int>(pts.size());
    pts.push_back(scaled(entry.drawing[cycle[i]], 3));
    es.emplace_back(cycle[i], ring[i]);
  }
  for (int i = 0; i < L; ++i) {
    const int j = (i + 1) % L;
    if (ring_face_length == 4) {
      es.emplace_back(ring[i], ring[j]);
    } else {
      const Point2 a = pts[ring[i]], b = pts[ring[j]];
      const int mid = static_cast<int>(pts.size());
      pts.push_back(scaled({(a.x + b.x) / 2, (a.y + b.y) / 2}, 1.5));
      es.emplace_back(ring[i], mid);
      es.emplace_back(mid, ring[j]);
    }
  }
  return triblock::plane_graph_from_drawing(pts, es);
}

PlaneGraph cycle_plane(int n) {
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
  return PlaneGraph::build(n, rot);
}

PlaneGraph k4_plane() { return PlaneGraph::build(4, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}); }

Graph random_planar(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  Graph g(n, es);
  const int max_m = n >= 3 ? 3 * n - 6 : n - 1;
  const int target = std::uniform_int_distribution<int>(n - 1, std::max(n - 1, max_m))(rng);
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) pairs.emplace_back(a, b);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const Edge& e : pairs) {
    if (g.size() >= target) break;
    Graph h = g.with_edge(e.u, e.v);
    if (triblock::is_planar(h)) g = std::move(h);
  }
  return g;
}

Graph greedy_free_planar(int n, const PatternSet& patterns, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  Graph g(n, {});
  for (const Edge& e : pairs) {
    Graph h = g.with_edge(e.u, e.v);
    if (!triblock::is_planar(h)) continue;
    bool hit = false;
    for (const Graph& p : patterns.members) {
      if (triblock::contains_subgraph_through(h, p, e)) {
        hit = true;
        break;
      }
    }
    if (!hit) g = std::move(h);
  }
  return g;
}

std::vector<Named> plane_corpus() {
  std::vector<Named> out;
  for (const auto& entry : triblock::catalog()) {
    out.push_back({"catalog " + std::string(triblock::to_string(entry.label)), entry.embedding()});
  }
  out.push_back({"gadget a", triblock::gadget_a().plane_graph});
  out.push_back({"gadget b", triblock::gadget_b().plane_graph});
  for (int k = 0; k <= 2; ++k) {
    out.push_back({"skeleton " + std::to_string(k), triblock::build_skeleton(k).plane_graph});
    out.push_back({"extremal " + std::to_string(k), triblock::extremal_graph(k)});
  }
  out.push_back({"bbar gadget", bbar_gadget()});
  out.push_back({"ladder", ladder()});
  for (auto label : {BlockLabel::B3, BlockLabel::B4b, BlockLabel::B5b, BlockLabel::B5d,
                     BlockLabel::B6, BlockLabel::B5a, BlockLabel::B5c}) {
    for (int len : {4, 5}) {
      out.push_back({"ring " + std::string(triblock::to_string(label)) + "/" + std::to_string(len),
                     ring_surround(label, len)});
    }
  }
  for (int n = 3; n <= 8; ++n) out.push_back({"cycle " + std::to_string(n), cycle_plane(n)});
  out.push_back({"k4", k4_plane()});
  for (std::uint32_t seed = 1; seed <= 120; ++seed) {
    const int n = 2 + static_cast<int>(seed % 23);
    out.push_back({"random " + std::to_string(seed),
                   triblock::planar_embedding(random_planar(n, seed))});
  }
  for (const char* name : {"theta6-1", "theta6-2"}) {
    const auto patterns = triblock::parse_pattern(name);
    for (std::uint32_t seed = 1; seed <= 20; ++seed) {
      const int n = 6 + static_cast<int>(seed % 15);
      out.push_back({std::string("free ") + name + " " + std::to_string(seed),
                     triblock::planar_embedding(greedy_free_planar(n, patterns, seed))});
    }
  }
  return out;
}

}  // namespace corpus
