#include "triblock/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "triblock/blocks.hpp"
#include "triblock/contribution.hpp"
#include "triblock/error.hpp"
#include "triblock/patterns.hpp"

namespace triblock {

namespace {

/// Collects a drawing given as coordinate segments, the way the figure is
/// written: every segment endpoint must coincide with a listed vertex.
class Sketch {
 public:
  Vertex add(Point2 p) {
    points_.push_back(p);
    return static_cast<Vertex>(points_.size() - 1);
  }

  void segment(Point2 a, Point2 b) { edges_.emplace_back(locate(a), locate(b)); }

  PlaneGraph build() const {
    auto es = edges_;
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return plane_graph_from_drawing(points_, es);
  }

 private:
  Vertex locate(Point2 p) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (std::hypot(points_[i].x - p.x, points_[i].y - p.y) < 1e-6) return static_cast<Vertex>(i);
    }
    throw std::logic_error("gadget transcription: segment endpoint is not a vertex");
  }

  std::vector<Point2> points_;
  std::vector<Edge> edges_;
};

double rad(double deg) { return deg * std::numbers::pi / 180.0; }
/// (R sin t, R cos t), the figure's polar convention.
Point2 polar(double r, double deg) { return {r * std::sin(rad(deg)), r * std::cos(rad(deg))}; }
/// (-R sin t, -R cos t)
Point2 opposite(double r, double deg) { return polar(-r, deg); }

std::vector<Vertex> range(Vertex first, int count) {
  std::vector<Vertex> out(count);
  for (int i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

}  // namespace

Gadget gadget_a() {
  Sketch s;
  for (int a = 0; a < 5; ++a) s.add(polar(0.5, 72 * a));        // 0..4 blue
  for (int a = 0; a < 5; ++a) s.add(opposite(1, 72 * a));       // 5..9
  for (int a = 0; a < 10; ++a) s.add(polar(1.5, 36 * a + 90));  // 10..19
  for (int a = 0; a < 5; ++a) s.add(polar(2, 72 * a));          // 20..24
  for (int a = 0; a < 5; ++a) s.add(opposite(3, 72 * a));       // 25..29 red

  for (int a = 0; a < 5; ++a) {
    s.segment(polar(0.5, 72 * a), polar(0.5, 72 * a + 72));
    s.segment(polar(0.5, 72 * a), opposite(1, 72 * a + 144));
    s.segment(polar(0.5, 72 * a), opposite(1, 72 * a - 144));
    s.segment(polar(1.5, 72 * a + 90), opposite(1, 72 * a - 72));
    s.segment(polar(1.5, 72 * a + 126), opposite(1, 72 * a - 72));
    s.segment(polar(1.5, 72 * a + 90), polar(2, 72 * a + 72));
    s.segment(polar(1.5, 72 * a + 54), polar(2, 72 * a + 72));
    s.segment(opposite(3, 72 * a), opposite(3, 72 * a + 72));
    s.segment(opposite(3, 72 * a), polar(2, 72 * a + 144));
    s.segment(opposite(3, 72 * a), polar(2, 72 * a - 144));
  }
  for (int a = 0; a < 10; ++a) s.segment(polar(1.5, 36 * a + 90), polar(1.5, 36 * a + 126));

  Gadget g{s.build(), range(25, 5), range(0, 5)};
  if (auto problems = check_gadget(g); !problems.empty()) {
    throw std::logic_error("gadget (a) transcription defect: " + problems.front());
  }
  return g;
}

Gadget gadget_b() {
  Sketch s;
  for (int a = 0; a < 5; ++a) s.add(opposite(0.5, 72 * a));     // 0..4 red
  for (int a = 0; a < 10; ++a) s.add(polar(0.8, 36 * a + 90));  // 5..14
  for (int a = 0; a < 5; ++a) s.add(polar(1.2, 72 * a));        // 15..19
  for (int a = 0; a < 10; ++a) s.add(polar(1.6, 36 * a + 90));  // 20..29
  for (int a = 0; a < 15; ++a) s.add(opposite(2.2, 24 * a));    // 30..44
  for (int a = 0; a < 5; ++a) s.add(polar(3, 72 * a));          // 45..49 blue

  for (int a = 0; a < 5; ++a) {
    s.segment(opposite(0.5, 72 * a), opposite(0.5, 72 * a + 72));
    s.segment(polar(0.8, 72 * a + 90), polar(0.8, 72 * a + 126));
    s.segment(polar(0.8, 72 * a + 90), opposite(0.5, 72 * a - 72));
    s.segment(polar(0.8, 72 * a + 126), opposite(0.5, 72 * a - 72));
    s.segment(polar(1.2, 72 * a + 72), polar(0.8, 72 * a + 90));
    s.segment(polar(1.2, 72 * a + 72), polar(0.8, 72 * a + 54));
    s.segment(polar(1.2, 72 * a + 72), polar(1.6, 72 * a + 90));
    s.segment(polar(1.2, 72 * a + 72), polar(1.6, 72 * a + 54));
    s.segment(opposite(2.2, 72 * a - 120), polar(1.6, 72 * a + 54));
    s.segment(opposite(2.2, 72 * a - 96), polar(1.6, 72 * a + 90));
    s.segment(opposite(2.2, 72 * a - 72), polar(1.6, 72 * a + 90));
    s.segment(opposite(2.2, 72 * a - 72), polar(1.6, 72 * a + 126));
    s.segment(opposite(2.2, 72 * a + 168), polar(3, 72 * a));
    s.segment(opposite(2.2, 72 * a - 168), polar(3, 72 * a));
    s.segment(polar(3, 72 * a), polar(3, 72 * a + 72));
  }
  for (int a = 0; a < 10; ++a) s.segment(polar(0.8, 36 * a + 90), polar(1.6, 36 * a + 90));
  for (int a = 0; a < 15; ++a) s.segment(opposite(2.2, 24 * a), opposite(2.2, 24 * a + 24));

  Gadget g{s.build(), range(0, 5), range(45, 5)};
  if (auto problems = check_gadget(g); !problems.empty()) {
    throw std::logic_error("gadget (b) transcription defect: " + problems.front());
  }
  return g;
}

namespace {

std::optional<int> find_pentagon_face(const PlaneGraph& pg, const std::vector<Vertex>& pentagon) {
  auto want = pentagon;
  std::sort(want.begin(), want.end());
  for (int f = 0; f < pg.num_faces(); ++f) {
    const Face& face = pg.face(f);
    if (face.walk.size() != 5) continue;
    auto have = face.vertices;
    std::sort(have.begin(), have.end());
    if (have == want) return f;
  }
  return std::nullopt;
}

bool c4_free(const PlaneGraph& pg) { return is_free(pg.graph(), cycle_graph(4)); }

int triangles_on_edge(const PlaneGraph& pg, int e) {
  auto [f1, f2] = pg.faces_of_edge(e);
  return pg.face(f1).is_triangle() + pg.face(f2).is_triangle();
}

struct Glued {
  PlaneGraph plane_graph;
  std::vector<Vertex> guest_to_host;
};

/// Identifies the pentagon face of `guest` with the pentagon face of `host`
/// so that the two walks run in opposite directions; both faces disappear.
Glued glue(const PlaneGraph& host, const std::vector<Vertex>& host_pentagon,
           const PlaneGraph& guest, const std::vector<Vertex>& guest_pentagon) {
  auto fx = find_pentagon_face(host, host_pentagon);
  auto fy = find_pentagon_face(guest, guest_pentagon);
  if (!fx || !fy) throw Error(ErrorKind::GluingMismatch, "marked pentagon is not a face");
  const auto& p = host.face(*fx).vertices;
  const auto& q = guest.face(*fy).vertices;

  std::vector<Vertex> map(guest.order(), -1);
  for (int i = 0; i < 5; ++i) map[q[i]] = p[(5 - i) % 5];
  Vertex next = host.order();
  for (Vertex v = 0; v < guest.order(); ++v) {
    if (map[v] < 0) map[v] = next++;
  }

  std::vector<std::vector<Vertex>> rot(next);
  for (Vertex v = 0; v < host.order(); ++v) {
    rot[v].assign(host.rotation(v).begin(), host.rotation(v).end());
  }
  for (Vertex v = 0; v < guest.order(); ++v) {
    if (map[v] < host.order()) continue;
    for (Vertex w : guest.rotation(v)) rot[map[v]].push_back(map[w]);
  }
  for (int i = 0; i < 5; ++i) {
    const Vertex qi = q[i];
    const Vertex q_next = q[(i + 1) % 5];
    const Vertex q_prev = q[(i + 4) % 5];
    const auto grot = guest.rotation(qi);
    const auto deg = static_cast<long>(grot.size());
    const long start = std::find(grot.begin(), grot.end(), q_next) - grot.begin();
    std::vector<Vertex> inner;
    for (long s = 1; s < deg; ++s) {
      const Vertex w = grot[(start + s) % deg];
      if (w == q_prev) break;
      inner.push_back(map[w]);
    }
    auto& hrot = rot[map[qi]];
    const Vertex after = map[q_next];  // predecessor of map[qi] on the host walk
    auto at = std::find(hrot.begin(), hrot.end(), after);
    if (at == hrot.end()) throw Error(ErrorKind::GluingMismatch, "pentagon orientation mismatch");
    hrot.insert(at + 1, inner.begin(), inner.end());
  }
  return {PlaneGraph::build(next, std::move(rot)), std::move(map)};
}

std::vector<Vertex> mapped(const std::vector<Vertex>& vs, const std::vector<Vertex>& map) {
  std::vector<Vertex> out;
  for (Vertex v : vs) out.push_back(map[v]);
  return out;
}

}  // namespace

std::vector<std::string> check_gadget(const Gadget& gadget) {
  std::vector<std::string> problems;
  const PlaneGraph& pg = gadget.plane_graph;
  std::vector<int> marked_edges;
  for (const auto& pentagon : {gadget.red_pentagon, gadget.blue_pentagon}) {
    if (!pentagon) continue;
    auto f = find_pentagon_face(pg, *pentagon);
    if (!f) {
      problems.push_back("marked pentagon is not a face");
      continue;
    }
    const auto& es = pg.face(*f).edge_set;
    marked_edges.insert(marked_edges.end(), es.begin(), es.end());
  }
  std::sort(marked_edges.begin(), marked_edges.end());
  for (const Face& face : pg.faces()) {
    if (!face.is_triangle() && !(face.walk.size() == 5 && face.length() == 5)) {
      problems.push_back("face of length " + std::to_string(face.length()));
    }
  }
  for (int e = 0; e < pg.size(); ++e) {
    const int t = triangles_on_edge(pg, e);
    if (t > 1) problems.push_back("edge " + std::to_string(e) + " lies on two triangles");
    if (t == 0 && !std::binary_search(marked_edges.begin(), marked_edges.end(), e)) {
      problems.push_back("edge " + std::to_string(e) + " lies on no triangle");
    }
  }
  if (!c4_free(pg)) problems.push_back("contains C4");
  return problems;
}

SkeletonGraph build_skeleton(int k) {
  if (k < 0) throw Error(ErrorKind::ParameterOutOfRange, "k must be >= 0");
  const Gadget a = gadget_a();
  const Gadget b = gadget_b();

  PlaneGraph current = a.plane_graph;
  std::vector<Vertex> open = *a.red_pentagon;
  for (int step = 0; step < k; ++step) {
    Glued with_b = glue(current, open, b.plane_graph, *b.red_pentagon);
    open = mapped(*b.blue_pentagon, with_b.guest_to_host);
    Glued with_a = glue(with_b.plane_graph, open, a.plane_graph, *a.blue_pentagon);
    open = mapped(*a.red_pentagon, with_a.guest_to_host);
    current = std::move(with_a.plane_graph);
  }

  SkeletonGraph s{std::move(current), k, {}};
  for (int f = 0; f < s.plane_graph.num_faces(); ++f) {
    if (s.plane_graph.face(f).is_triangle()) s.triangle_faces.push_back(f);
  }
  return s;
}

std::vector<std::string> check_skeleton(const SkeletonGraph& s) {
  std::vector<std::string> problems;
  const PlaneGraph& pg = s.plane_graph;
  auto expect = [&](const char* what, long have, long want) {
    if (have != want) {
      problems.push_back(std::string(what) + " = " + std::to_string(have) + ", expected " +
                         std::to_string(want));
    }
  };
  long pentagons = 0;
  for (const Face& face : pg.faces()) pentagons += (face.walk.size() == 5 && face.length() == 5);
  expect("vertices", pg.order(), 70L * s.k + 30);
  expect("edges", pg.size(), 150L * s.k + 60);
  expect("triangles", static_cast<long>(s.triangle_faces.size()), 50L * s.k + 20);
  expect("pentagons", pentagons, 30L * s.k + 12);
  for (int e = 0; e < pg.size(); ++e) {
    auto [f1, f2] = pg.faces_of_edge(e);
    const int l1 = pg.face(f1).length();
    const int l2 = pg.face(f2).length();
    if (std::min(l1, l2) != 3 || std::max(l1, l2) != 5) {
      problems.push_back("edge " + std::to_string(e) + " is not between a 3-face and a 5-face");
      break;
    }
  }
  if (!c4_free(pg)) problems.push_back("contains C4");
  return problems;
}

PlaneGraph substitute_b5a(const SkeletonGraph& skeleton) {
  const PlaneGraph& pg = skeleton.plane_graph;
  std::vector<std::vector<Vertex>> rot = pg.rotations();
  auto insert_after = [&](Vertex at, Vertex anchor, std::initializer_list<Vertex> items) {
    auto& r = rot[at];
    auto it = std::find(r.begin(), r.end(), anchor);
    r.insert(it + 1, items);
  };
  for (int f : skeleton.triangle_faces) {
    const auto& vs = pg.face(f).vertices;  // walk a -> b -> c -> a
    const Vertex a = vs[0], b = vs[1], c = vs[2];
    const Vertex u = static_cast<Vertex>(rot.size());
    const Vertex v = u + 1;
    insert_after(a, c, {u, v});
    insert_after(b, a, {v, u});
    insert_after(c, b, {u});
    rot.push_back({a, c, b, v});
    rot.push_back({b, a, u});
  }
  const int n = static_cast<int>(rot.size());
  return PlaneGraph::build(n, std::move(rot));
}

PlaneGraph extremal_graph(int k) { return substitute_b5a(build_skeleton(k)); }

bool ExtremalReport::ok() const {
  return !stages.empty() &&
         std::all_of(stages.begin(), stages.end(), [](const auto& s) { return s.ok; });
}

ExtremalReport verify_extremal(int k) {
  ExtremalReport report;
  report.k = k;
  auto stage = [&](std::string name, bool ok, std::string detail = {}) {
    report.stages.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };

  SkeletonGraph skeleton;
  PlaneGraph pg;
  try {
    skeleton = build_skeleton(k);
    auto problems = check_skeleton(skeleton);
    stage("skeleton", problems.empty(), problems.empty() ? "" : problems.front());
    pg = substitute_b5a(skeleton);
  } catch (const std::exception& e) {
    stage("construction", false, e.what());
    return report;
  }
  report.n = pg.order();
  report.m = pg.size();

  const long want_n = 170L * k + 70;
  const long want_m = 450L * k + 180;
  stage("counts", report.n == want_n && report.m == want_m,
        "n = " + std::to_string(report.n) + " (want " + std::to_string(want_n) + "), m = " +
            std::to_string(report.m) + " (want " + std::to_string(want_m) + ")");

  auto hit = contains_subgraph(pg.graph(), theta_pattern(6, 3).graph);
  stage("theta6-1-free", !hit.has_value(), hit ? "found a copy of theta6-1" : "");

  stage("tight", 17L * report.m == 45L * (report.n - 2),
        "17m = " + std::to_string(17L * report.m) + ", 45(n-2) = " +
            std::to_string(45L * (report.n - 2)));

  const Decomposition d = decompose(pg);
  bool blocks_ok = static_cast<int>(d.blocks.size()) ==
                   static_cast<int>(skeleton.triangle_faces.size());
  for (const auto& block : d.blocks) {
    if (block.label != BlockLabel::B5a || block.interior_faces.size() != 5) blocks_ok = false;
    for (int e : block.edges) {
      for (int f : pg.faces_of_edge(e)) {
        const bool interior = std::binary_search(block.interior_faces.begin(),
                                                 block.interior_faces.end(), f);
        if (!interior && pg.face(f).length() != 5) blocks_ok = false;
      }
    }
  }
  stage("blocks", blocks_ok, std::to_string(d.blocks.size()) + " blocks");

  try {
    const Certificate cert = certify(pg, bound_spec("theta6-1"));
    const bool zero = std::all_of(cert.clustering.clusters.begin(), cert.clustering.clusters.end(),
                                  [](const Cluster& c) { return c.g == 0; });
    stage("certificate", cert.identities_ok && zero && cert.bound_holds,
          std::to_string(cert.clustering.clusters.size()) + " clusters");
  } catch (const std::exception& e) {
    stage("certificate", false, e.what());
  }
  return report;
}

}  // namespace triblock
