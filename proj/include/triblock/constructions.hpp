#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triblock/plane_graph.hpp"

namespace triblock {

/// One of the two building blocks of the extremal family. Pentagons are
/// listed as boundary vertices in cyclic order.
struct Gadget {
  PlaneGraph plane_graph;
  std::optional<std::vector<Vertex>> red_pentagon;
  std::optional<std::vector<Vertex>> blue_pentagon;
};

/// 30 vertices, 60 edges; blue pentagon inside, red pentagon outside.
Gadget gadget_a();
/// 50 vertices, 100 edges; red pentagon inside, blue pentagon outside.
Gadget gadget_b();

/// Empty when the gadget is well formed: C4-free, every face a 3- or 5-face,
/// no edge on two 3-faces, marked pentagons are faces, and any edge with no
/// 3-face lies on a marked pentagon.
std::vector<std::string> check_gadget(const Gadget& gadget);

struct SkeletonGraph {
  PlaneGraph plane_graph;
  int k = 0;
  std::vector<int> triangle_faces;
};

/// Gadget (a), then k rounds of gluing (b) onto the open red pentagon and
/// (a) onto the resulting open blue pentagon. Throws Error(GluingMismatch)
/// if a marked pentagon is not a face.
SkeletonGraph build_skeleton(int k);

/// Empty when the skeleton has 70k+30 vertices, 150k+60 edges, 50k+20
/// triangles and 30k+12 pentagons, is C4-free, and every edge lies on
/// exactly one 3-face and one 5-face.
std::vector<std::string> check_skeleton(const SkeletonGraph& skeleton);

/// Replaces every facial triangle abc by B5a: a new vertex u joined to a, b, c
/// and a new vertex v joined to u, a, b. Adds 2 vertices and 6 edges per triangle.
PlaneGraph substitute_b5a(const SkeletonGraph& skeleton);

PlaneGraph extremal_graph(int k);

struct StageResult {
  std::string stage;
  bool ok = false;
  std::string detail;
};

struct ExtremalReport {
  int k = 0;
  int n = 0;
  int m = 0;
  std::vector<StageResult> stages;

  bool ok() const;
};

/// Builds the k-th extremal graph and checks the skeleton, the vertex and
/// edge counts 170k+70 / 450k+180, Theta6^1-freeness, 17m = 45(n-2), that
/// every block is a B5a surrounded by 5-faces, and that every cluster has g = 0.
ExtremalReport verify_extremal(int k);

}  // namespace triblock
