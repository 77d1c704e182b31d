#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triblock/graph.hpp"

namespace triblock {

struct Dart {
  Vertex tail = 0;
  Vertex head = 0;
};

/// A face of a plane graph. `walk` lists dart ids in tracing order. length()
/// counts distinct edges, so a bridge walked twice counts once; walk_length()
/// counts it twice.
struct Face {
  std::vector<int> walk;
  std::vector<Vertex> vertices;  // tail of each dart in `walk`
  std::vector<int> edge_set;     // sorted distinct edge ids

  int length() const { return static_cast<int>(edge_set.size()); }
  int walk_length() const { return static_cast<int>(walk.size()); }
  bool is_triangle() const { return walk.size() == 3; }
};

/// Connected simple graph with a rotation system (counterclockwise neighbour
/// order at each vertex). Immutable; faces are traced once at construction.
///
/// Dart ids are grouped by tail vertex in rotation order. The successor of
/// dart (u,v) is (v,w) where w immediately follows u in the rotation at v.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Validates the rotation system and traces faces. Throws Error with kind
  /// InvalidGraph, InconsistentRotation, Disconnected or NonPlanarEmbedding.
  static PlaneGraph build(int n, std::vector<std::vector<Vertex>> rotations);

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  int size() const { return graph_.size(); }

  std::span<const Vertex> rotation(Vertex v) const { return rotations_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotations_; }

  int num_darts() const { return static_cast<int>(darts_.size()); }
  const Dart& dart(int d) const { return darts_[d]; }
  int twin(int d) const { return twin_[d]; }
  int successor(int d) const { return next_[d]; }
  int face_of(int d) const { return face_of_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }
  /// Dart u->v; the pair must be an edge.
  int dart_id(Vertex u, Vertex v) const;

  std::span<const Face> faces() const { return faces_; }
  const Face& face(int id) const { return faces_[id]; }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  /// Faces on the two sides of an edge: {face of dart u->v, face of dart v->u}
  /// with u < v. Both entries coincide for a bridge.
  std::array<int, 2> faces_of_edge(int edge_id) const;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotations_;
  std::vector<int> offset_;
  std::vector<Dart> darts_;
  std::vector<int> twin_;
  std::vector<int> next_;
  std::vector<int> edge_of_;
  std::vector<int> face_of_;
  std::vector<Face> faces_;
};

PlaneGraph build_plane_graph(int n, std::vector<std::vector<Vertex>> rotations);

std::span<const Face> faces(const PlaneGraph& pg);

/// Native text format:
///   planegraph 1
///   <n> <m>
///   <v>: <w1> ... <wd>      (one line per vertex, counterclockwise)
/// `#` comments and blank lines are ignored.
PlaneGraph parse_native(std::string_view text);
/// Several documents concatenated, each starting with its own header line.
std::vector<PlaneGraph> parse_native_all(std::string_view text);
std::string to_native(const PlaneGraph& pg, std::string_view comment = {});

PlaneGraph read_native_file(const std::string& path);
void write_native_file(const std::string& path, const PlaneGraph& pg);

/// DOT export: one node statement per vertex carrying its rotation as the
/// `rotation` attribute, one `u -- v;` statement per edge.
std::string export_dot(const PlaneGraph& pg);
/// Reads back the output of export_dot.
PlaneGraph parse_dot(std::string_view text);

struct Point2 {
  double x = 0;
  double y = 0;
};

/// Counterclockwise rotation system of a straight-line drawing. Used to
/// transcribe drawn graphs; the result still has to pass PlaneGraph::build.
std::vector<std::vector<Vertex>> rotation_from_drawing(std::span<const Point2> points,
                                                       std::span<const Edge> edges);

PlaneGraph plane_graph_from_drawing(std::span<const Point2> points,
                                    std::span<const Edge> edges);

}  // namespace triblock
