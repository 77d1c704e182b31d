#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "triblock/graph.hpp"
#include "triblock/plane_graph.hpp"

namespace triblock {

enum class BlockLabel { B2, B3, B4a, B4b, B5a, B5b, B5c, B5d, B6, Other };

std::string_view to_string(BlockLabel label);
std::optional<BlockLabel> parse_block_label(std::string_view name);

/// A (possibly trivial) triangular block: the closure of facial triangles
/// reachable from a seed triangle through shared edges, or a single edge
/// that lies on no facial triangle.
struct TriangularBlock {
  int id = 0;
  std::vector<int> edges;           // sorted edge ids of the host
  std::vector<Vertex> vertices;     // sorted host vertex ids
  std::vector<int> interior_faces;  // sorted face ids, empty iff trivial
  BlockLabel label = BlockLabel::Other;

  bool is_trivial() const { return interior_faces.empty(); }
};

struct Decomposition {
  std::vector<TriangularBlock> blocks;  // ordered by smallest edge id
  std::vector<int> edge_to_block;
};

/// Partitions E(G) into triangular blocks. The partition property and the
/// "no facial triangle hangs off a block" property are checked on every
/// call; a failure throws Error(IdentityFailure).
Decomposition decompose(const PlaneGraph& pg);

/// Catalogue label of a block subgraph by isomorphism type.
BlockLabel classify(const Graph& block_subgraph, int interior_face_count);

/// Subgraph on the block's edges, vertices compacted in increasing host id.
Graph block_subgraph(const PlaneGraph& pg, const TriangularBlock& block);

/// Role assignment for a B5c block: x1x3 is the diagonal, x5 is the vertex
/// inside the 4-cycle x1x2x3x4 (x2 is its boundary neighbour, x4 is not).
/// x1 < x3 by host id.
struct B5cFrame {
  Vertex x1 = 0, x2 = 0, x3 = 0, x4 = 0, x5 = 0;
  /// Host edge ids of x1x2, x2x3, x3x4, x4x1.
  std::array<int, 4> boundary_edges{};
};

/// Boundary edges are the block edges that lie on exactly one interior
/// face. Throws Error(NotB5c) for any other label.
B5cFrame canonical_b5c_frame(const PlaneGraph& pg, const TriangularBlock& block);

struct CatalogEntry {
  BlockLabel label;
  std::vector<Point2> drawing;
  std::vector<Edge> edges;

  Graph graph() const { return Graph(static_cast<int>(drawing.size()), edges); }
  PlaneGraph embedding() const { return plane_graph_from_drawing(drawing, edges); }
};

/// The nine admissible blocks B2 ... B6 with their standard drawings.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(BlockLabel label);

}  // namespace triblock
