#include "triblock/blocks.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "triblock/error.hpp"
#include "triblock/patterns.hpp"

namespace triblock {

namespace {

constexpr std::array<std::string_view, 10> kLabelNames = {
    "B2", "B3", "B4a", "B4b", "B5a", "B5b", "B5c", "B5d", "B6", "Other"};

}  // namespace

std::string_view to_string(BlockLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)];
}

std::optional<BlockLabel> parse_block_label(std::string_view name) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return static_cast<BlockLabel>(i);
  }
  return std::nullopt;
}

Graph block_subgraph(const PlaneGraph& pg, const TriangularBlock& block) {
  return pg.graph().edge_induced(block.edges);
}

Decomposition decompose(const PlaneGraph& pg) {
  Decomposition d;
  d.edge_to_block.assign(pg.size(), -1);
  std::vector<char> in_block(pg.num_faces(), 0);

  for (int e = 0; e < pg.size(); ++e) {
    if (d.edge_to_block[e] >= 0) continue;
    TriangularBlock block;
    block.id = static_cast<int>(d.blocks.size());

    auto sides = pg.faces_of_edge(e);
    std::sort(sides.begin(), sides.end());
    int seed = -1;
    for (int f : sides) {
      if (pg.face(f).is_triangle()) {
        seed = f;
        break;
      }
    }

    if (seed < 0) {
      block.edges = {e};
    } else {
      std::deque<int> queue{seed};
      in_block[seed] = 1;
      while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        block.interior_faces.push_back(f);
        for (int dart : pg.face(f).walk) {
          const int g = pg.face_of(pg.twin(dart));
          if (!in_block[g] && pg.face(g).is_triangle()) {
            in_block[g] = 1;
            queue.push_back(g);
          }
        }
      }
      std::sort(block.interior_faces.begin(), block.interior_faces.end());
      for (int f : block.interior_faces) {
        const auto& es = pg.face(f).edge_set;
        block.edges.insert(block.edges.end(), es.begin(), es.end());
      }
      std::sort(block.edges.begin(), block.edges.end());
      block.edges.erase(std::unique(block.edges.begin(), block.edges.end()), block.edges.end());
    }

    for (int be : block.edges) {
      if (d.edge_to_block[be] >= 0) {
        throw Error(ErrorKind::IdentityFailure,
                    "edge " + std::to_string(be) + " claimed by two triangular blocks");
      }
      d.edge_to_block[be] = block.id;
      block.vertices.push_back(pg.graph().edge(be).u);
      block.vertices.push_back(pg.graph().edge(be).v);
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                         block.vertices.end());
    block.label = classify(block_subgraph(pg, block),
                           static_cast<int>(block.interior_faces.size()));
    d.blocks.push_back(std::move(block));
  }

  // A facial triangle next to a block must be one of its interior faces.
  for (const auto& block : d.blocks) {
    for (int be : block.edges) {
      for (int f : pg.faces_of_edge(be)) {
        if (pg.face(f).is_triangle() &&
            !std::binary_search(block.interior_faces.begin(), block.interior_faces.end(), f)) {
          throw Error(ErrorKind::IdentityFailure,
                      "facial triangle " + std::to_string(f) + " adjacent to block " +
                          std::to_string(block.id) + " is not interior to it");
        }
      }
    }
  }
  return d;
}

BlockLabel classify(const Graph& block_subgraph, int interior_face_count) {
  if (block_subgraph.size() == 1) {
    return interior_face_count == 0 ? BlockLabel::B2 : BlockLabel::Other;
  }
  for (const auto& entry : catalog()) {
    if (entry.label == BlockLabel::B2) continue;
    if (are_isomorphic(block_subgraph, entry.graph())) return entry.label;
  }
  return BlockLabel::Other;
}

B5cFrame canonical_b5c_frame(const PlaneGraph& pg, const TriangularBlock& block) {
  if (block.label != BlockLabel::B5c) {
    throw Error(ErrorKind::NotB5c, "block " + std::to_string(block.id) + " is " +
                                       std::string(to_string(block.label)) + ", not B5c");
  }
  const Graph& g = pg.graph();
  std::vector<int> hits(block.edges.size(), 0);
  for (int f : block.interior_faces) {
    for (int e : pg.face(f).edge_set) {
      auto it = std::lower_bound(block.edges.begin(), block.edges.end(), e);
      ++hits[it - block.edges.begin()];
    }
  }
  std::vector<int> boundary;
  for (std::size_t i = 0; i < block.edges.size(); ++i) {
    if (hits[i] == 1) boundary.push_back(block.edges[i]);
  }

  auto block_degree = [&](Vertex v) {
    int deg = 0;
    for (int e : block.edges) deg += (g.edge(e).u == v || g.edge(e).v == v);
    return deg;
  };
  auto on_boundary = [&](Vertex v) {
    return std::any_of(boundary.begin(), boundary.end(), [&](int e) {
      return g.edge(e).u == v || g.edge(e).v == v;
    });
  };

  B5cFrame fr;
  std::vector<Vertex> diagonal;
  int inner_count = 0;
  for (Vertex v : block.vertices) {
    if (block_degree(v) == 4) diagonal.push_back(v);
    if (!on_boundary(v)) {
      fr.x5 = v;
      ++inner_count;
    }
  }
  if (boundary.size() != 4 || diagonal.size() != 2 || inner_count != 1) {
    throw Error(ErrorKind::NotB5c, "block " + std::to_string(block.id) +
                                       " has no B5c frame under its interior faces");
  }
  fr.x1 = diagonal[0];
  fr.x3 = diagonal[1];
  for (Vertex v : block.vertices) {
    if (v == fr.x1 || v == fr.x3 || v == fr.x5) continue;
    auto id = g.edge_id(v, fr.x5);
    if (id && std::binary_search(block.edges.begin(), block.edges.end(), *id)) {
      fr.x2 = v;
    } else {
      fr.x4 = v;
    }
  }
  fr.boundary_edges = {*g.edge_id(fr.x1, fr.x2), *g.edge_id(fr.x2, fr.x3),
                       *g.edge_id(fr.x3, fr.x4), *g.edge_id(fr.x4, fr.x1)};
  return fr;
}

namespace {

std::vector<CatalogEntry> make_catalog() {
  auto E = [](std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> out;
    for (auto [a, b] : pairs) out.emplace_back(a, b);
    return out;
  };
  std::vector<CatalogEntry> c;
  c.push_back({BlockLabel::B2, {{-1, 0}, {1, 0}}, E({{0, 1}})});
  c.push_back({BlockLabel::B3, {{-1, 0}, {1, 0}, {0, 1.732}}, E({{0, 1}, {0, 2}, {1, 2}})});
  // x1 top, x2 left, x3 right, x4 centre
  c.push_back({BlockLabel::B4a,
               {{0, 1.732}, {-1, 0}, {1, 0}, {0, 0.577}},
               E({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}})});
  // square x1x2x3x4, diagonal x1x3
  c.push_back({BlockLabel::B4b,
               {{-1, 1}, {1, 1}, {1, -1}, {-1, -1}},
               E({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})});
  // triangle x1x2x3, x4 inside adjacent to all three, x5 inside x2x3x4
  c.push_back({BlockLabel::B5a,
               {{0, 2.6}, {-1.5, 0}, {1.5, 0}, {0, 1.7}, {0, 0.87}},
               E({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}})});
  // square with a centre vertex joined to all corners
  c.push_back({BlockLabel::B5b,
               {{-1, 1}, {1, 1}, {1, -1}, {-1, -1}, {0, 0}},
               E({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}})});
  // x1 top, x2 right, x3 bottom, x4 left, x5 inside x1x2x3
  c.push_back({BlockLabel::B5c,
               {{0, 1}, {1.732, 0}, {0, -1}, {-1.732, 0}, {0.577, 0}},
               E({{0, 2}, {0, 3}, {0, 1}, {2, 3}, {2, 1}, {0, 4}, {2, 4}, {1, 4}})});
  // pentagon with both chords from x1
  c.push_back({BlockLabel::B5d,
               {{0, 1.5}, {1.4265, 0.4635}, {0.882, -1.2135}, {-0.882, -1.2135},
                {-1.4265, 0.4635}},
               E({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}})});
  // hexagon with the triangle on alternate vertices x1x3x5
  c.push_back({BlockLabel::B6,
               {{0, 1.5}, {1.3, 0.75}, {1.3, -0.75}, {0, -1.5}, {-1.3, -0.75}, {-1.3, 0.75}},
               E({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {2, 4}, {4, 0}})});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(BlockLabel label) {
  for (const auto& entry : catalog()) {
    if (entry.label == label) return entry;
  }
  throw Error(ErrorKind::InvalidName, "no catalogue entry for " + std::string(to_string(label)));
}

}  // namespace triblock
