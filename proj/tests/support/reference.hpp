#pragma once

// Independent reference implementations used only as test oracles. None of
// these call into the library's search, face tracing or block code.

#include <cstdint>
#include <vector>

#include "triblock/contribution.hpp"
#include "triblock/graph.hpp"

namespace ref {

using triblock::Edge;
using triblock::Graph;
using triblock::Rational;
using Rotations = std::vector<std::vector<int>>;

/// Exhaustive search over all injective vertex maps, no pruning.
bool brute_contains(const Graph& host, const Graph& pattern);

/// All permutations; n <= 8.
bool brute_isomorphic(const Graph& a, const Graph& b);

/// Face walks as vertex sequences, traced from a rotation system.
std::vector<std::vector<int>> trace_faces(const Rotations& rot);

/// Tries every rotation system of every component; n <= 7 with modest degrees.
bool rotation_search_planar(const Graph& g);

/// Edge sets of the triangular blocks, via union-find over facial triangles.
/// Each block is a sorted list of edges; the list of blocks is sorted.
std::vector<std::vector<Edge>> union_find_blocks(const Rotations& rot);

/// Sum over faces of (boundary-walk steps on `edges`) / (boundary-walk length).
Rational face_share(const Rotations& rot, const std::vector<Edge>& edges);

/// Bitmask graphs on n <= 6 vertices: bit index of pair (i, j), i < j.
int pair_bit(int n, int i, int j);
/// Masks of every labelled copy of `pattern` inside K_n.
std::vector<std::uint32_t> copies_in_complete(int n, const Graph& pattern);
/// Planarity on n <= 6 by absence of K5, K3,3 and K5 with one subdivided edge.
bool kuratowski_planar_small(int n, std::uint32_t mask);
/// Maximum edges of a planar graph on n <= 6 vertices with no copy of any pattern.
int brute_ex_p(int n, const std::vector<Graph>& patterns);

}  // namespace ref
