#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "triblock/graph.hpp"
#include "triblock/patterns.hpp"
#include "triblock/plane_graph.hpp"

namespace triblock {

/// Euler quick reject, then Boyer-Myrvold.
bool is_planar(const Graph& g);

/// Some planar embedding of a connected planar graph. Throws
/// Error(NonPlanarEmbedding) or Error(Disconnected).
PlaneGraph planar_embedding(const Graph& g);

/// Upper-triangle adjacency bits, row-major, packed into 64-bit words.
using CanonicalKey = std::vector<std::uint64_t>;

struct CanonicalForm {
  CanonicalKey key;
  /// perm[v] is the canonical label of v.
  std::vector<Vertex> perm;
};

/// Canonical labelling: the relabelling with the lexicographically largest
/// key among the leaves of an individualization-refinement search. Two
/// graphs are isomorphic iff their keys agree.
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

struct OracleOptions {
  int jobs = 1;
  int cap = 8;
  bool force = false;
  int witness_cap = 100;
};

struct OracleResult {
  int n = 0;
  std::string pattern;
  int max_edges = 0;
  /// Pairwise non-isomorphic, canonically labelled, sorted by key.
  std::vector<Graph> witnesses;
  /// Number of maximum graphs up to isomorphism, before the witness cap.
  long witness_classes = 0;
  /// Candidate graphs examined.
  long explored = 0;
  std::chrono::duration<double> elapsed{};
};

/// Exact maximum edge count of a planar graph on n vertices containing no
/// member of `patterns`. Throws Error(CapExceeded) when n > cap without
/// force, Error(ParameterOutOfRange) when n < 1.
OracleResult max_edges(int n, const PatternSet& patterns, const OracleOptions& options = {});
OracleResult max_edges(int n, const Graph& pattern, const OracleOptions& options = {});

}  // namespace triblock
