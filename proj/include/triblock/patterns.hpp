#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triblock/graph.hpp"

namespace triblock {

/// A k-cycle 0-1-...-(k-1)-0 plus the chord {0, chord_distance}.
struct ThetaPattern {
  int k = 0;
  int chord_distance = 0;
  Graph graph;

  std::string name() const;
};

/// Throws Error(ParameterOutOfRange) unless k >= 4 and 2 <= d <= k/2.
ThetaPattern theta_pattern(int k, int d);
/// All members of the Theta_k family, one per chord distance.
std::vector<ThetaPattern> theta_family(int k);

/// mapping[p] is the host vertex that pattern vertex p is sent to.
struct EmbeddingWitness {
  std::vector<Vertex> mapping;
};

/// Finds a (not necessarily induced) subgraph of `host` isomorphic to
/// `pattern`. Deterministic for a fixed host labelling.
std::optional<EmbeddingWitness> contains_subgraph(const Graph& host, const Graph& pattern);

/// Like contains_subgraph, restricted to copies that use the host edge `anchor`.
std::optional<EmbeddingWitness> contains_subgraph_through(const Graph& host,
                                                          const Graph& pattern, Edge anchor);

bool is_free(const Graph& host, const Graph& pattern);

/// Injective and edge-preserving.
bool verify_witness(const Graph& host, const Graph& pattern, const EmbeddingWitness& witness);

bool are_isomorphic(const Graph& a, const Graph& b);

/// A named forbidden family; a host is free of the set when it is free of
/// every member.
struct PatternSet {
  std::string name;
  std::vector<Graph> members;
};

/// Accepts `theta6-1`, `theta6-2`, `theta:<k>:<d>` and `theta-family:<k>`.
/// Throws Error(InvalidName) or Error(ParameterOutOfRange).
PatternSet parse_pattern(std::string_view name);

struct PatternMatch {
  int member = 0;
  EmbeddingWitness witness;
};

std::optional<PatternMatch> find_pattern(const Graph& host, const PatternSet& patterns);
bool is_free(const Graph& host, const PatternSet& patterns);

}  // namespace triblock
