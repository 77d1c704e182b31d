#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "triblock/blocks.hpp"
#include "triblock/patterns.hpp"
#include "triblock/plane_graph.hpp"

namespace triblock {

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q", e.g. "0/1", "-21/1", "28/5".
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Target inequality e(G) <= (alpha / beta) (n - 2) for graphs free of `pattern`.
struct BoundSpec {
  std::string name;
  int alpha = 0;
  int beta = 0;
  PatternSet pattern;
};

/// `theta6-1` -> (45, 17), `theta6-2` -> (18, 7). Throws Error(InvalidName).
BoundSpec bound_spec(std::string_view name);

Rational edge_contribution(const TriangularBlock& block);
/// Sum over faces f of (darts of f's boundary walk on E(B)) / (walk length of f).
/// Bridges are walked twice and count twice, so a triangle with a pendant
/// edge is a 5-face.
Rational face_contribution(const PlaneGraph& pg, const TriangularBlock& block);
/// face_contribution for every block of `d`, indexed by block id, in one pass.
std::vector<Rational> face_contributions(const PlaneGraph& pg, const Decomposition& d);

/// g(e, f) = (beta - alpha) e + alpha f.
Rational g_eval(const BoundSpec& spec, const Rational& e, const Rational& f);

enum class ClusterKind { Singleton, BBar };
std::string_view to_string(ClusterKind kind);

struct Cluster {
  int id = 0;
  ClusterKind kind = ClusterKind::Singleton;
  std::vector<int> block_ids;  // sorted
  Rational e;
  Rational f;
  Rational g;
};

enum class DiagnosticKind { ClusterConflict, MalformedNeighborhood };
std::string_view to_string(DiagnosticKind kind);

/// Reported instead of thrown; the B5c involved stays a singleton cluster.
struct ClusterDiagnostic {
  DiagnosticKind kind;
  int block_id = 0;
  std::string detail;
};

struct Clustering {
  std::vector<Cluster> clusters;  // ordered by smallest member block id
  std::vector<ClusterDiagnostic> diagnostics;
};

/// Every B5c whose four outside faces are 4-faces x1x2x3w and x1x4x3v, with
/// x1v, x3v, x1w, x3w trivial blocks, is merged with those B2 blocks into one
/// BBar cluster (two of them when v == w). Everything else is a singleton.
Clustering form_clusters(const PlaneGraph& pg, const Decomposition& d, const BoundSpec& spec);

struct BlockLedger {
  int block_id = 0;
  BlockLabel label = BlockLabel::Other;
  Rational e;
  Rational f;
  Rational g;
};

struct Certificate {
  BoundSpec spec;
  int n = 0;
  int m = 0;
  int num_faces = 0;
  std::vector<BlockLedger> blocks;
  Clustering clustering;
  Rational total_e;
  Rational total_f;
  bool identities_ok = false;
  bool all_nonpositive = false;
  bool bound_holds = false;
  std::vector<int> violations;  // cluster ids with g > 0
  bool freeness_checked = false;
  std::optional<bool> pattern_free;
};

struct CertifyOptions {
  bool check_freeness = false;
};

/// Decomposes, clusters and evaluates g per cluster. Throws
/// Error(TooSmall) for n < 6 and Error(IdentityFailure) if the edge or face
/// identity fails, or if all clusters are nonpositive but the bound fails.
Certificate certify(const PlaneGraph& pg, const BoundSpec& spec, CertifyOptions options = {});

}  // namespace triblock
