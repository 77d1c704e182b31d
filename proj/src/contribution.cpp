#include "triblock/contribution.hpp"

#include <algorithm>
#include <set>

#include "triblock/error.hpp"

namespace triblock {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  try {
    auto slash = text.find('/');
    using boost::multiprecision::cpp_int;
    if (slash == std::string_view::npos) return Rational(cpp_int(std::string(text)));
    cpp_int den(std::string(text.substr(slash + 1)));
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(cpp_int(std::string(text.substr(0, slash))), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
  }
}

BoundSpec bound_spec(std::string_view name) {
  if (name == "theta6-1") return {"theta6-1", 45, 17, parse_pattern("theta6-1")};
  if (name == "theta6-2") return {"theta6-2", 18, 7, parse_pattern("theta6-2")};
  throw Error(ErrorKind::InvalidName,
              "unknown target '" + std::string(name) + "' (expected theta6-1 or theta6-2)");
}

Rational edge_contribution(const TriangularBlock& block) {
  return Rational(static_cast<long>(block.edges.size()));
}

Rational face_contribution(const PlaneGraph& pg, const TriangularBlock& block) {
  std::set<int> adjacent;
  for (int e : block.edges) {
    for (int f : pg.faces_of_edge(e)) adjacent.insert(f);
  }
  Rational total = 0;
  for (int f : adjacent) {
    const auto& walk = pg.face(f).walk;
    long shared = 0;
    for (int dart : walk) {
      shared += std::binary_search(block.edges.begin(), block.edges.end(), pg.edge_of(dart));
    }
    total += Rational(shared, static_cast<long>(walk.size()));
  }
  return total;
}

std::vector<Rational> face_contributions(const PlaneGraph& pg, const Decomposition& d) {
  std::vector<Rational> out(d.blocks.size(), Rational(0));
  std::vector<int> owners;
  for (const Face& face : pg.faces()) {
    if (face.walk.empty()) continue;
    owners.clear();
    for (int dart : face.walk) owners.push_back(d.edge_to_block[pg.edge_of(dart)]);
    std::sort(owners.begin(), owners.end());
    const long len = face.walk_length();
    for (std::size_t i = 0; i < owners.size();) {
      std::size_t j = i;
      while (j < owners.size() && owners[j] == owners[i]) ++j;
      out[owners[i]] += Rational(static_cast<long>(j - i), len);
      i = j;
    }
  }
  return out;
}

Rational g_eval(const BoundSpec& spec, const Rational& e, const Rational& f) {
  return Rational(spec.beta - spec.alpha) * e + Rational(spec.alpha) * f;
}

std::string_view to_string(ClusterKind kind) {
  return kind == ClusterKind::BBar ? "bbar" : "singleton";
}

std::string_view to_string(DiagnosticKind kind) {
  return kind == DiagnosticKind::ClusterConflict ? "ClusterConflict" : "MalformedNeighborhood";
}

namespace {

/// Checks that `face` is the 4-cycle a-b-c-x for some x outside `block`;
/// returns x.
std::optional<Vertex> fourth_corner(const Face& face, Vertex a, Vertex b, Vertex c,
                                    const TriangularBlock& block) {
  if (face.walk.size() != 4) return std::nullopt;
  const auto& vs = face.vertices;
  std::vector<Vertex> rest;
  for (Vertex v : vs) {
    if (v != a && v != b && v != c) rest.push_back(v);
  }
  if (rest.size() != 1) return std::nullopt;
  if (std::binary_search(block.vertices.begin(), block.vertices.end(), rest[0])) {
    return std::nullopt;
  }
  // b must sit between a and c on the cycle
  for (std::size_t i = 0; i < 4; ++i) {
    if (vs[i] == b) {
      Vertex prev = vs[(i + 3) % 4];
      Vertex next = vs[(i + 1) % 4];
      if (!((prev == a && next == c) || (prev == c && next == a))) return std::nullopt;
    }
  }
  return rest[0];
}

struct BBarCandidate {
  std::vector<int> trivial_blocks;
  std::optional<ClusterDiagnostic> diagnostic;
};

std::optional<BBarCandidate> bbar_candidate(const PlaneGraph& pg, const Decomposition& d,
                                            const TriangularBlock& block) {
  const B5cFrame fr = canonical_b5c_frame(pg, block);
  std::array<int, 4> outside{};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto sides = pg.faces_of_edge(fr.boundary_edges[i]);
    const bool in0 = std::binary_search(block.interior_faces.begin(),
                                        block.interior_faces.end(), sides[0]);
    const bool in1 = std::binary_search(block.interior_faces.begin(),
                                        block.interior_faces.end(), sides[1]);
    if (in0 == in1) {
      throw Error(ErrorKind::IdentityFailure,
                  "B5c boundary edge " + std::to_string(fr.boundary_edges[i]) +
                      " does not separate an interior face from an outside face");
    }
    outside[i] = in0 ? sides[1] : sides[0];
  }
  for (int f : outside) {
    if (pg.face(f).walk_length() != 4) return std::nullopt;
  }

  auto malformed = [&](const std::string& why) {
    return BBarCandidate{{}, ClusterDiagnostic{DiagnosticKind::MalformedNeighborhood, block.id,
                                               why}};
  };
  if (outside[0] != outside[1] || outside[2] != outside[3]) {
    return malformed("outside 4-faces do not each span two boundary edges");
  }
  auto w = fourth_corner(pg.face(outside[0]), fr.x1, fr.x2, fr.x3, block);
  auto v = fourth_corner(pg.face(outside[2]), fr.x1, fr.x4, fr.x3, block);
  if (!w || !v) return malformed("outside 4-faces are not x1x2x3w and x1x4x3v");

  const Graph& g = pg.graph();
  BBarCandidate cand;
  for (auto [a, b] : {std::pair{fr.x1, *v}, {fr.x3, *v}, {fr.x1, *w}, {fr.x3, *w}}) {
    const int owner = d.edge_to_block[*g.edge_id(a, b)];
    if (d.blocks[owner].label != BlockLabel::B2) {
      return malformed("edge " + std::to_string(a) + "-" + std::to_string(b) +
                       " is not a trivial block");
    }
    cand.trivial_blocks.push_back(owner);
  }
  // v == w leaves only two distinct trivial blocks
  std::sort(cand.trivial_blocks.begin(), cand.trivial_blocks.end());
  cand.trivial_blocks.erase(std::unique(cand.trivial_blocks.begin(), cand.trivial_blocks.end()),
                            cand.trivial_blocks.end());
  return cand;
}

}  // namespace

Clustering form_clusters(const PlaneGraph& pg, const Decomposition& d, const BoundSpec& spec) {
  Clustering out;
  std::vector<int> claimed_by(d.blocks.size(), -1);
  std::vector<std::vector<int>> groups;

  for (const auto& block : d.blocks) {
    if (block.label != BlockLabel::B5c) continue;
    auto cand = bbar_candidate(pg, d, block);
    if (!cand) continue;
    if (cand->diagnostic) {
      out.diagnostics.push_back(*cand->diagnostic);
      continue;
    }
    bool conflict = false;
    for (int b : cand->trivial_blocks) {
      if (claimed_by[b] >= 0) {
        out.diagnostics.push_back({DiagnosticKind::ClusterConflict, block.id,
                                   "trivial block " + std::to_string(b) +
                                       " already belongs to the cluster of block " +
                                       std::to_string(claimed_by[b])});
        conflict = true;
        break;
      }
    }
    if (conflict) continue;
    std::vector<int> members = cand->trivial_blocks;
    members.push_back(block.id);
    for (int b : members) claimed_by[b] = block.id;
    std::sort(members.begin(), members.end());
    groups.push_back(std::move(members));
  }
  for (const auto& block : d.blocks) {
    if (claimed_by[block.id] < 0) groups.push_back({block.id});
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  const auto fb = face_contributions(pg, d);
  for (auto& members : groups) {
    Cluster c;
    c.id = static_cast<int>(out.clusters.size());
    c.kind = members.size() > 1 ? ClusterKind::BBar : ClusterKind::Singleton;
    c.e = 0;
    c.f = 0;
    for (int b : members) {
      c.e += edge_contribution(d.blocks[b]);
      c.f += fb[b];
    }
    c.g = g_eval(spec, c.e, c.f);
    c.block_ids = std::move(members);
    out.clusters.push_back(std::move(c));
  }
  return out;
}

Certificate certify(const PlaneGraph& pg, const BoundSpec& spec, CertifyOptions options) {
  if (pg.order() < 6) {
    throw Error(ErrorKind::TooSmall,
                "certification needs n >= 6, got n = " + std::to_string(pg.order()));
  }
  Certificate cert;
  cert.spec = spec;
  cert.n = pg.order();
  cert.m = pg.size();
  cert.num_faces = pg.num_faces();

  const Decomposition d = decompose(pg);
  const auto fb = face_contributions(pg, d);
  for (const auto& block : d.blocks) {
    Rational e = edge_contribution(block);
    cert.blocks.push_back({block.id, block.label, e, fb[block.id], g_eval(spec, e, fb[block.id])});
  }
  cert.clustering = form_clusters(pg, d, spec);

  cert.total_e = 0;
  cert.total_f = 0;
  for (const auto& c : cert.clustering.clusters) {
    cert.total_e += c.e;
    cert.total_f += c.f;
  }
  if (cert.total_e != Rational(cert.m) || cert.total_f != Rational(cert.num_faces)) {
    throw Error(ErrorKind::IdentityFailure,
                "contribution identities fail: sum e = " + to_string(cert.total_e) + " vs m = " +
                    std::to_string(cert.m) + ", sum f = " + to_string(cert.total_f) +
                    " vs f = " + std::to_string(cert.num_faces));
  }
  cert.identities_ok = true;

  cert.all_nonpositive = true;
  for (const auto& c : cert.clustering.clusters) {
    if (c.g > 0) {
      cert.all_nonpositive = false;
      cert.violations.push_back(c.id);
    }
  }
  cert.bound_holds = static_cast<long long>(cert.m) * spec.beta <=
                     static_cast<long long>(spec.alpha) * (cert.n - 2);
  if (cert.all_nonpositive && !cert.bound_holds) {
    throw Error(ErrorKind::IdentityFailure,
                "every cluster has g <= 0 but the edge bound fails");
  }

  if (options.check_freeness) {
    cert.freeness_checked = true;
    cert.pattern_free = is_free(pg.graph(), spec.pattern);
  }
  return cert;
}

}  // namespace triblock
