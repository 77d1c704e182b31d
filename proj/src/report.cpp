#include "triblock/report.hpp"

#include "triblock/error.hpp"

namespace triblock {

namespace {

Json edge_pairs(const Graph& g, const std::vector<int>& ids) {
  Json out = Json::array();
  for (int id : ids) out.push_back({g.edge(id).u, g.edge(id).v});
  return out;
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

Json cluster_json(const Cluster& c) {
  return {{"id", c.id},
          {"kind", std::string(to_string(c.kind))},
          {"blocks", c.block_ids},
          {"e", to_string(c.e)},
          {"f", to_string(c.f)},
          {"g", to_string(c.g)}};
}

}  // namespace

Json decomposition_json(const PlaneGraph& pg, const Decomposition& d) {
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    blocks.push_back({{"id", b.id},
                      {"label", std::string(to_string(b.label))},
                      {"vertices", b.vertices},
                      {"edges", edge_pairs(pg.graph(), b.edges)},
                      {"interior_faces", b.interior_faces}});
  }
  return {{"n", pg.order()},
          {"m", pg.size()},
          {"faces", pg.num_faces()},
          {"blocks", blocks},
          {"planegraph", to_native(pg)}};
}

Json certificate_json(const Certificate& cert) {
  Json blocks = Json::array();
  for (const auto& b : cert.blocks) {
    blocks.push_back({{"id", b.block_id},
                      {"label", std::string(to_string(b.label))},
                      {"e", to_string(b.e)},
                      {"f", to_string(b.f)},
                      {"g", to_string(b.g)}});
  }
  Json clusters = Json::array();
  for (const auto& c : cert.clustering.clusters) clusters.push_back(cluster_json(c));
  Json diagnostics = Json::array();
  for (const auto& diag : cert.clustering.diagnostics) {
    diagnostics.push_back({{"kind", std::string(to_string(diag.kind))},
                           {"block", diag.block_id},
                           {"detail", diag.detail}});
  }
  Json out = {{"target", cert.spec.name},
              {"alpha", cert.spec.alpha},
              {"beta", cert.spec.beta},
              {"n", cert.n},
              {"m", cert.m},
              {"faces", cert.num_faces},
              {"total_e", to_string(cert.total_e)},
              {"total_f", to_string(cert.total_f)},
              {"identities_ok", cert.identities_ok},
              {"all_nonpositive", cert.all_nonpositive},
              {"bound_holds", cert.bound_holds},
              {"violations", cert.violations},
              {"blocks", blocks},
              {"clusters", clusters},
              {"diagnostics", diagnostics}};
  if (cert.freeness_checked) out["pattern_free"] = cert.pattern_free.value_or(false);
  return out;
}

Json oracle_json(const OracleResult& r, bool include_timing) {
  Json witnesses = Json::array();
  for (const auto& g : r.witnesses) witnesses.push_back(graph_json(g));
  Json out = {{"n", r.n},
              {"pattern", r.pattern},
              {"max_edges", r.max_edges},
              {"witness_classes", r.witness_classes},
              {"explored", r.explored},
              {"witnesses", witnesses}};
  if (include_timing) out["timing"] = {{"elapsed_seconds", r.elapsed.count()}};
  return out;
}

Json extremal_json(const ExtremalReport& report) {
  Json stages = Json::array();
  for (const auto& s : report.stages) {
    stages.push_back({{"stage", s.stage}, {"ok", s.ok}, {"detail", s.detail}});
  }
  return {{"k", report.k}, {"n", report.n}, {"m", report.m}, {"ok", report.ok()},
          {"stages", stages}};
}

Json catalog_json() {
  Json out = Json::array();
  for (const auto& entry : catalog()) {
    Json edges = Json::array();
    for (const Edge& e : entry.edges) edges.push_back({e.u, e.v});
    out.push_back({{"label", std::string(to_string(entry.label))},
                   {"vertices", entry.drawing.size()},
                   {"edges", entry.edges.size()},
                   {"edge_list", edges}});
  }
  return out;
}

Json match_json(const PatternSet& patterns, const std::optional<PatternMatch>& match) {
  Json out = {{"pattern", patterns.name}, {"found", match.has_value()}};
  if (match) {
    out["member"] = match->member;
    out["mapping"] = match->witness.mapping;
  }
  return out;
}

PlaneGraph read_plane_graph_any(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(1, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("planegraph") || !doc["planegraph"].is_string()) {
      throw ParseError(1, "JSON input has no \"planegraph\" field");
    }
    return parse_native(doc["planegraph"].get<std::string>());
  }
  return parse_native(text);
}

}  // namespace triblock
