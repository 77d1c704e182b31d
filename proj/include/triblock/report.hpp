#pragma once

#include <json.hpp>
#include <string>

#include "triblock/blocks.hpp"
#include "triblock/constructions.hpp"
#include "triblock/contribution.hpp"
#include "triblock/oracle.hpp"
#include "triblock/patterns.hpp"
#include "triblock/plane_graph.hpp"

namespace triblock {

using Json = nlohmann::ordered_json;

/// Blocks as edge-pair arrays with interior face ids and labels. The input
/// graph is embedded under "planegraph" in native format so the report can
/// be fed to certify.
Json decomposition_json(const PlaneGraph& pg, const Decomposition& d);

/// Rationals as "p/q" strings.
Json certificate_json(const Certificate& cert);

/// Timing lives under "timing" and is omitted unless requested.
Json oracle_json(const OracleResult& result, bool include_timing);

Json extremal_json(const ExtremalReport& report);

Json catalog_json();

Json match_json(const PatternSet& patterns, const std::optional<PatternMatch>& match);

/// Accepts native planegraph text or a decomposition report. Throws
/// ParseError on anything else.
PlaneGraph read_plane_graph_any(const std::string& text);

}  // namespace triblock
