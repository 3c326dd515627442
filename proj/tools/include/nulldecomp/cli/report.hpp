#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "nulldecomp/graph.hpp"
#include "nulldecomp/graph_io.hpp"

namespace nulldecomp::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kParseFailure = 2, kUnsupportedShape = 3 };

struct Report {
  nlohmann::ordered_json json;
  std::map<VertexId, VertexRole> roles;
  bool mismatch = false;
};

/// Vertex label as it appears in reports: the display name when the graph
/// has one, otherwise the integer id.
nlohmann::ordered_json label(const Graph& g, VertexId v);
nlohmann::ordered_json labels(const Graph& g, const VertexSet& vs);

/// Trees, forests, cycles and unicyclic graphs. Throws Error{NotUnicyclic}
/// for any other shape and Error{EmptyGraph} on the null graph. With
/// `verify` set, formulas are compared against the oracles and the result
/// lands under "verify"; any disagreement sets `mismatch`.
Report build_report(const Graph& g, const std::string& input, bool verify);

}  // namespace nulldecomp::cli
