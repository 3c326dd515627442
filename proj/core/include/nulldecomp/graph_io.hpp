#pragma once

#include <map>
#include <string>
#include <string_view>

#include "nulldecomp/graph.hpp"

namespace nulldecomp {

/// Edge-list text format.
///
///   # comment
///   n=6                 optional vertex count (else max id + 1)
///   names=v1,v2,...     optional display names, one per vertex
///   0 1                 one edge per line
///   v1 v5               names may stand in for ids once declared
///
/// Throws ParseError with MalformedLine, SelfLoop or DuplicateEdge.
Graph parse_edge_list(std::string_view text);

/// Writes the format read by parse_edge_list (with names= when present).
std::string to_edge_list(const Graph& g);

/// Decodes one graph6 record (McKay's format; upper triangle, column-major).
/// Throws ParseError with BadChecksumChar or TruncatedPayload.
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

enum class VertexRole { Plain, Support, Core, NVertex };

std::string_view to_string(VertexRole role);

/// Graphviz DOT. Support vertices are boxes, core vertices double circles,
/// N-vertices stars and everything else circles. Role entries naming
/// vertices outside g are ignored.
std::string export_dot(const Graph& g, const std::map<VertexId, VertexRole>& roles = {});

}  // namespace nulldecomp
