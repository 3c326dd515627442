#pragma once

#include <vector>

#include "nulldecomp/graph.hpp"

namespace nulldecomp {

/// Set of pairwise vertex-disjoint edges.
struct Matching {
  std::vector<Edge> edges;  // sorted

  std::size_t size() const noexcept { return edges.size(); }
  bool saturates(VertexId v) const;
  /// Partner of each vertex, or -1.
  std::vector<long> mates(std::size_t order) const;
};

Matching make_matching(std::vector<Edge> edges);

/// Every edge belongs to g and no two edges share an endpoint.
bool is_valid_matching(const Graph& g, const Matching& m);

bool is_independent_set(const Graph& g, const VertexSet& vs);

}  // namespace nulldecomp
