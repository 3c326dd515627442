#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nulldecomp/graph.hpp"
#include "nulldecomp/matching.hpp"

namespace nulldecomp::oracles {

/// Size guard for the exponential searches. Defaults to 32 and can be
/// raised through NULLDECOMP_MAX_N (clamped to 64, the bitmask width).
std::size_t size_limit();

struct IndependentSet {
  std::size_t size = 0;
  VertexSet vertices;
};

/// Exact maximum independent set by branch and bound.
/// Throws Error{TooLarge} above `limit` vertices.
IndependentSet max_independent_set(const Graph& g, std::size_t limit = size_limit());

/// Exact maximum matching.
///
/// Bipartite components use augmenting-path search; a component with a
/// single odd cycle is solved as the best of the trees obtained by deleting
/// one cycle edge (a matching never uses every cycle edge); anything else
/// falls back to exhaustive branching. Throws Error{TooLarge}.
Matching max_matching(const Graph& g, std::size_t limit = size_limit());

/// Exhaustive search over simple alternating paths; empty iff `m` is maximum.
std::optional<std::vector<VertexId>> find_augmenting_path(const Graph& g, const Matching& m);

/// Greedy leaf matching, exact on forests. Throws Error{NotAForest}.
bool has_perfect_matching(const Graph& forest);

/// Vertices missed by some maximum matching: { v : nu(G - v) = nu(G) }.
VertexSet eg_set(const Graph& g, std::size_t limit = size_limit());

/// v is left unsaturated by some maximum matching of the tree; a single
/// vertex counts as mismatched. Throws Error{NotATree}.
bool mismatched_in(const Graph& tree, VertexId v);

}  // namespace nulldecomp::oracles
