#pragma once

#include <optional>

#include "nulldecomp/graph.hpp"
#include "nulldecomp/matching.hpp"

namespace nulldecomp {

/// Null decomposition of a forest T.
///
///   supp      = Supp(T)
///   core      = N(supp)
///   s_forest  = N[supp] = supp + core
///   n_forest  = V(T) - s_forest, the N-vertices
struct NullDecomposition {
  VertexSet supp;
  VertexSet core;
  VertexSet s_forest;
  VertexSet n_forest;

  friend bool operator==(const NullDecomposition&, const NullDecomposition&) = default;
};

/// Throws Error{NotAForest}. The empty graph decomposes into empty sets.
NullDecomposition decompose(const Graph& forest);

/// |Supp| + |N-vertices| / 2, summed over components.
std::size_t tree_alpha(const Graph& forest);
std::size_t tree_alpha(const NullDecomposition& d);

/// |Core| + |N-vertices| / 2, summed over components.
std::size_t tree_nu(const Graph& forest);
std::size_t tree_nu(const NullDecomposition& d);

/// True iff every maximum matching of the tree saturates v, i.e. v is not in
/// Supp(tree). A single-vertex tree is mismatched.
/// Throws Error{NotATree} or Error{UnknownVertex}.
bool root_is_matched(const Graph& tree, VertexId v);

/// Maximum independent set assembled from the decomposition: the support
/// plus one colour class of every N-forest component. When `avoid` is given
/// (it must not be a support vertex) the class not containing it is chosen.
VertexSet decomposition_independent_set(const Graph& forest, const NullDecomposition& d,
                                        std::optional<VertexId> avoid = std::nullopt);

/// Maximum matching assembled from the decomposition: a perfect matching of
/// each N-forest component plus a matching of Core into Supp.
Matching decomposition_matching(const Graph& forest, const NullDecomposition& d);

}  // namespace nulldecomp
