#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nulldecomp/graph.hpp"
#include "nulldecomp/matching.hpp"
#include "nulldecomp/tree_decomp.hpp"

namespace nulldecomp {

enum class UnicyclicType { TypeI, TypeII };

std::string_view to_string(UnicyclicType type);

/// Type I carries the smallest cycle vertex v with v outside Supp(G{v}).
struct TypeVerdict {
  UnicyclicType kind = UnicyclicType::TypeII;
  std::optional<VertexId> witness;
};

enum class SingularityReason {
  None,
  PendantTreeLacksPerfectMatching,  // Type I: G{v}
  RemainderLacksPerfectMatching,    // Type I: G - G{v}
  ForestComponentLacksPerfectMatching,  // Type II: a tree of G - C
  CycleLengthDivisibleByFour,       // Type II
};

std::string_view to_string(SingularityReason reason);

struct SingularityVerdict {
  bool singular = false;
  SingularityReason reason = SingularityReason::None;
};

/// Throws Error{NotUnicyclic} unless g is unicyclic or a cycle.
TypeVerdict classify_type(const Graph& g);

/// Every cycle vertex v that is matched in G{v}, in increasing order.
std::vector<VertexId> matched_cycle_vertices(const Graph& g);

/// Nullity from its parts: eta(G{v}) + eta(G - G{v}) for Type I,
/// eta(G - C) + eta(C) for Type II, where eta(C_n) = 2 if 4 | n else 0.
std::size_t unicyclic_nullity(const Graph& g);

/// Purely combinatorial singularity test via perfect matchings of the parts.
SingularityVerdict is_singular(const Graph& g);
/// Same test evaluated at a chosen matched witness.
SingularityVerdict is_singular(const Graph& g, VertexId witness);

/// Throw Error{WrongType} when g is not of the required type or the witness
/// is not a matched cycle vertex.
std::size_t alpha_type1(const Graph& g, VertexId witness);
std::size_t alpha_type2(const Graph& g);
std::size_t nu_type1(const Graph& g, VertexId witness);
std::size_t nu_type2(const Graph& g);

enum class PartKind { PendantTree, Remainder, ForestComponent };

std::string_view to_string(PartKind kind);

/// A tree or forest the formulas are evaluated on, with its decomposition
/// expressed in the ids of the host graph.
struct PartDecomposition {
  PartKind kind = PartKind::ForestComponent;
  VertexSet vertices;
  NullDecomposition decomposition;
  /// Host vertex on the cycle this part hangs from.
  VertexId anchor = 0;
};

struct PendantSummary {
  VertexId root = 0;
  VertexSet vertices;
  VertexSet supp;
  bool root_matched = false;
};

struct UnicyclicAnalysis {
  CycleInfo cycle;
  TypeVerdict type;
  bool pure_cycle = false;
  SingularityVerdict singularity;
  std::size_t nullity = 0;
  std::size_t alpha = 0;
  std::size_t nu = 0;
  std::vector<PendantSummary> pendants;
  /// Type I: G{v} then G - G{v}. Type II: the components of G - C.
  std::vector<PartDecomposition> parts;
  VertexSet independent_set;
  Matching matching;
};

/// Full analysis with certificates built from the part decompositions and
/// validated against g before returning.
UnicyclicAnalysis analyze(const Graph& g);

}  // namespace nulldecomp
