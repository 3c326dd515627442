#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nulldecomp/error.hpp"

namespace nulldecomp {

/// Dense vertex index in [0, n).
using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<VertexId>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph. Immutable after construction.
///
/// Vertices may carry display names (the labels of hand-written
/// fixtures); structural queries only ever look at the integer ids.
class Graph {
 public:
  Graph() = default;

  /// Throws Error{SelfLoop}, Error{DuplicateEdge} or Error{UnknownVertex}.
  Graph(std::size_t order, std::vector<Edge> edges, std::vector<std::string> names = {});

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return adjacency_.empty(); }

  /// Edges sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbours in increasing order.
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool has_edge(VertexId a, VertexId b) const;
  bool contains(VertexId v) const noexcept { return v < order(); }

  bool has_names() const noexcept { return !names_.empty(); }
  /// Display name, or the decimal id when the graph is unnamed.
  std::string name(VertexId v) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
};

/// An induced subgraph together with the map from its ids back to the parent's.
struct Subgraph {
  Graph graph;
  std::vector<VertexId> to_parent;

  VertexId parent_of(VertexId local) const { return to_parent.at(local); }
  /// Local id of a parent vertex, or order() when absent.
  VertexId local_of(VertexId parent) const;
  VertexSet lift(const VertexSet& local) const;
};

enum class Shape { Tree, Unicyclic, Cycle, Forest, Other };

std::string_view to_string(Shape shape);

/// The unique cycle; vertices start at the smallest id and continue towards
/// its smaller cycle neighbour.
struct CycleInfo {
  std::vector<VertexId> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool contains(VertexId v) const;
};

/// G{v}: the maximal subtree hanging at cycle vertex `root`.
struct PendantTree {
  VertexId root = 0;
  Subgraph tree;

  VertexId local_root() const { return tree.local_of(root); }
};

/// Throws Error{EmptyGraph} on the null graph.
Shape classify_shape(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// Throws Error{NotUnicyclic} unless g is connected with |E| = |V|.
CycleInfo find_cycle(const Graph& g);

/// One pendant tree per cycle vertex, in cycle order.
std::vector<PendantTree> pendant_trees(const Graph& g, const CycleInfo& cycle);

/// Induced subgraph on `keep`; local ids follow increasing parent id.
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Induced subgraph on V(g) minus `removed`. Throws Error{UnknownVertex}.
Subgraph remove_vertices(const Graph& g, const VertexSet& removed);

/// Components ordered by their smallest vertex.
std::vector<Subgraph> connected_components(const Graph& g);

/// Sorts and de-duplicates.
VertexSet make_vertex_set(std::vector<VertexId> vs);

}  // namespace nulldecomp
