#include "nulldecomp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace nulldecomp {

Graph::Graph(std::size_t order, std::vector<Edge> edges, std::vector<std::string> names)
    : adjacency_(order), edges_(std::move(edges)), names_(std::move(names)) {
  if (!names_.empty() && names_.size() != order) {
    throw Error(ErrorCode::UnknownVertex, "expected " + std::to_string(order) + " vertex names, got " +
                                              std::to_string(names_.size()));
  }
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(e.u));
    if (e.v >= order) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(e.v) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "} repeated");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::string Graph::name(VertexId v) const {
  if (names_.empty()) return std::to_string(v);
  return names_.at(v);
}

VertexId Subgraph::local_of(VertexId parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return static_cast<VertexId>(to_parent.size());
  return static_cast<VertexId>(it - to_parent.begin());
}

VertexSet Subgraph::lift(const VertexSet& local) const {
  VertexSet out;
  out.reserve(local.size());
  for (VertexId v : local) out.push_back(parent_of(v));
  return make_vertex_set(std::move(out));
}

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::Tree: return "Tree";
    case Shape::Unicyclic: return "Unicyclic";
    case Shape::Cycle: return "Cycle";
    case Shape::Forest: return "Forest";
    case Shape::Other: return "Other";
  }
  return "Other";
}

bool CycleInfo::contains(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

namespace {

std::size_t count_components(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

}  // namespace

bool is_connected(const Graph& g) { return g.order() <= 1 || count_components(g) == 1; }

// A graph is acyclic iff |E| = |V| - (number of components).
bool is_forest(const Graph& g) { return g.size() + count_components(g) == g.order(); }

bool is_tree(const Graph& g) { return !g.empty() && g.size() + 1 == g.order() && is_connected(g); }

Shape classify_shape(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  const std::size_t components = count_components(g);
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  if (components == 1) {
    if (m + 1 == n) return Shape::Tree;
    if (m == n) {
      for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) != 2) return Shape::Unicyclic;
      }
      return Shape::Cycle;
    }
    return Shape::Other;
  }
  return m + components == n ? Shape::Forest : Shape::Other;
}

CycleInfo find_cycle(const Graph& g) {
  if (g.empty() || g.size() != g.order() || !is_connected(g)) {
    throw Error(ErrorCode::NotUnicyclic, "graph is not connected with |E| = |V|");
  }
  // Peel leaves; what survives is exactly the cycle.
  std::vector<std::size_t> deg(g.order());
  std::vector<bool> removed(g.order(), false);
  std::queue<VertexId> leaves;
  for (VertexId v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push(v);
  }
  while (!leaves.empty()) {
    VertexId v = leaves.front();
    leaves.pop();
    removed[v] = true;
    for (VertexId w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) leaves.push(w);
    }
  }

  CycleInfo info;
  VertexId start = 0;
  while (removed[start]) ++start;
  auto cycle_neighbors = [&](VertexId v) {
    std::vector<VertexId> out;
    for (VertexId w : g.neighbors(v)) {
      if (!removed[w]) out.push_back(w);
    }
    return out;
  };
  VertexId prev = start;
  VertexId cur = cycle_neighbors(start).front();  // neighbours are sorted
  info.vertices.push_back(start);
  while (cur != start) {
    info.vertices.push_back(cur);
    auto nbrs = cycle_neighbors(cur);
    VertexId next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  return info;
}

std::vector<PendantTree> pendant_trees(const Graph& g, const CycleInfo& cycle) {
  std::vector<bool> on_cycle(g.order(), false);
  for (VertexId v : cycle.vertices) on_cycle.at(v) = true;

  std::vector<PendantTree> out;
  out.reserve(cycle.length());
  for (VertexId root : cycle.vertices) {
    std::vector<VertexId> members{root};
    std::vector<bool> seen(g.order(), false);
    seen[root] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (VertexId w : g.neighbors(members[i])) {
        if (!seen[w] && !on_cycle[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    out.push_back(PendantTree{root, induced_subgraph(g, make_vertex_set(std::move(members)))});
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> local(g.order(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.contains(keep[i])) {
      throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(keep[i]) + " not in graph");
    }
    local[keep[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != kAbsent && local[e.v] != kAbsent) edges.emplace_back(local[e.u], local[e.v]);
  }
  std::vector<std::string> names;
  if (g.has_names()) {
    names.reserve(keep.size());
    for (VertexId v : keep) names.push_back(g.name(v));
  }
  return Subgraph{Graph(keep.size(), std::move(edges), std::move(names)), keep};
}

Subgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<bool> drop(g.order(), false);
  for (VertexId v : removed) {
    if (!g.contains(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in graph");
    drop[v] = true;
  }
  VertexSet keep;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<Subgraph> connected_components(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Subgraph> out;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> members{s};
    seen[s] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (VertexId w : g.neighbors(members[i])) {
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    out.push_back(induced_subgraph(g, make_vertex_set(std::move(members))));
  }
  return out;
}

VertexSet make_vertex_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace nulldecomp
