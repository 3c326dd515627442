#include "nulldecomp/tree_decomp.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "nulldecomp/linalg.hpp"

namespace nulldecomp {

namespace {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.empty();
}

void require_forest(const Graph& g) {
  if (!is_forest(g)) throw Error(ErrorCode::NotAForest, "graph contains a cycle");
}

// Perfect matching of a forest by repeatedly matching a leaf to its
// neighbour; empty when the forest has none.
std::optional<std::vector<Edge>> leaf_perfect_matching(const Graph& f) {
  std::vector<std::size_t> deg(f.order());
  std::vector<bool> gone(f.order(), false);
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < f.order(); ++v) {
    deg[v] = f.degree(v);
    if (deg[v] == 0) return std::nullopt;
    if (deg[v] == 1) leaves.push_back(v);
  }
  std::vector<Edge> out;
  while (!leaves.empty()) {
    VertexId leaf = leaves.back();
    leaves.pop_back();
    if (gone[leaf]) continue;
    VertexId mate = f.order();
    for (VertexId w : f.neighbors(leaf)) {
      if (!gone[w]) mate = w;
    }
    if (mate == f.order()) return std::nullopt;
    out.emplace_back(leaf, mate);
    gone[leaf] = gone[mate] = true;
    for (VertexId w : f.neighbors(mate)) {
      if (gone[w]) continue;
      if (--deg[w] == 0) return std::nullopt;
      if (deg[w] == 1) leaves.push_back(w);
    }
  }
  if (out.size() * 2 != f.order()) return std::nullopt;
  return out;
}

}  // namespace

NullDecomposition decompose(const Graph& forest) {
  require_forest(forest);
  NullDecomposition d;
  d.supp = support(forest);

  std::vector<VertexId> core;
  for (VertexId s : d.supp) {
    for (VertexId w : forest.neighbors(s)) core.push_back(w);
  }
  d.core = make_vertex_set(std::move(core));
  d.s_forest = set_union(d.supp, d.core);
  for (VertexId v = 0; v < forest.order(); ++v) {
    if (!std::binary_search(d.s_forest.begin(), d.s_forest.end(), v)) d.n_forest.push_back(v);
  }

  if (!disjoint(d.supp, d.core)) throw std::logic_error("decompose: support is not independent");
  if (d.n_forest.size() % 2 != 0) throw std::logic_error("decompose: odd number of N-vertices");
  return d;
}

std::size_t tree_alpha(const NullDecomposition& d) { return d.supp.size() + d.n_forest.size() / 2; }
std::size_t tree_alpha(const Graph& forest) { return tree_alpha(decompose(forest)); }

std::size_t tree_nu(const NullDecomposition& d) { return d.core.size() + d.n_forest.size() / 2; }
std::size_t tree_nu(const Graph& forest) { return tree_nu(decompose(forest)); }

bool root_is_matched(const Graph& tree, VertexId v) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "graph is not a tree");
  if (!tree.contains(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in tree");
  if (tree.order() == 1) return false;
  const VertexSet supp = support(tree);
  return !std::binary_search(supp.begin(), supp.end(), v);
}

VertexSet decomposition_independent_set(const Graph& forest, const NullDecomposition& d,
                                        std::optional<VertexId> avoid) {
  if (avoid && std::binary_search(d.supp.begin(), d.supp.end(), *avoid)) {
    throw std::invalid_argument("decomposition_independent_set: cannot avoid a support vertex");
  }
  std::vector<VertexId> out(d.supp.begin(), d.supp.end());
  const Subgraph nf = induced_subgraph(forest, d.n_forest);
  for (const Subgraph& comp : connected_components(nf.graph)) {
    // 2-colour the component; both classes are maximum since it has a perfect matching.
    std::vector<int> colour(comp.graph.order(), -1);
    colour[0] = 0;
    std::vector<VertexId> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (VertexId w : comp.graph.neighbors(queue[i])) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[queue[i]];
          queue.push_back(w);
        }
      }
    }
    int keep = 0;
    if (avoid) {
      for (VertexId x = 0; x < comp.graph.order(); ++x) {
        if (nf.parent_of(comp.parent_of(x)) == *avoid) keep = 1 - colour[x];
      }
    }
    for (VertexId x = 0; x < comp.graph.order(); ++x) {
      if (colour[x] == keep) out.push_back(nf.parent_of(comp.parent_of(x)));
    }
  }
  return make_vertex_set(std::move(out));
}

Matching decomposition_matching(const Graph& forest, const NullDecomposition& d) {
  std::vector<Edge> edges;

  const Subgraph nf = induced_subgraph(forest, d.n_forest);
  auto perfect = leaf_perfect_matching(nf.graph);
  if (!perfect) throw std::logic_error("decomposition_matching: N-forest lacks a perfect matching");
  for (const Edge& e : *perfect) edges.emplace_back(nf.parent_of(e.u), nf.parent_of(e.v));

  // Core into Supp by augmenting paths (Kuhn); Hall's condition holds strictly on trees.
  std::vector<bool> in_supp(forest.order(), false);
  for (VertexId s : d.supp) in_supp[s] = true;
  std::vector<long> supp_mate(forest.order(), -1);
  std::vector<bool> visited;
  auto augment = [&](auto&& self, VertexId c) -> bool {
    for (VertexId s : forest.neighbors(c)) {
      if (!in_supp[s] || visited[s]) continue;
      visited[s] = true;
      if (supp_mate[s] < 0 || self(self, static_cast<VertexId>(supp_mate[s]))) {
        supp_mate[s] = c;
        return true;
      }
    }
    return false;
  };
  for (VertexId c : d.core) {
    visited.assign(forest.order(), false);
    if (!augment(augment, c)) throw std::logic_error("decomposition_matching: core vertex left unmatched");
  }
  for (VertexId s : d.supp) {
    if (supp_mate[s] >= 0) edges.emplace_back(s, static_cast<VertexId>(supp_mate[s]));
  }
  return make_matching(std::move(edges));
}

}  // namespace nulldecomp
