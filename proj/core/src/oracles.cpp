#include "nulldecomp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_map>

namespace nulldecomp::oracles {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 64;

Mask bit(VertexId v) { return Mask{1} << v; }

void check_size(const Graph& g, std::size_t limit) {
  if (g.order() > std::min(limit, kMaskBits)) {
    throw Error(ErrorCode::TooLarge, std::to_string(g.order()) + " vertices exceeds oracle limit " +
                                         std::to_string(std::min(limit, kMaskBits)));
  }
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : adj_(neighbor_masks(g)) {}

  Mask run(Mask all) {
    search(all, 0);
    return best_;
  }

 private:
  void search(Mask candidates, Mask chosen) {
    if (candidates == 0) {
      if (std::popcount(chosen) > std::popcount(best_)) best_ = chosen;
      return;
    }
    if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best_)) return;

    int pick = -1;
    int pick_degree = -1;
    for (Mask rest = candidates; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(adj_[v] & candidates);
      if (d <= 1) {
        // Some maximum independent set contains any vertex of degree <= 1.
        search(candidates & ~(adj_[v] | bit(v)), chosen | bit(v));
        return;
      }
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    search(candidates & ~(adj_[pick] | bit(pick)), chosen | bit(pick));
    search(candidates & ~bit(pick), chosen);
  }

  std::vector<Mask> adj_;
  Mask best_ = 0;
};

// Two-colouring; nullopt if an odd cycle exists.
std::optional<std::vector<int>> two_colouring(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (VertexId s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<VertexId> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (VertexId w : g.neighbors(queue[i])) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[queue[i]];
          queue.push_back(w);
        } else if (colour[w] == colour[queue[i]]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

// Augmenting paths from each left vertex; exact on bipartite graphs.
std::vector<Edge> bipartite_matching(const Graph& g, const std::vector<int>& colour) {
  std::vector<long> mate(g.order(), -1);
  std::vector<bool> visited;
  auto augment = [&](auto&& self, VertexId left) -> bool {
    for (VertexId right : g.neighbors(left)) {
      if (visited[right]) continue;
      visited[right] = true;
      if (mate[right] < 0 || self(self, static_cast<VertexId>(mate[right]))) {
        mate[right] = left;
        mate[left] = right;
        return true;
      }
    }
    return false;
  };
  for (VertexId v = 0; v < g.order(); ++v) {
    if (colour[v] != 0 || mate[v] >= 0) continue;
    visited.assign(g.order(), false);
    augment(augment, v);
  }
  std::vector<Edge> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (colour[v] == 0 && mate[v] >= 0) out.emplace_back(v, static_cast<VertexId>(mate[v]));
  }
  return out;
}

std::vector<Edge> without_edge(const std::vector<Edge>& edges, const Edge& drop) {
  std::vector<Edge> out;
  for (const Edge& e : edges) {
    if (!(e == drop)) out.push_back(e);
  }
  return out;
}

// Connected graph whose only cycle is odd.
std::vector<Edge> odd_unicyclic_matching(const Graph& g) {
  const CycleInfo cycle = find_cycle(g);
  std::vector<Edge> best;
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    const Edge drop(cycle.vertices[i], cycle.vertices[(i + 1) % cycle.length()]);
    const Graph tree(g.order(), without_edge(g.edges(), drop));
    auto m = bipartite_matching(tree, *two_colouring(tree));
    if (m.size() > best.size()) best = std::move(m);
  }
  return best;
}

class ExhaustiveMatching {
 public:
  explicit ExhaustiveMatching(const Graph& g) : adj_(neighbor_masks(g)) {}

  std::vector<Edge> run(Mask all) {
    std::vector<Edge> out;
    Mask rest = all;
    while (rest) {
      const VertexId v = static_cast<VertexId>(std::countr_zero(rest));
      const int here = best(rest);
      if (best(rest & ~bit(v)) == here) {
        rest &= ~bit(v);
        continue;
      }
      for (Mask nb = adj_[v] & rest; nb; nb &= nb - 1) {
        const VertexId w = static_cast<VertexId>(std::countr_zero(nb));
        if (1 + best(rest & ~bit(v) & ~bit(w)) == here) {
          out.emplace_back(v, w);
          rest &= ~bit(v) & ~bit(w);
          break;
        }
      }
    }
    return out;
  }

 private:
  // Branch on the lowest vertex: leave it single, or match it to a neighbour.
  int best(Mask rest) {
    if (rest == 0) return 0;
    if (auto it = memo_.find(rest); it != memo_.end()) return it->second;
    const VertexId v = static_cast<VertexId>(std::countr_zero(rest));
    int value = best(rest & ~bit(v));
    for (Mask nb = adj_[v] & rest; nb; nb &= nb - 1) {
      const VertexId w = static_cast<VertexId>(std::countr_zero(nb));
      value = std::max(value, 1 + best(rest & ~bit(v) & ~bit(w)));
    }
    memo_.emplace(rest, value);
    return value;
  }

  std::vector<Mask> adj_;
  std::unordered_map<Mask, int> memo_;
};

Mask full_mask(std::size_t n) { return n == kMaskBits ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

std::size_t size_limit() {
  constexpr std::size_t kDefault = 32;
  const char* env = std::getenv("NULLDECOMP_MAX_N");
  if (!env || !*env) return kDefault;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (*end != '\0' || value == 0) return kDefault;
  return std::min<std::size_t>(value, kMaskBits);
}

IndependentSet max_independent_set(const Graph& g, std::size_t limit) {
  check_size(g, limit);
  const Mask best = IndependentSetSearch(g).run(full_mask(g.order()));
  IndependentSet out;
  for (Mask rest = best; rest; rest &= rest - 1) out.vertices.push_back(static_cast<VertexId>(std::countr_zero(rest)));
  out.size = out.vertices.size();
  return out;
}

Matching max_matching(const Graph& g, std::size_t limit) {
  check_size(g, limit);
  std::vector<Edge> edges;
  for (const Subgraph& comp : connected_components(g)) {
    const Graph& h = comp.graph;
    std::vector<Edge> local;
    if (auto colour = two_colouring(h)) {
      local = bipartite_matching(h, *colour);
    } else if (h.size() == h.order()) {
      local = odd_unicyclic_matching(h);
    } else {
      local = ExhaustiveMatching(h).run(full_mask(h.order()));
    }
    for (const Edge& e : local) edges.emplace_back(comp.parent_of(e.u), comp.parent_of(e.v));
  }
  return make_matching(std::move(edges));
}

std::optional<std::vector<VertexId>> find_augmenting_path(const Graph& g, const Matching& m) {
  const std::vector<long> mate = m.mates(g.order());
  std::vector<bool> on_path(g.order(), false);
  std::vector<VertexId> path;

  // `at` is the end of an even-length alternating path; leave it by a free edge.
  auto extend = [&](auto&& self, VertexId at) -> bool {
    for (VertexId w : g.neighbors(at)) {
      if (on_path[w] || mate[at] == static_cast<long>(w)) continue;
      if (mate[w] < 0) {
        path.push_back(w);
        return true;
      }
      const auto next = static_cast<VertexId>(mate[w]);
      if (on_path[next]) continue;
      on_path[w] = on_path[next] = true;
      path.push_back(w);
      path.push_back(next);
      if (self(self, next)) return true;
      path.pop_back();
      path.pop_back();
      on_path[w] = on_path[next] = false;
    }
    return false;
  };

  for (VertexId s = 0; s < g.order(); ++s) {
    if (mate[s] >= 0) continue;
    on_path[s] = true;
    path.assign(1, s);
    if (extend(extend, s)) return path;
    on_path[s] = false;
  }
  return std::nullopt;
}

bool has_perfect_matching(const Graph& forest) {
  if (!is_forest(forest)) throw Error(ErrorCode::NotAForest, "graph contains a cycle");
  if (forest.order() % 2 != 0) return false;
  std::vector<std::size_t> deg(forest.order());
  std::vector<bool> matched(forest.order(), false);
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < forest.order(); ++v) {
    deg[v] = forest.degree(v);
    if (deg[v] == 0) return false;
    if (deg[v] == 1) leaves.push_back(v);
  }
  std::size_t matched_count = 0;
  while (!leaves.empty()) {
    const VertexId leaf = leaves.back();
    leaves.pop_back();
    if (matched[leaf]) continue;
    auto it = std::find_if(forest.neighbors(leaf).begin(), forest.neighbors(leaf).end(),
                           [&](VertexId w) { return !matched[w]; });
    if (it == forest.neighbors(leaf).end()) return false;  // isolated before being matched
    const VertexId partner = *it;
    matched[leaf] = matched[partner] = true;
    matched_count += 2;
    for (VertexId w : forest.neighbors(partner)) {
      if (matched[w]) continue;
      if (--deg[w] == 0) return false;
      if (deg[w] == 1) leaves.push_back(w);
    }
  }
  return matched_count == forest.order();
}

VertexSet eg_set(const Graph& g, std::size_t limit) {
  check_size(g, limit);
  const std::size_t nu = max_matching(g, limit).size();
  VertexSet out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (max_matching(remove_vertices(g, {v}).graph, limit).size() == nu) out.push_back(v);
  }
  return out;
}

bool mismatched_in(const Graph& tree, VertexId v) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "graph is not a tree");
  if (!tree.contains(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in tree");
  if (tree.order() == 1) return true;
  const VertexSet eg = eg_set(tree);
  return std::binary_search(eg.begin(), eg.end(), v);
}

}  // namespace nulldecomp::oracles
