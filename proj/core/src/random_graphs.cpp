#include "nulldecomp/random_graphs.hpp"

#include <queue>
#include <stdexcept>

namespace nulldecomp {

Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Graph random_tree(Rng& rng, std::size_t n) {
  if (n == 0) return Graph();
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {Edge(0, 1)});

  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<std::size_t> degree(n, 1);
  for (VertexId c : code) ++degree[c];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (VertexId c : code) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, std::move(edges));
}

Graph random_unicyclic(Rng& rng, std::size_t n) {
  if (n < 3) throw std::invalid_argument("random_unicyclic: need at least 3 vertices");
  const Graph tree = random_tree(rng, n);
  std::vector<Edge> non_edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!tree.has_edge(u, v)) non_edges.emplace_back(u, v);
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, non_edges.size() - 1);
  std::vector<Edge> edges = tree.edges();
  edges.push_back(non_edges[pick(rng)]);
  return Graph(n, std::move(edges));
}

Graph random_unicyclic(Rng& rng, std::size_t n, const std::function<bool(const Graph&)>& accept,
                       std::size_t max_attempts) {
  Graph g = random_unicyclic(rng, n);
  for (std::size_t i = 1; i < max_attempts && accept && !accept(g); ++i) g = random_unicyclic(rng, n);
  return g;
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

}  // namespace nulldecomp
