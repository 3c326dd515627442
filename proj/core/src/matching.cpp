#include "nulldecomp/matching.hpp"

#include <algorithm>

namespace nulldecomp {

bool Matching::saturates(VertexId v) const {
  return std::any_of(edges.begin(), edges.end(), [v](const Edge& e) { return e.u == v || e.v == v; });
}

std::vector<long> Matching::mates(std::size_t order) const {
  std::vector<long> mate(order, -1);
  for (const Edge& e : edges) {
    mate.at(e.u) = e.v;
    mate.at(e.v) = e.u;
  }
  return mate;
}

Matching make_matching(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return Matching{std::move(edges)};
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  std::vector<bool> used(g.order(), false);
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& vs) {
  std::vector<bool> in(g.order(), false);
  for (VertexId v : vs) {
    if (!g.contains(v) || in[v]) return false;
    in[v] = true;
  }
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) return false;
  }
  return true;
}

}  // namespace nulldecomp
