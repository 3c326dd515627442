#include "nulldecomp/unicyclic.hpp"

#include <algorithm>
#include <stdexcept>

#include "nulldecomp/linalg.hpp"
#include "nulldecomp/oracles.hpp"

namespace nulldecomp {

std::string_view to_string(UnicyclicType type) { return type == UnicyclicType::TypeI ? "I" : "II"; }

std::string_view to_string(SingularityReason reason) {
  switch (reason) {
    case SingularityReason::None: return "none";
    case SingularityReason::PendantTreeLacksPerfectMatching: return "pendant tree G{v} has no perfect matching";
    case SingularityReason::RemainderLacksPerfectMatching: return "G - G{v} has no perfect matching";
    case SingularityReason::ForestComponentLacksPerfectMatching:
      return "a tree of G - C has no perfect matching";
    case SingularityReason::CycleLengthDivisibleByFour: return "cycle length divisible by 4";
  }
  return "none";
}

std::string_view to_string(PartKind kind) {
  switch (kind) {
    case PartKind::PendantTree: return "pendant-tree";
    case PartKind::Remainder: return "remainder";
    case PartKind::ForestComponent: return "forest-component";
  }
  return "forest-component";
}

namespace {

struct Skeleton {
  CycleInfo cycle;
  std::vector<PendantTree> pendants;  // cycle order
};

Skeleton skeleton(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::NotUnicyclic, "empty graph");
  const Shape shape = classify_shape(g);
  if (shape != Shape::Unicyclic && shape != Shape::Cycle) {
    throw Error(ErrorCode::NotUnicyclic, "graph is a " + std::string(to_string(shape)));
  }
  Skeleton s;
  s.cycle = find_cycle(g);
  s.pendants = pendant_trees(g, s.cycle);
  return s;
}

const PendantTree& pendant_at(const Skeleton& s, VertexId root) {
  for (const PendantTree& p : s.pendants) {
    if (p.root == root) return p;
  }
  throw Error(ErrorCode::WrongType, "vertex " + std::to_string(root) + " is not on the cycle");
}

bool matched_at(const PendantTree& p) { return root_is_matched(p.tree.graph, p.local_root()); }

std::vector<VertexId> matched_roots(const Skeleton& s) {
  std::vector<VertexId> out;
  for (const PendantTree& p : s.pendants) {
    if (matched_at(p)) out.push_back(p.root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TypeVerdict verdict_of(const Skeleton& s) {
  const auto roots = matched_roots(s);
  if (roots.empty()) return TypeVerdict{UnicyclicType::TypeII, std::nullopt};
  return TypeVerdict{UnicyclicType::TypeI, roots.front()};
}

const PendantTree& require_witness(const Skeleton& s, VertexId witness) {
  const PendantTree& p = pendant_at(s, witness);
  if (!matched_at(p)) {
    throw Error(ErrorCode::WrongType, "cycle vertex " + std::to_string(witness) + " is mismatched in its pendant tree");
  }
  return p;
}

void require_type2(const Skeleton& s) {
  if (verdict_of(s).kind != UnicyclicType::TypeII) throw Error(ErrorCode::WrongType, "graph is of Type I");
}

Subgraph remainder(const Graph& g, const PendantTree& p) { return remove_vertices(g, p.tree.to_parent); }

Subgraph forest_minus_cycle(const Graph& g, const CycleInfo& c) {
  return remove_vertices(g, make_vertex_set(c.vertices));
}

std::size_t cycle_nullity(std::size_t length) { return length % 4 == 0 ? 2 : 0; }

NullDecomposition lift(const Subgraph& sub, const NullDecomposition& d) {
  return NullDecomposition{sub.lift(d.supp), sub.lift(d.core), sub.lift(d.s_forest), sub.lift(d.n_forest)};
}

struct TypeIParts {
  Subgraph pendant;
  Subgraph rest;
  NullDecomposition pendant_dec;
  NullDecomposition rest_dec;
};

TypeIParts type1_parts(const Graph& g, const PendantTree& p) {
  TypeIParts parts{p.tree, remainder(g, p), {}, {}};
  parts.pendant_dec = decompose(parts.pendant.graph);
  parts.rest_dec = decompose(parts.rest.graph);
  return parts;
}

struct TypeIIPart {
  Subgraph tree;
  NullDecomposition dec;
  VertexId attach_local = 0;  // the vertex adjacent to the cycle
  VertexId anchor = 0;        // its cycle neighbour
};

std::vector<TypeIIPart> type2_parts(const Graph& g, const CycleInfo& c) {
  const Subgraph forest = forest_minus_cycle(g, c);
  std::vector<TypeIIPart> out;
  for (const Subgraph& comp : connected_components(forest.graph)) {
    TypeIIPart part;
    part.tree.graph = comp.graph;
    for (VertexId x : comp.to_parent) part.tree.to_parent.push_back(forest.parent_of(x));
    part.dec = decompose(part.tree.graph);
    bool found = false;
    for (VertexId x = 0; x < part.tree.graph.order() && !found; ++x) {
      for (VertexId w : g.neighbors(part.tree.parent_of(x))) {
        if (c.contains(w)) {
          part.attach_local = x;
          part.anchor = w;
          found = true;
          break;
        }
      }
    }
    if (!found) throw std::logic_error("component of G - C not attached to the cycle");
    out.push_back(std::move(part));
  }
  return out;
}

SingularityVerdict type1_singularity(const Graph& g, const PendantTree& p) {
  if (!oracles::has_perfect_matching(p.tree.graph)) {
    return {true, SingularityReason::PendantTreeLacksPerfectMatching};
  }
  if (!oracles::has_perfect_matching(remainder(g, p).graph)) {
    return {true, SingularityReason::RemainderLacksPerfectMatching};
  }
  return {false, SingularityReason::None};
}

SingularityVerdict type2_singularity(const Graph& g, const CycleInfo& c) {
  for (const Subgraph& comp : connected_components(forest_minus_cycle(g, c).graph)) {
    if (!oracles::has_perfect_matching(comp.graph)) {
      return {true, SingularityReason::ForestComponentLacksPerfectMatching};
    }
  }
  if (c.length() % 4 == 0) return {true, SingularityReason::CycleLengthDivisibleByFour};
  return {false, SingularityReason::None};
}

}  // namespace

TypeVerdict classify_type(const Graph& g) { return verdict_of(skeleton(g)); }

std::vector<VertexId> matched_cycle_vertices(const Graph& g) { return matched_roots(skeleton(g)); }

std::size_t unicyclic_nullity(const Graph& g) {
  const Skeleton s = skeleton(g);
  const TypeVerdict t = verdict_of(s);
  if (t.kind == UnicyclicType::TypeI) {
    const PendantTree& p = pendant_at(s, *t.witness);
    return nullity(p.tree.graph) + nullity(remainder(g, p).graph);
  }
  return nullity(forest_minus_cycle(g, s.cycle).graph) + cycle_nullity(s.cycle.length());
}

SingularityVerdict is_singular(const Graph& g) {
  const Skeleton s = skeleton(g);
  const TypeVerdict t = verdict_of(s);
  if (t.kind == UnicyclicType::TypeI) return type1_singularity(g, pendant_at(s, *t.witness));
  return type2_singularity(g, s.cycle);
}

SingularityVerdict is_singular(const Graph& g, VertexId witness) {
  const Skeleton s = skeleton(g);
  return type1_singularity(g, require_witness(s, witness));
}

std::size_t alpha_type1(const Graph& g, VertexId witness) {
  const Skeleton s = skeleton(g);
  const TypeIParts parts = type1_parts(g, require_witness(s, witness));
  return parts.pendant_dec.supp.size() + parts.rest_dec.supp.size() +
         (parts.pendant_dec.n_forest.size() + parts.rest_dec.n_forest.size()) / 2;
}

std::size_t alpha_type2(const Graph& g) {
  const Skeleton s = skeleton(g);
  require_type2(s);
  std::size_t alpha = s.cycle.length() / 2;
  for (const TypeIIPart& part : type2_parts(g, s.cycle)) alpha += part.dec.supp.size() + part.dec.n_forest.size() / 2;
  return alpha;
}

std::size_t nu_type1(const Graph& g, VertexId witness) {
  const Skeleton s = skeleton(g);
  const TypeIParts parts = type1_parts(g, require_witness(s, witness));
  return parts.pendant_dec.core.size() + parts.rest_dec.core.size() +
         (parts.pendant_dec.n_forest.size() + parts.rest_dec.n_forest.size()) / 2;
}

std::size_t nu_type2(const Graph& g) {
  const Skeleton s = skeleton(g);
  require_type2(s);
  std::size_t nu = s.cycle.length() / 2;
  for (const TypeIIPart& part : type2_parts(g, s.cycle)) nu += part.dec.core.size() + part.dec.n_forest.size() / 2;
  return nu;
}

UnicyclicAnalysis analyze(const Graph& g) {
  const Skeleton s = skeleton(g);
  UnicyclicAnalysis a;
  a.cycle = s.cycle;
  a.type = verdict_of(s);
  a.pure_cycle = g.order() == s.cycle.length();
  a.nullity = nullity(g);

  for (const PendantTree& p : s.pendants) {
    PendantSummary summary;
    summary.root = p.root;
    summary.vertices = p.tree.to_parent;
    summary.supp = p.tree.lift(support(p.tree.graph));
    summary.root_matched = matched_at(p);
    a.pendants.push_back(std::move(summary));
  }
  std::sort(a.pendants.begin(), a.pendants.end(),
            [](const PendantSummary& x, const PendantSummary& y) { return x.root < y.root; });

  std::vector<VertexId> independent;
  std::vector<Edge> matching;
  auto take_matching = [&](const Subgraph& sub, const Matching& m) {
    for (const Edge& e : m.edges) matching.emplace_back(sub.parent_of(e.u), sub.parent_of(e.v));
  };

  if (a.type.kind == UnicyclicType::TypeI) {
    const VertexId v = *a.type.witness;
    const PendantTree& p = pendant_at(s, v);
    const TypeIParts parts = type1_parts(g, p);
    a.singularity = type1_singularity(g, p);
    a.alpha = parts.pendant_dec.supp.size() + parts.rest_dec.supp.size() +
              (parts.pendant_dec.n_forest.size() + parts.rest_dec.n_forest.size()) / 2;
    a.nu = parts.pendant_dec.core.size() + parts.rest_dec.core.size() +
           (parts.pendant_dec.n_forest.size() + parts.rest_dec.n_forest.size()) / 2;
    a.parts.push_back({PartKind::PendantTree, parts.pendant.to_parent, lift(parts.pendant, parts.pendant_dec), v});
    a.parts.push_back({PartKind::Remainder, parts.rest.to_parent, lift(parts.rest, parts.rest_dec), v});

    // I1 in G{v} avoiding v, I2 anywhere in G - G{v}; v is the only bridge.
    for (VertexId x : decomposition_independent_set(parts.pendant.graph, parts.pendant_dec, p.local_root())) {
      independent.push_back(parts.pendant.parent_of(x));
    }
    for (VertexId x : decomposition_independent_set(parts.rest.graph, parts.rest_dec)) {
      independent.push_back(parts.rest.parent_of(x));
    }
    take_matching(parts.pendant, decomposition_matching(parts.pendant.graph, parts.pendant_dec));
    take_matching(parts.rest, decomposition_matching(parts.rest.graph, parts.rest_dec));
  } else {
    const std::vector<TypeIIPart> parts = type2_parts(g, s.cycle);
    a.singularity = type2_singularity(g, s.cycle);
    const std::size_t half = s.cycle.length() / 2;
    a.alpha = half;
    a.nu = half;
    for (std::size_t i = 0; i < half; ++i) {
      independent.push_back(s.cycle.vertices[2 * i]);
      matching.emplace_back(s.cycle.vertices[2 * i], s.cycle.vertices[2 * i + 1]);
    }
    for (const TypeIIPart& part : parts) {
      a.alpha += part.dec.supp.size() + part.dec.n_forest.size() / 2;
      a.nu += part.dec.core.size() + part.dec.n_forest.size() / 2;
      a.parts.push_back({PartKind::ForestComponent, part.tree.to_parent, lift(part.tree, part.dec), part.anchor});
      if (std::binary_search(part.dec.supp.begin(), part.dec.supp.end(), part.attach_local)) {
        throw std::logic_error("analyze: cycle neighbour lies in the support of its tree");
      }
      for (VertexId x : decomposition_independent_set(part.tree.graph, part.dec, part.attach_local)) {
        independent.push_back(part.tree.parent_of(x));
      }
      take_matching(part.tree, decomposition_matching(part.tree.graph, part.dec));
    }
  }

  a.independent_set = make_vertex_set(std::move(independent));
  a.matching = make_matching(std::move(matching));
  if (!is_independent_set(g, a.independent_set) || a.independent_set.size() != a.alpha) {
    throw std::logic_error("analyze: independent-set certificate failed validation");
  }
  if (!is_valid_matching(g, a.matching) || a.matching.size() != a.nu) {
    throw std::logic_error("analyze: matching certificate failed validation");
  }
  return a;
}

}  // namespace nulldecomp
