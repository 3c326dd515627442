#include <gtest/gtest.h>

#include <numeric>

#include "nulldecomp/graph.hpp"
#include "nulldecomp/random_graphs.hpp"
#include "support/reference.hpp"

using namespace nulldecomp;

namespace {

Graph make(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> es) {
  std::vector<Edge> edges;
  for (auto [a, b] : es) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::MalformedLine;
}

}  // namespace

TEST(Graph, StoresSortedAdjacency) {
  const Graph g = make(4, {{3, 0}, {0, 1}, {2, 0}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(std::vector<VertexId>(g.neighbors(0).begin(), g.neighbors(0).end()), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(g.edges().front(), Edge(0, 1));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.degree(0), 3u);
  EXPECT_EQ(g.name(2), "2");
}

TEST(Graph, RejectsBadInput) {
  EXPECT_EQ(code_of([] { make(3, {{1, 1}}); }), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of([] { make(3, {{0, 1}, {1, 0}}); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { make(3, {{0, 3}}); }), ErrorCode::UnknownVertex);
}

TEST(Graph, NamesMustMatchOrder) {
  EXPECT_THROW(Graph(2, {}, {"a"}), Error);
  const Graph g(2, {Edge(0, 1)}, {"a", "b"});
  EXPECT_EQ(g.name(1), "b");
}

TEST(ClassifyShape, Examples) {
  EXPECT_EQ(classify_shape(path_graph(5)), Shape::Tree);
  EXPECT_EQ(classify_shape(make(1, {})), Shape::Tree);
  EXPECT_EQ(classify_shape(cycle_graph(6)), Shape::Cycle);
  EXPECT_EQ(classify_shape(make(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})), Shape::Unicyclic);
  EXPECT_EQ(classify_shape(make(4, {{0, 1}, {2, 3}})), Shape::Forest);
  EXPECT_EQ(classify_shape(make(4, {})), Shape::Forest);
  EXPECT_EQ(classify_shape(make(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}})), Shape::Other);
  EXPECT_EQ(classify_shape(make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})), Shape::Other);
  EXPECT_EQ(code_of([] { classify_shape(Graph()); }), ErrorCode::EmptyGraph);
}

TEST(ClassifyShape, SquareAlphaFixtureIsUnicyclic) {
  const Graph g = ref::load_fixture("square_alpha");
  EXPECT_EQ(g.order(), 13u);
  EXPECT_EQ(g.size(), 13u);
  EXPECT_EQ(classify_shape(g), Shape::Unicyclic);
  const CycleInfo c = find_cycle(g);
  EXPECT_EQ(make_vertex_set(c.vertices), ref::ids(g, {"v", "u", "c", "w"}));
}

TEST(FindCycle, CanonicalOrder) {
  // Cycle 5-2-7-3 with tails.
  const Graph g = make(9, {{5, 2}, {2, 7}, {7, 3}, {3, 5}, {0, 5}, {1, 0}, {8, 7}, {4, 8}, {6, 3}});
  const CycleInfo c = find_cycle(g);
  EXPECT_EQ(c.vertices, (std::vector<VertexId>{2, 5, 3, 7}));
  EXPECT_TRUE(c.contains(7));
  EXPECT_FALSE(c.contains(0));
}

TEST(FindCycle, ConsecutiveVerticesAdjacent) {
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng = instance_rng(11, i);
    const Graph g = random_unicyclic(rng, 3 + i % 14);
    const CycleInfo c = find_cycle(g);
    ASSERT_GE(c.length(), 3u);
    for (std::size_t k = 0; k < c.length(); ++k) {
      EXPECT_TRUE(g.has_edge(c.vertices[k], c.vertices[(k + 1) % c.length()]));
    }
    EXPECT_EQ(make_vertex_set(c.vertices).size(), c.length());
    EXPECT_EQ(c.vertices.front(), *std::min_element(c.vertices.begin(), c.vertices.end()));
    if (c.length() > 2) EXPECT_LT(c.vertices[1], c.vertices.back());
  }
}

TEST(FindCycle, RejectsNonUnicyclic) {
  EXPECT_EQ(code_of([] { find_cycle(path_graph(4)); }), ErrorCode::NotUnicyclic);
  EXPECT_EQ(code_of([] { find_cycle(make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})); }),
            ErrorCode::NotUnicyclic);
}

TEST(PendantTrees, PartitionTheVertexSet) {
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng = instance_rng(12, i);
    const Graph g = random_unicyclic(rng, 3 + i % 14);
    const CycleInfo c = find_cycle(g);
    const auto trees = pendant_trees(g, c);
    ASSERT_EQ(trees.size(), c.length());
    std::vector<VertexId> all;
    for (std::size_t k = 0; k < trees.size(); ++k) {
      const PendantTree& p = trees[k];
      EXPECT_EQ(p.root, c.vertices[k]);
      EXPECT_TRUE(is_tree(p.tree.graph));
      EXPECT_EQ(p.tree.parent_of(p.local_root()), p.root);
      for (VertexId v : p.tree.to_parent) {
        all.push_back(v);
        if (v != p.root) EXPECT_FALSE(c.contains(v));
      }
    }
    std::sort(all.begin(), all.end());
    std::vector<VertexId> expected(g.order());
    std::iota(expected.begin(), expected.end(), 0);
    EXPECT_EQ(all, expected);
  }
}

TEST(PendantTrees, PureCycleGivesSingletons) {
  const Graph g = cycle_graph(5);
  for (const PendantTree& p : pendant_trees(g, find_cycle(g))) EXPECT_EQ(p.tree.graph.order(), 1u);
}

TEST(Subgraphs, InducedAndRemoved) {
  const Graph g(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)}, {"a", "b", "c", "d", "e"});
  const Subgraph s = induced_subgraph(g, {1, 2, 4});
  EXPECT_EQ(s.graph.order(), 3u);
  EXPECT_EQ(s.graph.size(), 1u);
  EXPECT_EQ(s.graph.name(2), "e");
  EXPECT_EQ(s.local_of(4), 2u);
  EXPECT_EQ(s.local_of(0), 3u);
  EXPECT_EQ(s.lift({0, 2}), (VertexSet{1, 4}));

  const Subgraph r = remove_vertices(g, {2});
  EXPECT_EQ(r.to_parent, (std::vector<VertexId>{0, 1, 3, 4}));
  EXPECT_EQ(r.graph.size(), 2u);
  EXPECT_EQ(code_of([&] { remove_vertices(g, {9}); }), ErrorCode::UnknownVertex);
}

TEST(Subgraphs, ComponentsOrderedBySmallestVertex) {
  const Graph g = make(7, {{5, 6}, {0, 3}, {1, 4}, {4, 2}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].to_parent, (std::vector<VertexId>{0, 3}));
  EXPECT_EQ(comps[1].to_parent, (std::vector<VertexId>{1, 2, 4}));
  EXPECT_EQ(comps[2].to_parent, (std::vector<VertexId>{5, 6}));
  EXPECT_TRUE(connected_components(Graph()).empty());
}

TEST(Predicates, ForestTreeConnected) {
  EXPECT_TRUE(is_tree(path_graph(1)));
  EXPECT_TRUE(is_forest(make(3, {{0, 1}})));
  EXPECT_FALSE(is_tree(make(3, {{0, 1}})));
  EXPECT_FALSE(is_forest(cycle_graph(3)));
  EXPECT_TRUE(is_connected(cycle_graph(3)));
  EXPECT_TRUE(is_forest(Graph()));
}
