#include <gtest/gtest.h>

#include "nulldecomp/random_graphs.hpp"
#include "nulldecomp/unicyclic.hpp"

using namespace nulldecomp;

TEST(RandomGraphs, Shapes) {
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng = instance_rng(61, i);
    const Graph t = random_tree(rng, 1 + i % 30);
    EXPECT_EQ(t.order(), 1 + i % 30);
    EXPECT_TRUE(is_tree(t));
    const Graph u = random_unicyclic(rng, 3 + i % 30);
    EXPECT_EQ(u.order(), 3 + i % 30);
    const Shape s = classify_shape(u);
    EXPECT_TRUE(s == Shape::Unicyclic || s == Shape::Cycle);
  }
  EXPECT_EQ(random_tree(*std::make_unique<Rng>(1), 0).order(), 0u);
}

TEST(RandomGraphs, ReproduciblePerInstance) {
  for (std::size_t i = 0; i < 20; ++i) {
    Rng a = instance_rng(99, i);
    Rng b = instance_rng(99, i);
    EXPECT_EQ(random_unicyclic(a, 12), random_unicyclic(b, 12));
  }
  Rng x = instance_rng(99, 0);
  Rng y = instance_rng(99, 1);
  EXPECT_NE(random_tree(x, 20), random_tree(y, 20));
}

TEST(RandomGraphs, TreesLookUniform) {
  // Cayley: 16 labelled trees on 4 vertices, 4 stars and 12 paths.
  std::size_t stars = 0;
  constexpr std::size_t kSamples = 16000;
  for (std::size_t i = 0; i < kSamples; ++i) {
    Rng rng = instance_rng(62, i);
    const Graph t = random_tree(rng, 4);
    for (VertexId v = 0; v < 4; ++v) stars += t.degree(v) == 3;
  }
  EXPECT_NEAR(static_cast<double>(stars) / kSamples, 0.25, 0.02);
}

TEST(RandomGraphs, RejectionSamplingHitsBothTypes) {
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng = instance_rng(63, i);
    const auto want = i % 2 ? UnicyclicType::TypeI : UnicyclicType::TypeII;
    const Graph g = random_unicyclic(rng, 10, [&](const Graph& h) { return classify_type(h).kind == want; });
    EXPECT_EQ(classify_type(g).kind, want);
  }
}

TEST(RandomGraphs, Families) {
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(classify_shape(cycle_graph(3)), Shape::Cycle);
  EXPECT_EQ(path_graph(5).size(), 4u);
  EXPECT_TRUE(path_graph(5).has_edge(3, 4));
}
