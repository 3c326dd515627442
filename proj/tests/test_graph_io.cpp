#include <gtest/gtest.h>

#include "nulldecomp/graph_io.hpp"
#include "nulldecomp/random_graphs.hpp"
#include "support/reference.hpp"

using namespace nulldecomp;

namespace {

std::pair<ErrorCode, std::size_t> parse_failure(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return {e.code(), e.line()};
  }
  ADD_FAILURE() << "parsed: " << text;
  return {ErrorCode::EmptyGraph, 0};
}

ErrorCode g6_failure(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::EmptyGraph;
}

}  // namespace

TEST(EdgeList, ParsesIdsCommentsAndSeparators) {
  const Graph g = parse_edge_list("# header\n\n0 1\n1,2   # trailing\n2\t3\r\n");
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_FALSE(g.has_names());
}

TEST(EdgeList, DeclaredOrderAddsIsolatedVertices) {
  const Graph g = parse_edge_list("n=5\n0 1\n");
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(parse_edge_list("n=1\n").order(), 1u);
}

TEST(EdgeList, Names) {
  const Graph g = parse_edge_list("names=a,b,c\na b\nc 1\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.name(2), "c");
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(parse_failure("0 1\n1 2 3\n"), std::make_pair(ErrorCode::MalformedLine, std::size_t{2}));
  EXPECT_EQ(parse_failure("0 1\n\n2 2\n"), std::make_pair(ErrorCode::SelfLoop, std::size_t{3}));
  EXPECT_EQ(parse_failure("0 1\n1 2\n1 0\n"), std::make_pair(ErrorCode::DuplicateEdge, std::size_t{3}));
  EXPECT_EQ(parse_failure("0 x\n"), std::make_pair(ErrorCode::MalformedLine, std::size_t{1}));
  EXPECT_EQ(parse_failure("n=q\n").first, ErrorCode::MalformedLine);
  EXPECT_EQ(parse_failure("n=2\n0 5\n").first, ErrorCode::MalformedLine);
  EXPECT_EQ(parse_failure("names=a,a\n").first, ErrorCode::MalformedLine);
  EXPECT_EQ(parse_failure("names=a,b\nn=3\n").first, ErrorCode::MalformedLine);
}

TEST(EdgeList, RoundTrip) {
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng = instance_rng(3, i);
    const Graph g = random_unicyclic(rng, 3 + i % 20);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  }
  const Graph named = ref::load_fixture("triangle_alpha");
  const Graph back = parse_edge_list(to_edge_list(named));
  EXPECT_EQ(back, named);
  EXPECT_EQ(back.names(), named.names());
}

TEST(Graph6, KnownStrings) {
  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_TRUE(k2.has_edge(0, 1));
  const Graph k3 = parse_graph6("Bw");
  EXPECT_EQ(k3.size(), 3u);
  EXPECT_EQ(parse_graph6("@").order(), 1u);
  EXPECT_EQ(parse_graph6(">>graph6<<A_"), k2);
  EXPECT_EQ(to_graph6(cycle_graph(3)), "Bw");
}

TEST(Graph6, MatchesReferenceEncoder) {
  for (std::size_t n : {1u, 2u, 5u, 6u, 7u, 62u, 63u, 64u, 100u}) {
    Rng rng = instance_rng(5, n);
    const Graph g = n >= 3 ? random_unicyclic(rng, n) : random_tree(rng, n);
    const std::string reference = ref::graph6(g);
    EXPECT_EQ(to_graph6(g), reference) << "n=" << n;
    EXPECT_EQ(parse_graph6(reference), g) << "n=" << n;
  }
}

TEST(Graph6, Errors) {
  EXPECT_EQ(g6_failure("A"), ErrorCode::TruncatedPayload);
  EXPECT_EQ(g6_failure(""), ErrorCode::TruncatedPayload);
  EXPECT_EQ(g6_failure("A!"), ErrorCode::BadChecksumChar);
  EXPECT_EQ(g6_failure("B\x7f"), ErrorCode::BadChecksumChar);
  EXPECT_EQ(g6_failure("A_?"), ErrorCode::MalformedLine);
  EXPECT_EQ(g6_failure("~?"), ErrorCode::TruncatedPayload);
}

TEST(Dot, RolesBecomeShapes) {
  const Graph g(3, {Edge(0, 1), Edge(1, 2)}, {"a", "b", "c"});
  const std::string dot = export_dot(g, {{0, VertexRole::Support}, {1, VertexRole::Core}, {2, VertexRole::NVertex}, {7, VertexRole::Core}});
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("0 [label=\"a\", shape=box]"), std::string::npos);
  EXPECT_NE(dot.find("1 [label=\"b\", shape=doublecircle]"), std::string::npos);
  EXPECT_NE(dot.find("2 [label=\"c\", shape=star]"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
  EXPECT_EQ(dot.find("7 ["), std::string::npos);
  EXPECT_NE(export_dot(path_graph(2)).find("shape=circle"), std::string::npos);
}
