#include <gtest/gtest.h>

#include "subdens/errors.hpp"
#include "subdens/graph.hpp"
#include "support.hpp"

using namespace subdens;

TEST(Parse, Triangle) {
  const Graph g = parse_graph("3 3\n0 1\n1 2\n0 2");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(Parse, SingleVertex) {
  const Graph g = parse_graph("1 0");
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0U);
}

TEST(Parse, CommentsAndBlankLines) {
  const Graph g = parse_graph("# path\n3 2\n\n0 1\n# middle\n1 2\n");
  EXPECT_EQ(g, path_graph(3));
}

namespace {

int error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Parse, Errors) {
  EXPECT_THROW(parse_graph("2 1\n0 0"), ParseError);
  EXPECT_EQ(error_line("2 1\n0 0"), 2);
  EXPECT_EQ(error_line("3 2\n0 1\n0 3"), 3);
  EXPECT_EQ(error_line("3 2\n0 1\n1 0"), 3);
  EXPECT_EQ(error_line("3 2\n0 1"), 2);
  EXPECT_EQ(error_line("3 1\n0 1\n1 2"), 3);
  EXPECT_EQ(error_line("x 1"), 1);
  EXPECT_EQ(error_line("3 1\n0 1 2"), 2);
  EXPECT_EQ(error_line(""), 0);
}

TEST(Parse, RoundTrip) {
  oracle::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 12, 0.4);
    const std::string text = serialize_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);
  }
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(2, {Edge(0, 0)}), DomainError);
  EXPECT_THROW(Graph(2, {Edge(0, 1), Edge(1, 0)}), DomainError);
  EXPECT_THROW(Graph(2, {Edge(0, 2)}), DomainError);
}

TEST(Graph, InducedSubgraph) {
  EXPECT_EQ(induced_subgraph(complete_graph(4), VertexSet{0, 1, 2}), complete_graph(3));
  EXPECT_EQ(induced_subgraph(complete_graph(4), VertexSet{}).order(), 0);
  const Graph sub = induced_subgraph(path_graph(4), VertexSet{0, 2, 3});
  EXPECT_EQ(sub, Graph(3, {Edge(1, 2)}));
  EXPECT_EQ(sub.label(0), "0");
  EXPECT_EQ(sub.label(1), "2");
}

TEST(Graph, Components) {
  EXPECT_EQ(connected_components(complete_graph(3)), std::vector<VertexSet>({VertexSet{0, 1, 2}}));
  const Graph k1k2 = disjoint_union(Graph(1), complete_graph(2));
  EXPECT_EQ(connected_components(k1k2), std::vector<VertexSet>({VertexSet{0}, VertexSet{1, 2}}));
  const Graph split = remove_vertices(path_graph(5), VertexSet{2});
  const auto blocks = connected_components(split);
  ASSERT_EQ(blocks.size(), 2U);
  EXPECT_EQ(blocks[0].size(), 2U);
  EXPECT_EQ(blocks[1].size(), 2U);
}

TEST(Graph, Contraction) {
  EXPECT_EQ(contract_edge_simple(complete_graph(3), Edge(0, 1)), complete_graph(2));
  EXPECT_TRUE(are_isomorphic(contract_edge_simple(path_graph(4), Edge(1, 2)), path_graph(3)));
  EXPECT_TRUE(are_isomorphic(contract_edge_simple(cycle_graph(4), Edge(0, 1)), complete_graph(3)));
}

TEST(Graph, CliqueEdits) {
  EXPECT_EQ(add_clique(Graph(2), VertexSet{0, 1}), complete_graph(2));
  EXPECT_EQ(remove_internal_edges(complete_graph(3), VertexSet{0, 1}), Graph(3, {Edge(0, 2), Edge(1, 2)}));
  EXPECT_EQ(add_clique(complete_graph(4), VertexSet{1, 2, 3}), complete_graph(4));
}

TEST(Graph, Isomorphisms) {
  EXPECT_EQ(count_isomorphisms(complete_graph(3), complete_graph(3)), 6);
  EXPECT_EQ(count_isomorphisms(path_graph(3), complete_graph(3)), 0);
  EXPECT_EQ(count_isomorphisms(cycle_graph(4), cycle_graph(4)), 8);
  oracle::Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 6, 0.5);
    EXPECT_EQ(count_isomorphisms(g, g), oracle::automorphism_oracle(g));
  }
}

TEST(Graph, NamedGraphs) {
  EXPECT_EQ(octahedron_graph().size(), 12U);
  EXPECT_EQ(complete_bipartite(3, 3).size(), 9U);
  EXPECT_EQ(star_graph(3).order(), 4);
  EXPECT_TRUE(is_tree(star_graph(3)));
  EXPECT_FALSE(is_tree(cycle_graph(4)));
}

// Number of graphs on n vertices up to isomorphism: 1, 2, 4, 11, 34, 156.
TEST(Enumeration, CountsMatchKnownValues) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(oracle::all_graphs(n).size(), expected[static_cast<std::size_t>(n)]);
}
