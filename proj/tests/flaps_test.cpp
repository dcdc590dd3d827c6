#include <gtest/gtest.h>

#include "subdens/errors.hpp"
#include "subdens/flaps.hpp"
#include "support.hpp"

using namespace subdens;

namespace {

Graph k5_with_pendant() {
  std::vector<Edge> edges = complete_graph(5).edges();
  edges.emplace_back(0, 5);
  return Graph(6, edges);
}

}  // namespace

TEST(Separations, TriangleHasNone) { EXPECT_TRUE(enumerate_separations(complete_graph(3)).empty()); }

TEST(Separations, PathOnThree) {
  const auto seps = enumerate_separations(path_graph(3));
  ASSERT_EQ(seps.size(), 2U);
  EXPECT_EQ(seps[0], (Separation{VertexSet{1}, VertexSet{0}}));
  EXPECT_EQ(seps[1], (Separation{VertexSet{1}, VertexSet{2}}));
}

TEST(Separations, PendantFlapOnK5) {
  const Graph h = k5_with_pendant();
  const Separation pendant{VertexSet{0}, VertexSet{5}};
  const auto flaps = enumerate_candidate_flaps(h);
  EXPECT_NE(std::find(flaps.begin(), flaps.end(), pendant), flaps.end());
  EXPECT_TRUE(is_flap(h, pendant));
  EXPECT_EQ(a_plus(h, pendant), complete_graph(2));
}

TEST(Separations, NonPlanarSideIsNotAFlap) {
  const Graph h = disjoint_union(complete_graph(5), complete_graph(5));
  EXPECT_FALSE(is_flap(h, Separation{VertexSet{0, 1}, VertexSet{2, 3, 4}}));
}

TEST(Separations, Validation) {
  EXPECT_THROW(validate_separation(path_graph(3), Separation{VertexSet{}, VertexSet{0}}), DomainError);
  EXPECT_THROW(validate_separation(path_graph(3), Separation{VertexSet{1}, VertexSet{0, 2}}), DomainError);
  EXPECT_THROW(validate_separation(path_graph(4), Separation{VertexSet{0, 1, 2}, VertexSet{3}}), DomainError);
  EXPECT_NO_THROW(validate_separation(path_graph(3), Separation{VertexSet{1}, VertexSet{0}}));
}

TEST(Separations, Independence) {
  EXPECT_TRUE(are_independent(path_graph(5), {VertexSet{1}, VertexSet{0}}, {VertexSet{3}, VertexSet{4}}));
  EXPECT_TRUE(are_independent(path_graph(3), {VertexSet{1}, VertexSet{0}}, {VertexSet{1}, VertexSet{2}}));
  EXPECT_FALSE(are_independent(path_graph(4), {VertexSet{1}, VertexSet{0}}, {VertexSet{0, 2}, VertexSet{1}}));
}

TEST(FlapNumber, Examples) {
  EXPECT_EQ(flap_number(complete_graph(4)), 1);
  EXPECT_EQ(flap_number(complete_graph(5)), 0);
  EXPECT_EQ(flap_number(path_graph(5)), 3);
  EXPECT_EQ(flap_number(Graph(1)), 1);
  EXPECT_EQ(flap_number(k5_with_pendant()), 1);
  EXPECT_THROW(flap_number(Graph(0)), DomainError);
  EXPECT_THROW(flap_number(Graph(20), 16), CapExceeded);
}

TEST(FlapNumber, FamilyIsIndependentFlaps) {
  oracle::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Graph h = oracle::random_graph(rng, 3 + i % 7, 0.45);
    const FlapFamily fam = max_flap_family(h);
    if (!fam.family.empty()) EXPECT_EQ(static_cast<int>(fam.family.size()), fam.number);
    for (std::size_t a = 0; a < fam.family.size(); ++a) {
      EXPECT_NO_THROW(validate_separation(h, fam.family[a]));
      EXPECT_TRUE(is_flap(h, fam.family[a]));
      for (std::size_t b = a + 1; b < fam.family.size(); ++b) {
        EXPECT_TRUE(are_independent(h, fam.family[a], fam.family[b]));
      }
    }
  }
}

TEST(FlapNumber, MatchesDefinitionOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      ASSERT_EQ(flap_number(g), oracle::flap_number_oracle(g)) << serialize_graph(g);
    }
  }
}

TEST(StronglyNonPlanar, Examples) {
  EXPECT_TRUE(is_strongly_non_planar(complete_graph(5)));
  EXPECT_TRUE(is_strongly_non_planar(complete_bipartite(3, 3)));
  EXPECT_FALSE(is_strongly_non_planar(complete_graph(4)));
  EXPECT_FALSE(is_strongly_non_planar(octahedron_graph()));
  EXPECT_FALSE(is_strongly_non_planar(k5_with_pendant()));
  EXPECT_TRUE(is_strongly_non_planar(disjoint_union(complete_graph(5), complete_graph(5))));
}

TEST(TreeBeta, Examples) {
  EXPECT_EQ(tree_beta(path_graph(5)).beta, 3);
  EXPECT_EQ(tree_beta(path_graph(5)).stable, (VertexSet{0, 2, 4}));
  EXPECT_EQ(tree_beta(star_graph(3)).beta, 3);
  EXPECT_EQ(tree_beta(complete_graph(2)).beta, 1);
  EXPECT_EQ(tree_beta(Graph(1)).beta, 1);
  EXPECT_THROW(tree_beta(cycle_graph(4)), DomainError);
}

TEST(TreeBeta, WitnessIsStableAmongLowDegree) {
  oracle::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const Graph t = oracle::random_tree(rng, 1 + i % 14);
    const TreeBeta b = tree_beta(t);
    EXPECT_EQ(static_cast<int>(b.stable.size()), b.beta);
    for (Vertex v : b.stable) {
      EXPECT_LE(t.degree(v), 2);
      for (Vertex w : b.stable) EXPECT_FALSE(t.adjacent(v, w));
    }
  }
}

TEST(FlapReduction, PathOnThree) {
  const Graph h = path_graph(3);
  const auto family = maximal_first_family(h);
  ASSERT_EQ(family.size(), 2U);
  EXPECT_TRUE(are_isomorphic(flap_reduction(h, family), complete_graph(2)));
}

TEST(FlapReduction, PendantOnK5) {
  const Graph h = k5_with_pendant();
  const auto family = maximal_first_family(h);
  ASSERT_EQ(family.size(), 1U);
  EXPECT_EQ(family[0].s, VertexSet{5});
  const Graph b = flap_reduction(h, family);
  EXPECT_TRUE(are_isomorphic(b, complete_graph(5)));
  // A side {0,5} sits strictly inside the flap with cut {0,x} and the same interior.
  EXPECT_THROW(flap_reduction(h, {Separation{VertexSet{0}, VertexSet{5}}}), DomainError);
  EXPECT_EQ(flap_number(b), 0);
}

TEST(FlapReduction, RejectsBadFamilies) {
  const Graph h = path_graph(5);
  EXPECT_THROW(flap_reduction(h, {}), DomainError);
  // Not maximum.
  EXPECT_THROW(flap_reduction(h, {Separation{VertexSet{1}, VertexSet{0}}}), DomainError);
  // Not independent.
  EXPECT_THROW(flap_reduction(h, {Separation{VertexSet{1}, VertexSet{0}}, Separation{VertexSet{1}, VertexSet{0}},
                                  Separation{VertexSet{3}, VertexSet{4}}}),
               DomainError);
}
