#include <gtest/gtest.h>

#include "subdens/constructions.hpp"
#include "subdens/counting.hpp"
#include "subdens/errors.hpp"
#include "subdens/flaps.hpp"
#include "support.hpp"

using namespace subdens;

namespace {

BigInt power(long long base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

TEST(LowerBound, Examples) {
  const Graph p3 = lower_bound_graph(path_graph(3), 12);
  EXPECT_LE(p3.order(), 12);
  EXPECT_GE(count_copies(path_graph(3), p3), 9);
  const Graph k4 = lower_bound_graph(complete_graph(4), 16);
  EXPECT_GE(count_copies(complete_graph(4), k4), 3);
  EXPECT_THROW(lower_bound_graph(complete_graph(5), 40), DomainError);
  EXPECT_THROW(lower_bound_graph(Graph(2), 40), DomainError);
  EXPECT_THROW(lower_bound_graph(path_graph(3), 11), DomainError);
}

// At least (floor(n/h) - 1)^k copies within n vertices, for every connected
// H on at most 5 vertices with a flap and every n from 4h to 24.
TEST(LowerBound, CopyGuaranteeExhaustive) {
  for (int h = 1; h <= 5; ++h) {
    for (const Graph& g : oracle::all_graphs(h)) {
      if (!is_connected(g)) continue;
      const int k = flap_number(g);
      if (k == 0) continue;
      for (int n = 4 * h; n <= 24; ++n) {
        const Graph out = lower_bound_graph(g, n);
        ASSERT_LE(out.order(), n);
        ASSERT_GE(count_copies(g, out), power(n / h - 1, k)) << serialize_graph(g) << " n=" << n;
        if (is_planar(g)) ASSERT_TRUE(is_planar(out));
      }
    }
  }
}

TEST(LowerBound, VertexBudgetOnRandomPlanarGraphs) {
  oracle::Rng rng(67);
  int checked = 0;
  while (checked < 50) {
    const Graph h = oracle::random_connected_graph(rng, 3 + checked % 6, 0.3);
    if (!is_planar(h)) continue;
    const Graph out = lower_bound_graph(h, 5 * h.order() + checked % 7);
    EXPECT_LE(out.order(), 5 * h.order() + checked % 7);
    EXPECT_TRUE(is_planar(out));
    ++checked;
  }
}

TEST(TreeBlowup, Examples) {
  const Graph p3 = tree_blowup(path_graph(3), 10);
  EXPECT_TRUE(is_planar(p3));
  EXPECT_LE(p3.order(), 10);
  // Star with 2 * 3 leaves: C(6, 2) paths.
  EXPECT_EQ(count_copies(path_graph(3), p3), 15);
  const Graph k2 = tree_blowup(complete_graph(2), 8);
  EXPECT_GE(count_copies(complete_graph(2), k2), 6);
  EXPECT_THROW(tree_blowup(cycle_graph(3), 10), DomainError);
  EXPECT_THROW(tree_blowup(path_graph(3), 5), DomainError);
}

TEST(TreeBlowup, PlanarWithGuaranteedCopies) {
  oracle::Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const Graph t = oracle::random_tree(rng, 2 + i % 7);
    const int n = 2 * t.order() + i % 5;
    const Graph out = tree_blowup(t, n);
    EXPECT_TRUE(is_planar(out));
    EXPECT_LE(out.order(), n);
    const int beta = tree_beta(t).beta;
    EXPECT_GE(count_copies(t, out), power((n - t.order()) / beta, beta));
  }
}

TEST(SplitGrowth, Examples) {
  const EmbeddedGraph sphere = split_growth(tetrahedron_embedding(), 10);
  EXPECT_EQ(count_cliques(sphere.graph(), 3), 22);
  EXPECT_EQ(count_cliques(sphere.graph(), 4), 7);
  const EmbeddedGraph n1 = split_growth(projective_k6_embedding(), 12);
  EXPECT_EQ(count_cliques(n1.graph(), 3), 38);
  EXPECT_EQ(euler_genus(n1), 1);
  EXPECT_THROW(split_growth(tetrahedron_embedding(), 3), DomainError);
}

TEST(Scaling, Slopes) {
  const ScalingReport p5 = scaling_exponent(path_graph(5), {50, 100, 200, 400}, HostGenerator::tree_blowup);
  EXPECT_NEAR(p5.slope, 3, 0.3);
  const ScalingReport k4 = scaling_exponent(complete_graph(4), {20, 40, 80}, HostGenerator::split_growth);
  EXPECT_GE(k4.slope, 0.8);
  EXPECT_LE(k4.slope, 1.2);
  const ScalingReport k5 = scaling_exponent(complete_graph(5), {10, 20, 40}, HostGenerator::padding);
  EXPECT_NEAR(k5.slope, 0, 0.1);
}

TEST(Scaling, Errors) {
  EXPECT_THROW(scaling_exponent(path_graph(3), {10, 20}, HostGenerator::padding), DomainError);
  EXPECT_THROW(scaling_exponent(path_graph(3), {10, 10, 20}, HostGenerator::padding), DomainError);
  try {
    scaling_exponent(complete_graph(5), {10, 20, 40}, HostGenerator::split_growth);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("10,20,40"), std::string::npos);
  }
  EXPECT_EQ(parse_generator("tree-blowup"), HostGenerator::tree_blowup);
  EXPECT_EQ(generator_name(HostGenerator::padding), "padding");
  EXPECT_THROW(parse_generator("random"), DomainError);
}
