#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "sgc/bench.hpp"
#include "sgc/coarsen.hpp"
#include "sgc/error.hpp"
#include "sgc/lift.hpp"
#include "sgc/spectral.hpp"

namespace sgc {
namespace {

Graph cycle4() { return Graph::from_edges(4, std::vector<WeightedEdge>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}); }

TEST(LiftTest, TwinMergeOfCycleIsExact) {
  Partition p(4);
  p.unite(0, 2);
  const auto g = cycle4();
  const auto lifted = lift(contract(g, p), p, 4);
  EXPECT_EQ(lifted.graph, g);
  EXPECT_EQ(lifted.partition, p);
}

TEST(LiftTest, IdentityPartition) {
  const auto g = gen_erdos_renyi(10, 0.4, 0.5, 1.5, 8);
  const Partition p(g.num_nodes());
  const auto coarse = contract(g, p);
  EXPECT_EQ(coarse, g);
  EXPECT_EQ(lift(coarse, p, g.num_nodes()).graph, g);
}

TEST(LiftTest, PathMergeProducesSelfLoops) {
  const auto p4 = Graph::from_edges(4, std::vector<WeightedEdge>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  Partition p(4);
  p.unite(0, 1);
  const auto lifted = lift(contract(p4, p), p, 4).graph;
  EXPECT_EQ(lifted.num_nodes(), 4u);
  EXPECT_EQ(lifted.weight(0, 1), 0.5);
  EXPECT_EQ(lifted.weight(0, 0), 0.5);
  EXPECT_EQ(lifted.weight(1, 1), 0.5);
  EXPECT_EQ(lifted.weight(0, 2), 0.5);
  EXPECT_EQ(lifted.weight(1, 2), 0.5);
  EXPECT_EQ(lifted.weight(2, 3), 1.0);
  EXPECT_EQ(lifted.weight(0, 3), 0.0);
  // Member degree is the supernode degree shared evenly.
  EXPECT_EQ(lifted.degree(0), 1.5);
}

TEST(LiftTest, MatchesDenseMatrixIdentity) {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.below(29);
    const auto edges = testing::random_edges(rng, n, 0.3, 0.5, 1.5);
    const auto g = Graph::from_edges(n, edges);
    Partition part(n);
    for (std::size_t k = 0; k < n; ++k) part.unite(rng.below(n), rng.below(n));
    const auto labels = part.labels();
    const auto lifted = lift(contract(g, part), part, n);
    ASSERT_EQ(lifted.graph.num_nodes(), n);

    const auto w = testing::dense_from_edges(n, edges);
    const auto p = testing::indicator(labels, part.live());
    const auto q = testing::averaging(labels, part.live());
    const auto wc = testing::multiply(testing::multiply(p, w), testing::transpose(p));
    const auto expected = testing::multiply(testing::multiply(testing::transpose(q), wc), q);
    EXPECT_LT(testing::max_abs_diff(testing::dense_from_graph(lifted.graph), expected), 1e-12);
  }
}

TEST(LiftTest, ZeroFitnessMergesPreserveSpectrum) {
  // Complete bipartite K_{3,4}: same-side nodes have identical rows.
  std::vector<WeightedEdge> edges;
  for (NodeId a = 0; a < 3; ++a)
    for (NodeId b = 3; b < 7; ++b) edges.push_back({a, b, 1.0 + 0.1 * a});
  const auto g = Graph::from_edges(7, edges);
  const auto base = eigvals_sym(normalized_laplacian(g));
  Partition part(7);
  for (const auto& [u, v] : {std::pair<NodeId, NodeId>{3, 4}, {5, 6}, {3, 6}}) {
    EXPECT_NEAR(edge_fitness(g, u, v), 0.0, 1e-15);
    part.unite(u, v);
    const auto lifted = lift(contract(g, part), part, 7);
    EXPECT_LE(eigenvalue_gap(base, eigvals_sym(normalized_laplacian(lifted.graph))), 1e-9);
  }
}

TEST(LiftTest, CoarseEigenvaluesAppearInLift) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = gen_erdos_renyi(12, 0.4, 0.5, 1.5, seed);
    const auto r = approximate_greedy_coarsen(g, 5, 1);
    const auto coarse = eigvals_sym(normalized_laplacian(r.coarse));
    const auto lifted = eigvals_sym(normalized_laplacian(lift(r.coarse, r.partition, 12).graph));
    for (const double mu : coarse) {
      double best = 1e300;
      for (const double lam : lifted) best = std::min(best, std::abs(lam - mu));
      EXPECT_LE(best, 1e-6);
    }
  }
}

TEST(LiftTest, RejectsMismatch) {
  const auto g = cycle4();
  Partition p(4);
  p.unite(0, 2);
  const auto coarse = contract(g, p);
  EXPECT_THROW(lift(coarse, p, 5), InvalidArgument);
  EXPECT_THROW(lift(g, p, 4), InvalidArgument);
}

}  // namespace
}  // namespace sgc
