#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "powergraph/power_graph.hpp"
#include "powergraph/products.hpp"
#include "powergraph/verify.hpp"

namespace pg = powergraph;
using pg::ApPair;
using pg::ClassicalWeightKind;
using pg::SimpleGraph;
using pg::Vertex;
using Rule = pg::oracle::Rule;

namespace {

struct RandomPairs {
  explicit RandomPairs(std::uint64_t seed, std::size_t count = 100) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t na = 1 + rng() % 8;
      const std::size_t nb = 1 + rng() % 8;
      auto a = pg::random_graph(na, rng);
      auto b = pg::random_graph(nb, rng);
      pairs.emplace_back(std::move(a), std::move(b));
    }
  }
  std::vector<std::pair<SimpleGraph, SimpleGraph>> pairs;
};

SimpleGraph k2() { return pg::power_graph(pg::cyclic(2)); }

}  // namespace

TEST(ClassicalProducts, KleinFourExamples) {
  EXPECT_EQ(pg::direct_product_graph(k2(), k2()).edge_count(), 2u);
  const auto normal = pg::normal_product_graph(k2(), k2());
  EXPECT_TRUE(pg::graphs_equal_labeled(normal, pg::oracle::complete_graph(4)));
  const auto box = pg::cartesian_product_graph(k2(), k2());
  EXPECT_EQ(box.edge_count(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(box.degree(v), 2u);
  EXPECT_EQ(box.label(3), "(1,1)");
}

TEST(ClassicalProducts, TrivialFactor) {
  const auto x = pg::power_graph(pg::dihedral(4));
  const SimpleGraph k1(1);
  EXPECT_EQ(pg::direct_product_graph(x, k1).edge_count(), 0u);
  EXPECT_EQ(pg::direct_product_graph(x, k1).vertex_count(), x.vertex_count());
  EXPECT_TRUE(pg::graphs_equal_labeled(pg::normal_product_graph(k1, x), x));
  EXPECT_TRUE(pg::graphs_equal_labeled(pg::cartesian_product_graph(x, k1), x));
}

TEST(ClassicalProducts, MatchDefinitionAndEdgeCounts) {
  for (const auto& [a, b] : RandomPairs(1).pairs) {
    const auto direct = pg::direct_product_graph(a, b);
    const auto box = pg::cartesian_product_graph(a, b);
    const auto normal = pg::normal_product_graph(a, b);
    EXPECT_TRUE(pg::graphs_equal_labeled(direct, pg::oracle::product_by_definition(a, b, Rule::Direct)));
    EXPECT_TRUE(pg::graphs_equal_labeled(box, pg::oracle::product_by_definition(a, b, Rule::Cartesian)));
    EXPECT_TRUE(pg::graphs_equal_labeled(normal, pg::oracle::product_by_definition(a, b, Rule::Normal)));

    const std::size_t ea = a.edge_count(), eb = b.edge_count();
    const std::size_t va = a.vertex_count(), vb = b.vertex_count();
    EXPECT_EQ(direct.edge_count(), 2 * ea * eb);
    EXPECT_EQ(box.edge_count(), va * eb + vb * ea);
    EXPECT_EQ(normal.edge_count(), direct.edge_count() + box.edge_count());
  }
}

TEST(ClassicalProducts, CommuteUpToIsomorphism) {
  for (const auto& [a, b] : RandomPairs(2, 30).pairs) {
    EXPECT_TRUE(pg::are_isomorphic(pg::direct_product_graph(a, b), pg::direct_product_graph(b, a)));
    EXPECT_TRUE(pg::are_isomorphic(pg::cartesian_product_graph(a, b), pg::cartesian_product_graph(b, a)));
    EXPECT_TRUE(pg::are_isomorphic(pg::normal_product_graph(a, b), pg::normal_product_graph(b, a)));
  }
}

TEST(ClassicalProducts, SizeCap) {
  EXPECT_THROW(pg::direct_product_graph(SimpleGraph(101), SimpleGraph(100)), pg::GraphError);
  EXPECT_THROW(pg::cartesian_product_graph(SimpleGraph(3), SimpleGraph(3), 8), pg::GraphError);
}

TEST(ClassicalWeights, Values) {
  const auto g = k2();
  const auto direct = pg::classical_weights(ClassicalWeightKind::Direct, g);
  EXPECT_EQ(direct.at(0, 0), pg::kSentinel);
  EXPECT_EQ(direct.at(0, 1), (ApPair{1, 1}));
  const auto left = pg::classical_weights(ClassicalWeightKind::CartesianLeft, g);
  EXPECT_EQ(left.at(0, 1), (ApPair{1, 0}));
  EXPECT_EQ(left.at(1, 1), (ApPair{1, 1}));
  const auto right = pg::classical_weights(ClassicalWeightKind::CartesianRight, g);
  EXPECT_EQ(right.at(1, 0), (ApPair{2, 0}));
  const auto normal = pg::classical_weights(ClassicalWeightKind::Normal, SimpleGraph(3));
  for (Vertex x = 0; x < 3; ++x)
    for (Vertex y = 0; y < 3; ++y)
      EXPECT_EQ(normal.at(x, y), (x == y ? ApPair{1, 1} : pg::kSentinel));
}

TEST(GeneralizedProduct, ReproducesClassicalProducts) {
  for (const auto& [a, b] : RandomPairs(3).pairs) {
    const auto gen = [&](ClassicalWeightKind l, ClassicalWeightKind r) {
      return pg::generalized_product_graph(a, pg::classical_weights(l, a), b,
                                           pg::classical_weights(r, b));
    };
    EXPECT_TRUE(pg::graphs_equal_labeled(gen(ClassicalWeightKind::Direct, ClassicalWeightKind::Direct),
                                         pg::direct_product_graph(a, b)));
    EXPECT_TRUE(pg::graphs_equal_labeled(
        gen(ClassicalWeightKind::CartesianLeft, ClassicalWeightKind::CartesianRight),
        pg::cartesian_product_graph(a, b)));
    EXPECT_TRUE(pg::graphs_equal_labeled(gen(ClassicalWeightKind::Normal, ClassicalWeightKind::Normal),
                                         pg::normal_product_graph(a, b)));
  }
}

TEST(GeneralizedProduct, ExtendingArcWeightsToNonArcsBreaksEquality) {
  // Giving every distinct pair the arc weight, instead of only adjacent
  // pairs, turns the direct product of two edgeless graphs into a nonempty
  // graph. The sentinel extension is what makes the constructions work.
  const SimpleGraph a(2), b(2);
  pg::Generalization wa(2), wb(2);
  wa.set(0, 1, {1, 1});
  wa.set(1, 0, {1, 1});
  wb.set(0, 1, {1, 1});
  wb.set(1, 0, {1, 1});
  EXPECT_EQ(pg::generalized_product_graph(a, wa, b, wb).edge_count(), 2u);
  EXPECT_EQ(pg::direct_product_graph(a, b).edge_count(), 0u);
}

TEST(GeneralizedProduct, PowerWeightsGivePowerGraphOfProduct) {
  const auto z2 = pg::power_graph_bundle(pg::cyclic(2));
  const auto v4 = pg::power_graph(pg::direct_product(pg::cyclic(2), pg::cyclic(2)));
  const auto gen = pg::generalized_product_graph(z2.graph, z2.weights, z2.graph, z2.weights);
  EXPECT_TRUE(pg::graphs_equal_labeled(gen, v4));
  EXPECT_EQ(gen.labels(), v4.labels());

  const auto z3 = pg::power_graph_bundle(pg::cyclic(3));
  const auto z2z3 = pg::generalized_product_graph(z2.graph, z2.weights, z3.graph, z3.weights);
  EXPECT_EQ(z2z3.edge_count(), 13u);
  EXPECT_TRUE(pg::graphs_equal_labeled(z2z3, pg::power_graph(pg::direct_product(pg::cyclic(2), pg::cyclic(3)))));
  EXPECT_TRUE(pg::are_isomorphic(z2z3, pg::power_graph(pg::cyclic(6))));
}

TEST(GeneralizedProduct, TrivialLeftFactor) {
  const auto one = pg::power_graph_bundle(pg::cyclic(1));
  for (const auto& g : {pg::dihedral(4), pg::quaternion8(), pg::cyclic(9)}) {
    const auto b = pg::power_graph_bundle(g);
    EXPECT_TRUE(pg::graphs_equal_labeled(
        pg::generalized_product_graph(one.graph, one.weights, b.graph, b.weights), b.graph));
  }
}

TEST(GeneralizedProduct, AllSentinelWeightsGiveEdgelessGraph) {
  const auto a = pg::oracle::complete_graph(4);
  const auto b = pg::oracle::complete_graph(3);
  const auto g = pg::generalized_product_graph(a, pg::Generalization(4), b, pg::Generalization(3));
  EXPECT_EQ(g.vertex_count(), 12u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(GeneralizedProduct, MatchesRuleEvaluatedOnEveryPair) {
  // Arbitrary weightings, including nonzero weights on non-adjacent pairs,
  // checked against the adjacency rule evaluated pair by pair through the
  // enumeration oracle.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t na = 1 + rng() % 5, nb = 1 + rng() % 5;
    const SimpleGraph a(na), b(nb);
    pg::Generalization wa(na), wb(nb);
    for (Vertex u = 0; u < na; ++u)
      for (Vertex v = 0; v < na; ++v) wa.set(u, v, {rng() % 6, rng() % 4});
    for (Vertex u = 0; u < nb; ++u)
      for (Vertex v = 0; v < nb; ++v) wb.set(u, v, {rng() % 6, rng() % 4});
    const auto g = pg::generalized_product_graph(a, wa, b, wb);
    for (Vertex x = 0; x < na * nb; ++x) {
      for (Vertex y = 0; y < na * nb; ++y) {
        if (x == y) continue;
        const Vertex g1 = x / nb, g2 = x % nb, h1 = y / nb, h2 = y % nb;
        const bool expected = pg::aps_intersect_oracle(wa.at(g1, h1), wb.at(g2, h2)) ||
                              pg::aps_intersect_oracle(wa.at(h1, g1), wb.at(h2, g2));
        EXPECT_EQ(g.adjacent(x, y), expected);
      }
    }
  }
}

TEST(GeneralizedProduct, WeightSizeMismatch) {
  EXPECT_THROW(pg::generalized_product_graph(SimpleGraph(2), pg::Generalization(3), SimpleGraph(2),
                                             pg::Generalization(2)),
               pg::GraphError);
}

TEST(ProductKind, Names) {
  for (auto kind : {pg::ProductKind::Direct, pg::ProductKind::Cartesian, pg::ProductKind::Normal,
                    pg::ProductKind::Generalized})
    EXPECT_EQ(pg::parse_product_kind(pg::to_string(kind)), kind);
  EXPECT_EQ(pg::parse_product_kind("strong"), std::nullopt);
}
