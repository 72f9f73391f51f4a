#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bootperc/corpus.hpp"
#include "bootperc/degeneracy.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/generators.hpp"
#include "oracles.hpp"

namespace bootperc {
namespace {

using testing::degeneracy_by_subgraphs;

void expect_consistent(const Graph& g, const DegeneracyOrdering& ord) {
  const std::size_t n = g.num_vertices();
  ASSERT_EQ(ord.order.size(), n);
  std::size_t max_left = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ASSERT_EQ(ord.position[ord.order[i]], i);
  }
  for (VertexId v = 0; v < n; ++v) {
    std::size_t left = 0;
    for (VertexId w : g.neighbors(v)) left += ord.position[w] < ord.position[v];
    EXPECT_EQ(ord.left_degree[v], left);
    max_left = std::max(max_left, left);
  }
  EXPECT_EQ(ord.d, max_left);
}

TEST(Degeneracy, KnownValues) {
  EXPECT_EQ(compute_ordering(generate(GraphKind::complete, {4})).d, 3u);
  EXPECT_EQ(compute_ordering(generate(GraphKind::cycle, {6})).d, 2u);
  EXPECT_EQ(compute_ordering(testing::petersen()).d, 3u);
  EXPECT_EQ(compute_ordering(Graph(5)).d, 0u);
  EXPECT_EQ(compute_ordering(Graph(1)).d, 0u);
  EXPECT_EQ(compute_ordering(Graph(0)).d, 0u);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph t = generate(GraphKind::random_tree, {2 + seed % 60}, seed);
    EXPECT_EQ(compute_ordering(t).d, 1u);
  }
}

TEST(Degeneracy, OracleValues) {
  // Frozen from the permutation oracle and the subgraph definition.
  EXPECT_EQ(degeneracy_bruteforce(generate(GraphKind::cycle, {6})), 2u);
  EXPECT_EQ(degeneracy_bruteforce(generate(GraphKind::cycle, {5})), 2u);
  EXPECT_EQ(degeneracy_bruteforce(generate(GraphKind::complete, {4})), 3u);
  EXPECT_EQ(degeneracy_bruteforce(generate(GraphKind::path, {4})), 1u);
  EXPECT_EQ(degeneracy_by_subgraphs(testing::petersen()), 3u);
  EXPECT_EQ(degeneracy_by_subgraphs(generate(GraphKind::cycle, {6})), 2u);
}

TEST(Degeneracy, BruteforceRefusesLargeGraphs) {
  EXPECT_THROW(degeneracy_bruteforce(Graph(10)), RefusalError);
  EXPECT_NO_THROW(degeneracy_bruteforce(Graph(9)));
}

TEST(Degeneracy, SmallestIdTieBreak) {
  // P3: v0 and v2 both have degree 1, v0 is peeled first and lands
  // rightmost; then v1 (degree 1, smaller than v2).
  DegeneracyOrdering ord = compute_ordering(generate(GraphKind::path, {3}));
  EXPECT_EQ(ord.order, (std::vector<VertexId>{2, 1, 0}));
  EXPECT_EQ(ord.d, 1u);
  DegeneracyOrdering k4 = compute_ordering(generate(GraphKind::complete, {4}));
  EXPECT_EQ(k4.order, (std::vector<VertexId>{3, 2, 1, 0}));
}

TEST(Degeneracy, AgreesWithOraclesOnSmallCorpus) {
  for (const auto& entry : build_small_corpus(11)) {
    const Graph& g = entry.graph;
    DegeneracyOrdering ord = compute_ordering(g);
    expect_consistent(g, ord);
    EXPECT_EQ(ord.d, degeneracy_bruteforce(g)) << entry.name;
    EXPECT_EQ(ord.d, degeneracy_by_subgraphs(g)) << entry.name;
    EXPECT_TRUE(verify_ordering(g, ord, ord.d)) << entry.name;
    if (ord.d > 0) EXPECT_FALSE(verify_ordering(g, ord, ord.d - 1));
  }
}

TEST(Degeneracy, OrderingInvariantsOnLargerGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = generate(GraphKind::gnp, {50 + seed * 5, 0.08}, seed);
    DegeneracyOrdering ord = compute_ordering(g);
    expect_consistent(g, ord);
    EXPECT_TRUE(verify_ordering(g, ord, ord.d));
  }
}

TEST(VerifyOrdering, Examples) {
  Graph p3 = generate(GraphKind::path, {3});
  EXPECT_TRUE(verify_ordering(p3, ordering_from_permutation(p3, {2, 1, 0}), 1));
  Graph k3 = generate(GraphKind::complete, {3});
  std::vector<VertexId> perm{0, 1, 2};
  do {
    EXPECT_FALSE(verify_ordering(k3, ordering_from_permutation(k3, perm), 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  Graph empty(4);
  EXPECT_TRUE(verify_ordering(empty, ordering_from_permutation(empty, {3, 0, 2, 1}), 0));
}

TEST(VerifyOrdering, RejectsNonPermutations) {
  Graph p3 = generate(GraphKind::path, {3});
  EXPECT_THROW(ordering_from_permutation(p3, {0, 0, 1}), StructuralError);
  EXPECT_THROW(ordering_from_permutation(p3, {0, 1}), StructuralError);
  DegeneracyOrdering ord = compute_ordering(p3);
  ord.position[0] = 1;
  EXPECT_THROW(verify_ordering(p3, ord, 1), StructuralError);
  ord = compute_ordering(p3);
  ord.order.push_back(3);
  EXPECT_THROW(verify_ordering(p3, ord, 1), StructuralError);
}

TEST(VerifyOrdering, WitnessImpliesDefinition) {
  // Any ordering with left degree <= d forces a vertex of degree <= d in
  // every induced subgraph.
  std::mt19937_64 rng(5);
  for (const auto& entry : build_small_corpus(3)) {
    const Graph& g = entry.graph;
    std::vector<VertexId> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    DegeneracyOrdering ord = ordering_from_permutation(g, perm);
    ASSERT_TRUE(verify_ordering(g, ord, ord.d));
    const std::size_t n = g.num_vertices();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::size_t min_deg = n;
      for (VertexId v = 0; v < n; ++v) {
        if (!(mask >> v & 1U)) continue;
        std::size_t deg = 0;
        for (VertexId w : g.neighbors(v)) deg += mask >> w & 1U;
        min_deg = std::min(min_deg, deg);
      }
      EXPECT_LE(min_deg, ord.d) << entry.name;
    }
  }
}

TEST(Degeneracy, MonotoneUnderDeletion) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = generate(GraphKind::gnp, {40, 0.15}, seed);
    const std::size_t d = compute_ordering(g).d;
    auto edges = g.edges();
    if (edges.empty()) continue;
    // Drop a random edge.
    edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
    EXPECT_LE(compute_ordering(Graph::from_edges(40, edges)).d, d);
    // Isolate a random vertex (equivalent to deleting it).
    const VertexId victim = static_cast<VertexId>(rng() % 40);
    std::erase_if(edges, [victim](const Edge& e) {
      return e.u == victim || e.v == victim;
    });
    EXPECT_LE(compute_ordering(Graph::from_edges(40, edges)).d, d);
  }
}

}  // namespace
}  // namespace bootperc
