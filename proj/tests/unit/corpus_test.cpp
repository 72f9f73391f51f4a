#include <gtest/gtest.h>

#include "bootperc/corpus.hpp"

namespace bootperc {
namespace {

TEST(Corpus, Composition) {
  auto corpus = build_theorem_corpus(1);
  EXPECT_GE(corpus.size(), 500u);
  std::size_t gnp = 0, trees = 0, cycles = 0, stars = 0;
  for (const auto& e : corpus) {
    EXPECT_LE(e.graph.num_vertices(), 200u);
    gnp += e.name.starts_with("gnp");
    trees += e.name.starts_with("random_tree");
    cycles += e.name.starts_with("cycle");
    stars += e.name.starts_with("star");
    if (e.name.starts_with("random_tree")) {
      EXPECT_TRUE(e.graph.is_tree());
    }
  }
  EXPECT_GT(gnp, 0u);
  EXPECT_GT(trees, 0u);
  EXPECT_GT(cycles, 0u);
  EXPECT_GT(stars, 0u);
}

TEST(Corpus, SmallCorpus) {
  auto small = build_small_corpus(1);
  EXPECT_EQ(small.size(), 200u);
  for (const auto& e : small) EXPECT_LE(e.graph.num_vertices(), 8u);
}

TEST(Corpus, DeterministicInSeed) {
  auto a = build_theorem_corpus(4);
  auto b = build_theorem_corpus(4);
  auto c = build_theorem_corpus(5);
  ASSERT_EQ(a.size(), b.size());
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].graph, b[i].graph);
    any_diff = any_diff || !(a[i].graph == c[i].graph);
  }
  EXPECT_TRUE(any_diff);
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
  EXPECT_NE(mix_seed(1, 0), mix_seed(2, 0));
}

TEST(Corpus, CheckIsThreadCountIndependent) {
  auto corpus = build_small_corpus(6);
  CorpusCheckOptions one{.extra_thresholds = 3, .minperc_budget = 8, .threads = 1};
  CorpusCheckOptions four = one;
  four.threads = 4;
  CorpusSummary a = run_corpus_check(corpus, 6, one);
  CorpusSummary b = run_corpus_check(corpus, 6, four);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.runs, b.runs);
  EXPECT_EQ(a.runs, 200u * 3 * 4);
  EXPECT_EQ(a.corollary1_checked, b.corollary1_checked);
  EXPECT_EQ(a.forest_checked, b.forest_checked);
  EXPECT_GT(a.corollary1_checked, 0u);
  EXPECT_GT(a.forest_checked, 0u);
}

}  // namespace
}  // namespace bootperc
