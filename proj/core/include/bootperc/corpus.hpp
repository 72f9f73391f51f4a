#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

struct CorpusEntry {
  std::string name;
  Graph graph;
};

/// 500+ graphs: G(n, p) for n in {20, 30, ..., 200} and p in
/// {0.02, 0.05, 0.1}, random trees with n <= 200, cycles and stars.
std::vector<CorpusEntry> build_theorem_corpus(std::uint64_t seed);

/// 200 graphs on at most 8 vertices, for the brute-force oracles.
std::vector<CorpusEntry> build_small_corpus(std::uint64_t seed);

/// Derives an independent per-item seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct CorpusCheckOptions {
  /// Thresholds r = d + 1, ..., d + extra_thresholds.
  std::size_t extra_thresholds = 4;
  /// Minimal-set search for the lower bound on percolating sets; graphs
  /// with more free vertices than this are skipped. 0 disables it.
  std::size_t minperc_budget = 16;
  unsigned threads = 1;
};

struct CorpusFailure {
  std::size_t graph_index;
  std::string graph;
  std::string check;
  std::string detail;
};

struct CorpusSummary {
  std::size_t graphs = 0;
  std::size_t runs = 0;
  std::size_t theorem_violations = 0;
  std::size_t claim_violations = 0;
  std::size_t psi0_violations = 0;
  std::size_t runtime_violations = 0;
  std::size_t forest_checked = 0;
  std::size_t forest_violations = 0;
  std::size_t corollary1_checked = 0;
  std::size_t corollary1_violations = 0;
  std::vector<CorpusFailure> failures;

  bool ok() const {
    return theorem_violations == 0 && claim_violations == 0 &&
           psi0_violations == 0 && runtime_violations == 0 &&
           forest_violations == 0 && corollary1_violations == 0;
  }
};

/// Checks the size bound, the potential decrement, Ψ_0 <= d|A_0|, the
/// running-time bound, the forest bound on trees and the percolating-set
/// lower bound on every graph, for each r in d+1..d+extra and A_0 drawn
/// four ways (Bernoulli 0.1 and 0.3, fixed sizes n/20 and n/5). Work is
/// split across threads; results are merged by graph index so the summary
/// does not depend on the thread count.
CorpusSummary run_corpus_check(const std::vector<CorpusEntry>& corpus,
                               std::uint64_t seed,
                               const CorpusCheckOptions& options = {});

}  // namespace bootperc
