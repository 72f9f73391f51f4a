#include "bootperc/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "bootperc/bounds.hpp"
#include "bootperc/degeneracy.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/generators.hpp"
#include "bootperc/minperc.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/potential.hpp"
#include "bootperc/sampling.hpp"

namespace bootperc {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::string label(GraphKind kind, std::size_t n, double p = -1.0) {
  std::string s(to_string(kind));
  s += "(n=" + std::to_string(n);
  if (p >= 0.0) {
    s += ",p=" + std::to_string(p);
    s.erase(s.find_last_not_of('0') + 1);
  }
  return s + ")";
}

void add(std::vector<CorpusEntry>& out, GraphKind kind, std::size_t n,
         double p, std::uint64_t seed) {
  const bool random = kind == GraphKind::gnp || kind == GraphKind::random_tree;
  out.push_back({label(kind, n, kind == GraphKind::gnp ? p : -1.0) +
                     (random ? "#" + std::to_string(out.size()) : ""),
                 generate(kind, {n, p}, mix_seed(seed, out.size()))});
}

}  // namespace

std::vector<CorpusEntry> build_theorem_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 20; n <= 200; n += 10) {
    for (double p : {0.02, 0.05, 0.1}) {
      for (int rep = 0; rep < 5; ++rep) add(out, GraphKind::gnp, n, p, seed);
    }
  }
  std::mt19937_64 rng(mix_seed(seed, 0xC0FFEE));
  std::uniform_int_distribution<std::size_t> tree_size(2, 200);
  for (int i = 0; i < 120; ++i) {
    add(out, GraphKind::random_tree, tree_size(rng), 0.0, seed);
  }
  for (std::size_t n = 3; n <= 200; n += 5) add(out, GraphKind::cycle, n, 0.0, seed);
  for (std::size_t n = 2; n <= 200; n += 5) add(out, GraphKind::star, n, 0.0, seed);
  // Small dense graphs keep the exhaustive percolating-set search in range.
  for (std::size_t n = 8; n <= 16; n += 2) {
    for (double p : {0.2, 0.3, 0.4}) {
      for (int rep = 0; rep < 2; ++rep) add(out, GraphKind::gnp, n, p, seed);
    }
  }
  return out;
}

std::vector<CorpusEntry> build_small_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= 8; ++n) {
    add(out, GraphKind::complete, n, 0.0, seed);
    add(out, GraphKind::path, n, 0.0, seed);
    add(out, GraphKind::star, n, 0.0, seed);
    if (n >= 3) add(out, GraphKind::cycle, n, 0.0, seed);
  }
  std::mt19937_64 rng(mix_seed(seed, 0x5EED));
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int i = 0; i < 40; ++i) add(out, GraphKind::random_tree, size(rng), 0.0, seed);
  const double ps[] = {0.2, 0.4, 0.6, 0.8};
  for (std::size_t i = 0; out.size() < 200; ++i) {
    add(out, GraphKind::gnp, size(rng), ps[i % 4], seed);
  }
  return out;
}

namespace {


void check_one(const CorpusEntry& entry, std::size_t index,
               std::uint64_t seed, const CorpusCheckOptions& options,
               CorpusSummary& s) {
  const Graph& g = entry.graph;
  const std::size_t n = g.num_vertices();
  const DegeneracyOrdering ord = compute_ordering(g);
  const std::size_t d = ord.d;
  const std::uint64_t graph_seed = mix_seed(seed, index);
  auto fail = [&](const char* check, std::string detail) {
    s.failures.push_back({index, entry.name, check, std::move(detail)});
  };

  const SamplingMode modes[] = {Bernoulli{0.1}, Bernoulli{0.3},
                                FixedSize{std::max<std::size_t>(1, n / 20)},
                                FixedSize{std::max<std::size_t>(1, n / 5)}};
  for (std::size_t r = d + 1; r <= d + options.extra_thresholds; ++r) {
    for (std::size_t m = 0; m < std::size(modes); ++m) {
      const VertexSet a0 =
          sample_a0(g, modes[m], mix_seed(graph_seed, r * 8 + m));
      const PercolationTrace trace = run(g, a0, r);
      const std::size_t a0_size = a0.size();
      const std::size_t af_size = trace.a_f.size();
      const std::string where = "r=" + std::to_string(r) + " d=" +
                                std::to_string(d) + " |A0|=" +
                                std::to_string(a0_size) + " |Af|=" +
                                std::to_string(af_size);
      ++s.runs;

      if (evaluate_theorem(a0_size, af_size, r, d) != Verdict::holds) {
        ++s.theorem_violations;
        fail("theorem", where);
      }
      if (evaluate_runtime(trace.tau, a0_size, r, d) != Verdict::holds) {
        ++s.runtime_violations;
        fail("runtime", where + " tau=" + std::to_string(trace.tau));
      }

      const PotentialTrace pt = compute_potential_trace(g, ord, trace);
      const std::int64_t psi0 = pt.psi.front();
      const auto gap = static_cast<std::int64_t>(r - d);
      const auto infected = static_cast<std::int64_t>(af_size - a0_size);
      if (!verify_claim(pt) || gap * infected > psi0 || pt.psi.back() < 0) {
        ++s.claim_violations;
        fail("claim", where);
      }
      if (psi0 > static_cast<std::int64_t>(d * a0_size)) {
        ++s.psi0_violations;
        fail("psi0", where + " psi0=" + std::to_string(psi0));
      }
      if (d <= 1 && r >= 2) {
        ++s.forest_checked;
        if (!forest_bound_check(a0_size, af_size, r)) {
          ++s.forest_violations;
          fail("forest", where);
        }
      }
    }

    if (options.minperc_budget > 0) {
      try {
        const MinPercReport mp =
            smallest_percolating_set(g, r, {.budget = options.minperc_budget});
        ++s.corollary1_checked;
        if (r * mp.smallest_size < n * (r - d)) {
          ++s.corollary1_violations;
          fail("corollary1", "r=" + std::to_string(r) + " |S|=" +
                                 std::to_string(mp.smallest_size));
        }
      } catch (const BudgetExceeded&) {
      }
    }
  }
}

}  // namespace

CorpusSummary run_corpus_check(const std::vector<CorpusEntry>& corpus,
                               std::uint64_t seed,
                               const CorpusCheckOptions& options) {
  std::vector<CorpusSummary> per_graph(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      check_one(corpus[i], i, seed, options, per_graph[i]);
    }
  };
  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CorpusSummary total;
  total.graphs = corpus.size();
  for (CorpusSummary& s : per_graph) {
    total.runs += s.runs;
    total.theorem_violations += s.theorem_violations;
    total.claim_violations += s.claim_violations;
    total.psi0_violations += s.psi0_violations;
    total.runtime_violations += s.runtime_violations;
    total.forest_checked += s.forest_checked;
    total.forest_violations += s.forest_violations;
    total.corollary1_checked += s.corollary1_checked;
    total.corollary1_violations += s.corollary1_violations;
    for (auto& f : s.failures) total.failures.push_back(std::move(f));
  }
  return total;
}

}  // namespace bootperc
