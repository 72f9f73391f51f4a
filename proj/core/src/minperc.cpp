#include "bootperc/minperc.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "bootperc/errors.hpp"
#include "bootperc/percolation.hpp"

namespace bootperc {

namespace {

struct SearchSpace {
  std::vector<VertexId> forced;
  std::vector<VertexId> free;
};

SearchSpace split_vertices(const Graph& g, std::size_t r, std::size_t budget) {
  if (r < 1) throw ParameterError("threshold r must be >= 1");
  SearchSpace space;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    (g.degree(v) < r ? space.forced : space.free).push_back(v);
  }
  if (space.free.size() > budget) {
    throw BudgetExceeded(std::to_string(space.free.size()) +
                             " free vertices exceed the budget of " +
                             std::to_string(budget),
                         space.forced);
  }
  return space;
}

bool size_then_lex(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

// Advances `idx` (a strictly increasing k-combination of [0, n)) to its
// lexicographic successor. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<VertexId> forced_vertices(const Graph& g, std::size_t r) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) < r) out.push_back(v);
  }
  return out;
}

MinPercReport smallest_percolating_set(const Graph& g, std::size_t r,
                                       const MinPercOptions& options) {
  const std::size_t n = g.num_vertices();
  SearchSpace space = split_vertices(g, r, options.budget);

  MinPercReport report;
  report.r = r;
  report.forced = space.forced;
  report.l = space.forced.size();

  PercolationEngine engine(g, r);
  std::vector<VertexId> seeds;
  bool found = false;
  // Candidates of one cardinality come out in lexicographic order of their
  // free part, which is also lexicographic order of forced ∪ free part.
  for (std::size_t k = 0; k <= space.free.size() && !found; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do {
      seeds = space.forced;
      for (std::size_t i : idx) seeds.push_back(space.free[i]);
      if (engine.percolates(seeds)) {
        found = true;
        break;
      }
    } while (next_combination(idx, space.free.size()));
  }
  // V itself always percolates, so the loop above always finds a set.
  report.witness = VertexSet(n, seeds);
  report.smallest_size = report.witness.size();

  if (options.samples > 0) {
    report.minimal_sets_sampled =
        sample_minimal_percolating_sets(g, r, options.samples, options.seed);
  }
  if (g.is_tree()) {
    const auto n64 = static_cast<std::int64_t>(n);
    const auto r64 = static_cast<std::int64_t>(r);
    report.riedl_lower = Rational((r64 - 1) * n64 + 1, r64);
    report.riedl_upper =
        Rational(r64 * n64 + static_cast<std::int64_t>(report.l), r64 + 1);
  }
  return report;
}

std::vector<VertexSet> enumerate_minimal_percolating_sets(
    const Graph& g, std::size_t r, std::size_t budget) {
  const std::size_t n = g.num_vertices();
  SearchSpace space = split_vertices(g, r, budget);
  const std::size_t f = space.free.size();
  const std::size_t subsets = std::size_t{1} << f;

  PercolationEngine engine(g, r);
  std::vector<std::uint8_t> perc(subsets, 0);
  std::vector<VertexId> seeds;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    seeds = space.forced;
    for (std::size_t i = 0; i < f; ++i) {
      if (mask >> i & 1U) seeds.push_back(space.free[i]);
    }
    perc[mask] = engine.percolates(seeds) ? 1 : 0;
  }

  // Dropping a forced vertex never leaves a percolating set, so minimality
  // only has to be tested against the free members.
  std::vector<VertexSet> out;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (!perc[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < f && minimal; ++i) {
      if ((mask >> i & 1U) && perc[mask ^ (std::size_t{1} << i)]) {
        minimal = false;
      }
    }
    if (!minimal) continue;
    VertexSet s(n, space.forced);
    for (std::size_t i = 0; i < f; ++i) {
      if (mask >> i & 1U) s.insert(space.free[i]);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::vector<VertexSet> sample_minimal_percolating_sets(const Graph& g,
                                                       std::size_t r,
                                                       std::size_t samples,
                                                       std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  PercolationEngine engine(g, r);
  std::mt19937_64 rng(seed);
  std::set<std::vector<VertexId>> distinct;
  std::vector<VertexId> order(n);
  std::vector<VertexId> current;
  for (std::size_t s = 0; s < samples; ++s) {
    std::iota(order.begin(), order.end(), VertexId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint8_t> keep(n, 1);
    // Greedy removal yields an inclusion-minimal set: a vertex that could
    // not be dropped from a superset cannot be dropped later either.
    for (VertexId v : order) {
      keep[v] = 0;
      current.clear();
      for (VertexId u = 0; u < n; ++u) {
        if (keep[u]) current.push_back(u);
      }
      if (!engine.percolates(current)) keep[v] = 1;
    }
    current.clear();
    for (VertexId u = 0; u < n; ++u) {
      if (keep[u]) current.push_back(u);
    }
    distinct.insert(current);
  }
  std::vector<VertexSet> out;
  for (const auto& members : distinct) out.emplace_back(n, members);
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

bool check_riedl_tree_bounds(const Graph& tree, std::size_t r,
                             std::size_t budget) {
  if (!tree.is_tree()) throw StructuralError("input graph is not a tree");
  const std::size_t n = tree.num_vertices();
  const std::size_t l = forced_vertices(tree, r).size();
  for (const VertexSet& s : enumerate_minimal_percolating_sets(tree, r, budget)) {
    const std::size_t size = s.size();
    if ((r - 1) * n + 1 > r * size) return false;
    if ((r + 1) * size > r * n + l) return false;
  }
  return true;
}

}  // namespace bootperc
