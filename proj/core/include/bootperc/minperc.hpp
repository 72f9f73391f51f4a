#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bootperc/graph.hpp"
#include "bootperc/rational.hpp"

namespace bootperc {

inline constexpr std::size_t kDefaultFreeVertexBudget = 22;

/// Vertices of degree < r. They can never be infected, so they belong to
/// every percolating set.
std::vector<VertexId> forced_vertices(const Graph& g, std::size_t r);

struct MinPercReport {
  std::size_t r = 0;
  std::size_t smallest_size = 0;
  /// Lexicographically smallest among the minimum-cardinality sets.
  VertexSet witness;
  std::vector<VertexId> forced;
  /// Number of vertices of degree < r (equals forced.size()).
  std::size_t l = 0;
  /// Inclusion-minimal sets found by randomized greedy pruning; distinct,
  /// sorted by size then lexicographically.
  std::vector<VertexSet> minimal_sets_sampled;
  /// ((r-1)n + 1)/r and (rn + l)/(r + 1); only set for trees.
  std::optional<Rational> riedl_lower;
  std::optional<Rational> riedl_upper;
};

struct MinPercOptions {
  std::size_t budget = kDefaultFreeVertexBudget;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Exhaustive search by increasing cardinality over the non-forced
/// vertices. Throws BudgetExceeded when there are more than
/// `options.budget` of them, ParameterError for r < 1.
MinPercReport smallest_percolating_set(const Graph& g, std::size_t r,
                                       const MinPercOptions& options = {});

/// Every inclusion-minimal percolating set, sorted by size then
/// lexicographically. Throws BudgetExceeded like smallest_percolating_set.
std::vector<VertexSet> enumerate_minimal_percolating_sets(
    const Graph& g, std::size_t r,
    std::size_t budget = kDefaultFreeVertexBudget);

/// Distinct inclusion-minimal percolating sets obtained by starting from V
/// and dropping vertices in random order while the rest still percolates.
std::vector<VertexSet> sample_minimal_percolating_sets(const Graph& g,
                                                       std::size_t r,
                                                       std::size_t samples,
                                                       std::uint64_t seed);

/// For a tree with l vertices of degree < r, every inclusion-minimal
/// percolating set S satisfies (r-1)n + 1 <= r|S| and (r+1)|S| <= rn + l.
/// Throws StructuralError if `tree` is not a tree.
bool check_riedl_tree_bounds(const Graph& tree, std::size_t r,
                             std::size_t budget = kDefaultFreeVertexBudget);

}  // namespace bootperc
