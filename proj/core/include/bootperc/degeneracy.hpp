#pragma once

#include <cstddef>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

/// A left-to-right vertex ordering together with the number of neighbours
/// each vertex has to its left. `d` is the largest such count, so the
/// ordering witnesses that the graph is d-degenerate.
struct DegeneracyOrdering {
  std::vector<VertexId> order;           // order[i] = vertex at position i
  std::vector<std::size_t> position;     // inverse of order
  std::vector<std::size_t> left_degree;  // indexed by vertex
  std::size_t d = 0;
};

/// Smallest-last ordering: repeatedly removes a vertex of minimum remaining
/// degree (smallest id on ties) and places it in the rightmost free
/// position. The returned `d` is the degeneracy of `g`.
DegeneracyOrdering compute_ordering(const Graph& g);

/// Wraps an arbitrary permutation, filling in positions and left degrees.
/// Throws StructuralError if `order` is not a permutation of [0, n).
DegeneracyOrdering ordering_from_permutation(const Graph& g,
                                             std::vector<VertexId> order);

/// True iff every vertex has at most `d_claim` neighbours at smaller
/// positions. Left degrees are recounted from `g`; the cached fields of
/// `ord` are not trusted. Throws StructuralError if `ord.order` and
/// `ord.position` are not mutually inverse permutations of [0, n).
bool verify_ordering(const Graph& g, const DegeneracyOrdering& ord,
                     std::size_t d_claim);

inline constexpr std::size_t kBruteforceDegeneracyMaxVertices = 9;

/// Minimum over all n! orderings of the maximum left degree. Test oracle
/// only; throws RefusalError for n > 9.
std::size_t degeneracy_bruteforce(const Graph& g);

}  // namespace bootperc
