#include "bootperc/degeneracy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "bootperc/errors.hpp"

namespace bootperc {

namespace {

using MinHeap =
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>>;

void fill_left_degrees(const Graph& g, DegeneracyOrdering& ord) {
  const std::size_t n = g.num_vertices();
  ord.left_degree.assign(n, 0);
  ord.d = 0;
  for (VertexId v = 0; v < n; ++v) {
    std::size_t count = 0;
    for (VertexId w : g.neighbors(v)) {
      if (ord.position[w] < ord.position[v]) ++count;
    }
    ord.left_degree[v] = count;
    ord.d = std::max(ord.d, count);
  }
}

bool is_inverse_pair(std::span<const VertexId> order,
                     std::span<const std::size_t> position, std::size_t n) {
  if (order.size() != n || position.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != i) return false;
  }
  return true;
}

}  // namespace

DegeneracyOrdering compute_ordering(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DegeneracyOrdering ord;
  ord.order.resize(n);
  ord.position.resize(n);
  if (n == 0) return ord;

  // Bucket per current degree. Each bucket is a min-heap so that ties are
  // broken by smallest id; entries go stale when a vertex's degree drops
  // and are discarded lazily. Every vertex is pushed at most deg + 1 times.
  std::vector<std::size_t> degree(n);
  std::vector<MinHeap> buckets(g.max_degree() + 1);
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    buckets[degree[v]].push(v);
  }
  std::vector<std::uint8_t> removed(n, 0);
  std::size_t current = 0;

  for (std::size_t slot = n; slot-- > 0;) {
    VertexId v = 0;
    for (;;) {
      while (buckets[current].empty()) ++current;
      v = buckets[current].top();
      buckets[current].pop();
      if (!removed[v] && degree[v] == current) break;
    }
    removed[v] = 1;
    ord.order[slot] = v;
    ord.position[v] = slot;
    for (VertexId w : g.neighbors(v)) {
      if (!removed[w]) buckets[--degree[w]].push(w);
    }
    // Removing one vertex lowers the minimum degree by at most one.
    if (current > 0) --current;
  }
  fill_left_degrees(g, ord);
  return ord;
}

DegeneracyOrdering ordering_from_permutation(const Graph& g,
                                             std::vector<VertexId> order) {
  const std::size_t n = g.num_vertices();
  if (order.size() != n) {
    throw StructuralError("ordering has " + std::to_string(order.size()) +
                          " entries for a graph on " + std::to_string(n) +
                          " vertices");
  }
  DegeneracyOrdering ord;
  ord.position.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || ord.position[order[i]] != n) {
      throw StructuralError("ordering is not a permutation of [0, n)");
    }
    ord.position[order[i]] = i;
  }
  ord.order = std::move(order);
  fill_left_degrees(g, ord);
  return ord;
}

bool verify_ordering(const Graph& g, const DegeneracyOrdering& ord,
                     std::size_t d_claim) {
  const std::size_t n = g.num_vertices();
  if (!is_inverse_pair(ord.order, ord.position, n)) {
    throw StructuralError(
        "order and position are not inverse permutations of [0, n)");
  }
  for (VertexId v = 0; v < n; ++v) {
    std::size_t left = 0;
    for (VertexId w : g.neighbors(v)) {
      if (ord.position[w] < ord.position[v]) ++left;
    }
    if (left > d_claim) return false;
  }
  return true;
}

std::size_t degeneracy_bruteforce(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kBruteforceDegeneracyMaxVertices) {
    throw RefusalError("brute-force degeneracy refuses n = " +
                       std::to_string(n) + " > " +
                       std::to_string(kBruteforceDegeneracyMaxVertices));
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::vector<std::size_t> position(n);
  std::size_t best = n == 0 ? 0 : n - 1;
  do {
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < n && worst < best; ++i) {
      std::size_t left = 0;
      for (VertexId w : g.neighbors(order[i])) {
        if (position[w] < i) ++left;
      }
      worst = std::max(worst, left);
    }
    best = std::min(best, worst);
  } while (best > 0 && std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace bootperc
