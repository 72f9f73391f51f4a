#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bootperc {

/// Dense 0-based vertex index.
using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph stored as sorted adjacency lists.
///
/// Immutable once built. Adjacency is symmetric, contains no self-loops and
/// no repeated neighbours.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Parallel edges are collapsed; a
  /// self-loop or an endpoint >= n throws ParameterError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const noexcept;

  bool has_edge(VertexId u, VertexId v) const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// True iff the graph is connected (the empty graph counts as connected).
  bool is_connected() const;
  bool is_tree() const { return num_vertices() >= 1 && num_edges() + 1 == num_vertices() && is_connected(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// Subset of the vertices of a graph with `universe_size()` vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : in_(universe, 0) {}

  /// Throws ParameterError if a member is >= universe. Duplicates are ignored.
  VertexSet(std::size_t universe, std::span<const VertexId> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe_size() const noexcept { return in_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(VertexId v) const { return v < in_.size() && in_[v] != 0; }

  /// Returns false if `v` was already present.
  bool insert(VertexId v);
  /// Returns false if `v` was absent.
  bool erase(VertexId v);

  /// Members in ascending order.
  std::vector<VertexId> members() const;

  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint8_t> in_;
  std::size_t count_ = 0;
};

}  // namespace bootperc
