#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

struct Infection {
  VertexId vertex;
  std::size_t round;  // >= 1
};

/// Complete record of one synchronous r-neighbour bootstrap run.
struct PercolationTrace {
  std::size_t r = 0;
  VertexSet a0;
  /// rounds[t - 1] holds the vertices newly infected in round t, ascending.
  /// Only nonempty rounds are stored.
  std::vector<std::vector<VertexId>> rounds;
  /// A_f \ A_0 serialized round by round, ascending id inside a round.
  std::vector<Infection> infection_order;
  VertexSet a_f;
  /// Index of the last round that infected something; 0 if none did.
  std::size_t tau = 0;
};

/// Runs the process A_t = A_{t-1} ∪ {v : |N(v) ∩ A_{t-1}| >= r} to its
/// fixpoint in O(n + m). Throws ParameterError for r < 1 or when `a0`
/// is over a different vertex count than `g`.
PercolationTrace run(const Graph& g, const VertexSet& a0, std::size_t r);

/// run(g, a0, r).a_f == V.
bool percolates(const Graph& g, const VertexSet& a0, std::size_t r);

/// Percolates, and no set obtained by dropping one vertex of `a0` does.
/// Single removals suffice since the final set is monotone in A_0.
bool is_minimal_percolating(const Graph& g, const VertexSet& a0,
                            std::size_t r);

/// Reusable closure evaluator for search loops that test many seed sets on
/// one graph. Keeps its scratch buffers between calls.
class PercolationEngine {
 public:
  PercolationEngine(const Graph& g, std::size_t r);

  /// |A_f| for the given seeds (duplicates allowed).
  std::size_t final_size(std::span<const VertexId> seeds);

  bool percolates(std::span<const VertexId> seeds) {
    return final_size(seeds) == graph_->num_vertices();
  }

 private:
  const Graph* graph_;
  std::size_t r_;
  std::vector<std::size_t> hits_;
  std::vector<std::uint8_t> infected_;
  std::vector<VertexId> queue_;
};

}  // namespace bootperc
