#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bootperc/degeneracy.hpp"
#include "bootperc/graph.hpp"
#include "bootperc/percolation.hpp"

namespace bootperc {

/// Ψ along the serialized infection order of a run.
///
/// Ψ is the sum, over the currently infected vertices, of the number of
/// uninfected neighbours to their left. An uninfected vertex is counted
/// once per infected right neighbour.
struct PotentialTrace {
  std::vector<std::int64_t> psi;    // psi[i] after the i-th infection
  std::vector<std::int64_t> drops;  // drops[i - 1] = psi[i - 1] - psi[i]
  std::size_t d_used = 0;
  std::size_t r = 0;

  std::optional<std::int64_t> min_drop() const;
};

/// Incremental evaluation: each infection adds its uninfected left
/// neighbours and removes one unit per infected right neighbour.
/// Throws StructuralError if the ordering or trace does not belong to `g`.
PotentialTrace compute_potential_trace(const Graph& g,
                                       const DegeneracyOrdering& ord,
                                       const PercolationTrace& trace);

/// Same result, recounting Ψ from scratch after every infection. O(K·m);
/// kept as an independent check of the incremental path.
PotentialTrace compute_potential_trace_reference(
    const Graph& g, const DegeneracyOrdering& ord,
    const PercolationTrace& trace);

/// Every drop is at least r - d_used. Throws NotApplicableError when
/// r <= d_used.
bool verify_claim(const PotentialTrace& pt);

}  // namespace bootperc
