#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "bootperc/graph.hpp"

namespace bootperc {

/// Each vertex independently with probability p.
struct Bernoulli {
  double p;
};

/// Uniform over all k-subsets.
struct FixedSize {
  std::size_t k;
};

using SamplingMode = std::variant<Bernoulli, FixedSize>;

/// Draws an initially infected set. Deterministic in the seed.
/// Throws ParameterError for p outside [0, 1] or k > n.
VertexSet sample_a0(const Graph& g, const SamplingMode& mode,
                    std::uint64_t seed);

}  // namespace bootperc
