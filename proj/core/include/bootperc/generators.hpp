#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "bootperc/graph.hpp"

namespace bootperc {

enum class GraphKind { complete, path, cycle, star, gnp, random_tree };

std::string_view to_string(GraphKind kind);
std::optional<GraphKind> parse_graph_kind(std::string_view name);

struct GeneratorParams {
  std::size_t n = 0;
  /// Edge probability, only read by GraphKind::gnp.
  double p = 0.0;
};

/// Deterministic in (kind, params, seed). The seed is ignored by the
/// non-random kinds. Star has centre 0. Throws ParameterError for n == 0,
/// cycles with n < 3 and p outside [0, 1].
Graph generate(GraphKind kind, const GeneratorParams& params,
               std::uint64_t seed = 0);

/// Decodes a Prüfer sequence of length n - 2 over [0, n) into the labelled
/// tree on n vertices. `n` must be >= 2.
Graph tree_from_pruefer(std::size_t n, std::span<const VertexId> sequence);

}  // namespace bootperc
