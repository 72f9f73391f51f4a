#include "bootperc/generators.hpp"

#include <queue>
#include <random>
#include <string>
#include <vector>

#include "bootperc/errors.hpp"

namespace bootperc {

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::complete: return "complete";
    case GraphKind::path: return "path";
    case GraphKind::cycle: return "cycle";
    case GraphKind::star: return "star";
    case GraphKind::gnp: return "gnp";
    case GraphKind::random_tree: return "random_tree";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  for (GraphKind k : {GraphKind::complete, GraphKind::path, GraphKind::cycle,
                      GraphKind::star, GraphKind::gnp, GraphKind::random_tree}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Graph tree_from_pruefer(std::size_t n, std::span<const VertexId> sequence) {
  if (n < 2) throw ParameterError("Prüfer decoding needs n >= 2");
  if (sequence.size() != n - 2) {
    throw ParameterError("Prüfer sequence for n = " + std::to_string(n) +
                         " must have length " + std::to_string(n - 2));
  }
  std::vector<std::size_t> remaining(n, 1);
  for (VertexId v : sequence) {
    if (v >= n) throw ParameterError("Prüfer entry out of range");
    ++remaining[v];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (remaining[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (VertexId v : sequence) {
    VertexId leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, v});
    if (--remaining[v] == 1) leaves.push(v);
  }
  VertexId a = leaves.top();
  leaves.pop();
  VertexId b = leaves.top();
  edges.push_back({a, b});
  return Graph::from_edges(n, edges);
}

Graph generate(GraphKind kind, const GeneratorParams& params,
               std::uint64_t seed) {
  const std::size_t n = params.n;
  if (n == 0) throw ParameterError("generators need n >= 1");
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::complete:
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
      break;
    case GraphKind::path:
      for (VertexId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
      break;
    case GraphKind::cycle:
      if (n < 3) throw ParameterError("cycle needs n >= 3");
      for (VertexId u = 0; u < n; ++u)
        edges.push_back({u, static_cast<VertexId>((u + 1) % n)});
      break;
    case GraphKind::star:
      for (VertexId v = 1; v < n; ++v) edges.push_back({0, v});
      break;
    case GraphKind::gnp: {
      if (!(params.p >= 0.0 && params.p <= 1.0)) {
        throw ParameterError("gnp needs p in [0, 1]");
      }
      std::mt19937_64 rng(seed);
      std::bernoulli_distribution coin(params.p);
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
          if (coin(rng)) edges.push_back({u, v});
      break;
    }
    case GraphKind::random_tree: {
      if (n == 1) return Graph(1);
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
      std::vector<VertexId> sequence(n - 2);
      for (auto& x : sequence) x = pick(rng);
      return tree_from_pruefer(n, sequence);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace bootperc
