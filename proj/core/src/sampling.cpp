#include "bootperc/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bootperc/errors.hpp"

namespace bootperc {

VertexSet sample_a0(const Graph& g, const SamplingMode& mode,
                    std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  std::mt19937_64 rng(seed);
  VertexSet out(n);
  if (const auto* b = std::get_if<Bernoulli>(&mode)) {
    if (!(b->p >= 0.0 && b->p <= 1.0)) {
      throw ParameterError("Bernoulli sampling needs p in [0, 1]");
    }
    std::bernoulli_distribution coin(b->p);
    for (VertexId v = 0; v < n; ++v) {
      if (coin(rng)) out.insert(v);
    }
    return out;
  }
  const std::size_t k = std::get<FixedSize>(mode).k;
  if (k > n) {
    throw ParameterError("cannot sample " + std::to_string(k) +
                         " vertices from " + std::to_string(n));
  }
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  std::vector<VertexId> chosen;
  chosen.reserve(k);
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), k, rng);
  for (VertexId v : chosen) out.insert(v);
  return out;
}

}  // namespace bootperc
