#include "bootperc/percolation.hpp"

#include <algorithm>
#include <string>

#include "bootperc/errors.hpp"

namespace bootperc {

namespace {

void check_inputs(const Graph& g, const VertexSet& a0, std::size_t r) {
  if (r < 1) throw ParameterError("threshold r must be >= 1");
  if (a0.universe_size() != g.num_vertices()) {
    throw ParameterError("initial set is over " +
                         std::to_string(a0.universe_size()) +
                         " vertices, graph has " +
                         std::to_string(g.num_vertices()));
  }
}

}  // namespace

PercolationTrace run(const Graph& g, const VertexSet& a0, std::size_t r) {
  check_inputs(g, a0, r);
  const std::size_t n = g.num_vertices();

  PercolationTrace trace;
  trace.r = r;
  trace.a0 = a0;
  trace.a_f = a0;

  // hits[v] = number of infected neighbours counted so far. Counting only
  // happens for the frontier of the previous round, so a vertex crossing
  // the threshold while round t is processed belongs to round t + 1.
  std::vector<std::size_t> hits(n, 0);
  std::vector<VertexId> frontier = a0.members();
  std::vector<VertexId> next;
  for (std::size_t round = 1; !frontier.empty(); ++round) {
    next.clear();
    for (VertexId u : frontier) {
      for (VertexId w : g.neighbors(u)) {
        if (!trace.a_f.contains(w) && ++hits[w] == r) next.push_back(w);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    for (VertexId v : next) {
      trace.a_f.insert(v);
      trace.infection_order.push_back({v, round});
    }
    trace.rounds.push_back(next);
    trace.tau = round;
    frontier.swap(next);
  }
  return trace;
}

bool percolates(const Graph& g, const VertexSet& a0, std::size_t r) {
  check_inputs(g, a0, r);
  PercolationEngine engine(g, r);
  return engine.percolates(a0.members());
}

bool is_minimal_percolating(const Graph& g, const VertexSet& a0,
                            std::size_t r) {
  check_inputs(g, a0, r);
  PercolationEngine engine(g, r);
  std::vector<VertexId> members = a0.members();
  if (!engine.percolates(members)) return false;
  std::vector<VertexId> reduced;
  reduced.reserve(members.size());
  for (std::size_t skip = 0; skip < members.size(); ++skip) {
    reduced.clear();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i != skip) reduced.push_back(members[i]);
    }
    if (engine.percolates(reduced)) return false;
  }
  return true;
}

PercolationEngine::PercolationEngine(const Graph& g, std::size_t r)
    : graph_(&g),
      r_(r),
      hits_(g.num_vertices(), 0),
      infected_(g.num_vertices(), 0) {
  if (r < 1) throw ParameterError("threshold r must be >= 1");
  queue_.reserve(g.num_vertices());
}

std::size_t PercolationEngine::final_size(std::span<const VertexId> seeds) {
  // The final set does not depend on the update schedule, so a plain
  // work-list closure gives the same A_f as synchronous rounds.
  queue_.clear();
  for (VertexId v : seeds) {
    if (!infected_[v]) {
      infected_[v] = 1;
      queue_.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    for (VertexId w : graph_->neighbors(queue_[head])) {
      if (!infected_[w] && ++hits_[w] >= r_) {
        infected_[w] = 1;
        queue_.push_back(w);
      }
    }
  }
  const std::size_t size = queue_.size();
  // Reset only what was touched.
  for (VertexId u : queue_) {
    infected_[u] = 0;
    for (VertexId w : graph_->neighbors(u)) hits_[w] = 0;
  }
  return size;
}

}  // namespace bootperc
