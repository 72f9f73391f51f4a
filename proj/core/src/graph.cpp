#include "bootperc/graph.hpp"

#include <algorithm>
#include <string>

#include "bootperc/errors.hpp"

namespace bootperc {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ParameterError("edge {" + std::to_string(e.u) + ", " +
                           std::to_string(e.v) + "} has an endpoint >= " +
                           std::to_string(n));
    }
    if (e.u == e.v) {
      throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  std::size_t total = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    total += list.size();
  }
  g.num_edges_ = total / 2;
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::is_connected() const {
  const std::size_t n = num_vertices();
  if (n == 0) return true;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members)
    : in_(universe, 0) {
  for (VertexId v : members) {
    if (v >= universe) {
      throw ParameterError("vertex " + std::to_string(v) +
                           " outside [0, " + std::to_string(universe) + ")");
    }
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.in_.begin(), s.in_.end(), 1);
  s.count_ = universe;
  return s;
}

bool VertexSet::insert(VertexId v) {
  if (in_[v]) return false;
  in_[v] = 1;
  ++count_;
  return true;
}

bool VertexSet::erase(VertexId v) {
  if (!contains(v)) return false;
  in_[v] = 0;
  --count_;
  return true;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (VertexId v = 0; v < in_.size(); ++v) {
    if (in_[v]) out.push_back(v);
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (VertexId v = 0; v < in_.size(); ++v) {
    if (in_[v] && !other.contains(v)) return false;
  }
  return true;
}

}  // namespace bootperc
