#include "bootperc/potential.hpp"

#include <algorithm>
#include <string>

#include "bootperc/errors.hpp"

namespace bootperc {

namespace {

void check_compatible(const Graph& g, const DegeneracyOrdering& ord,
                      const PercolationTrace& trace) {
  const std::size_t n = g.num_vertices();
  if (ord.order.size() != n || ord.position.size() != n) {
    throw StructuralError("ordering does not cover the graph's vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (ord.order[i] >= n || ord.position[ord.order[i]] != i) {
      throw StructuralError("ordering is not a permutation of [0, n)");
    }
  }
  if (trace.a0.universe_size() != n || trace.a_f.universe_size() != n) {
    throw StructuralError("trace was produced on a different vertex count");
  }
  VertexSet seen = trace.a0;
  for (const Infection& inf : trace.infection_order) {
    if (inf.vertex >= n || !seen.insert(inf.vertex)) {
      throw StructuralError("trace infection order is inconsistent");
    }
  }
  if (!(seen == trace.a_f)) {
    throw StructuralError("trace infection order does not reach A_f");
  }
}

std::int64_t potential_from_scratch(const Graph& g,
                                    const DegeneracyOrdering& ord,
                                    const VertexSet& infected) {
  std::int64_t psi = 0;
  for (VertexId v : infected.members()) {
    for (VertexId w : g.neighbors(v)) {
      if (ord.position[w] < ord.position[v] && !infected.contains(w)) ++psi;
    }
  }
  return psi;
}

void fill_drops(PotentialTrace& pt) {
  pt.drops.clear();
  for (std::size_t i = 1; i < pt.psi.size(); ++i) {
    pt.drops.push_back(pt.psi[i - 1] - pt.psi[i]);
  }
}

}  // namespace

std::optional<std::int64_t> PotentialTrace::min_drop() const {
  if (drops.empty()) return std::nullopt;
  return *std::min_element(drops.begin(), drops.end());
}

PotentialTrace compute_potential_trace(const Graph& g,
                                       const DegeneracyOrdering& ord,
                                       const PercolationTrace& trace) {
  check_compatible(g, ord, trace);
  PotentialTrace pt;
  pt.d_used = ord.d;
  pt.r = trace.r;
  pt.psi.reserve(trace.infection_order.size() + 1);

  VertexSet infected = trace.a0;
  std::int64_t psi = potential_from_scratch(g, ord, infected);
  pt.psi.push_back(psi);
  for (const Infection& inf : trace.infection_order) {
    const VertexId v = inf.vertex;
    const std::size_t pos = ord.position[v];
    for (VertexId w : g.neighbors(v)) {
      if (!infected.contains(w)) {
        if (ord.position[w] < pos) ++psi;  // new uninfected left neighbour
      } else if (ord.position[w] > pos) {
        --psi;  // w was counting v
      }
    }
    infected.insert(v);
    pt.psi.push_back(psi);
  }
  fill_drops(pt);
  return pt;
}

PotentialTrace compute_potential_trace_reference(
    const Graph& g, const DegeneracyOrdering& ord,
    const PercolationTrace& trace) {
  check_compatible(g, ord, trace);
  PotentialTrace pt;
  pt.d_used = ord.d;
  pt.r = trace.r;
  VertexSet infected = trace.a0;
  pt.psi.push_back(potential_from_scratch(g, ord, infected));
  for (const Infection& inf : trace.infection_order) {
    infected.insert(inf.vertex);
    pt.psi.push_back(potential_from_scratch(g, ord, infected));
  }
  fill_drops(pt);
  return pt;
}

bool verify_claim(const PotentialTrace& pt) {
  if (pt.r <= pt.d_used) {
    throw NotApplicableError("decrement claim needs r > d (r = " +
                             std::to_string(pt.r) + ", d = " +
                             std::to_string(pt.d_used) + ")");
  }
  const auto gap = static_cast<std::int64_t>(pt.r - pt.d_used);
  return std::all_of(pt.drops.begin(), pt.drops.end(),
                     [gap](std::int64_t drop) { return drop >= gap; });
}

}  // namespace bootperc
