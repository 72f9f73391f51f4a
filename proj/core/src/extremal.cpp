#include "bootperc/extremal.hpp"

#include <algorithm>
#include <string>

#include "bootperc/degeneracy.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/percolation.hpp"

namespace bootperc {

void validate(const ExtremalParams& p) {
  if (p.d < 1) throw ParameterError("extremal family needs d >= 1");
  if (p.r <= p.d) {
    throw ParameterError("extremal family needs r > d (|I_i| = r - d >= 1)");
  }
  if (p.r < 2) throw ParameterError("extremal family needs r >= 2");
  if (p.k < 1) throw ParameterError("extremal family needs k >= 1");
}

ExtremalInstance build_extremal(const ExtremalParams& p) {
  validate(p);
  const std::size_t n = p.d + p.k * p.r;
  std::vector<Edge> edges;
  edges.reserve(p.k * p.d * p.r);
  VertexSet a0(n);
  for (VertexId h = 0; h < p.d; ++h) a0.insert(h);
  for (std::size_t i = 0; i < p.k; ++i) {
    const auto base = static_cast<VertexId>(p.d + i * p.r);
    const auto u_end = static_cast<VertexId>(base + p.d);
    const auto i_end = static_cast<VertexId>(base + p.r);
    for (VertexId u = base; u < u_end; ++u) {
      for (VertexId h = 0; h < p.d; ++h) edges.push_back({h, u});
      for (VertexId x = u_end; x < i_end; ++x) edges.push_back({u, x});
    }
    for (VertexId x = u_end; x < i_end; ++x) a0.insert(x);
  }
  return {Graph::from_edges(n, edges), std::move(a0)};
}

Rational extremal_ratio(const ExtremalParams& p) {
  validate(p);
  const auto d = static_cast<std::int64_t>(p.d);
  const auto r = static_cast<std::int64_t>(p.r);
  const auto k = static_cast<std::int64_t>(p.k);
  return Rational(k * d, d + k * (r - d));
}

bool CertificationReport::all_passed() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ClauseResult& c) { return c.passed; });
}

CertificationReport evaluate_extremal(const ExtremalParams& p,
                                      const ExtremalInstance& instance) {
  validate(p);
  const Graph& g = instance.graph;
  CertificationReport report;
  report.params = p;
  report.n = g.num_vertices();
  report.m = g.num_edges();
  report.degeneracy = compute_ordering(g).d;

  const PercolationTrace trace = run(g, instance.a0, p.r);
  report.a0_size = trace.a0.size();
  report.af_size = trace.a_f.size();
  report.tau = trace.tau;

  const std::size_t expected_af = p.d + p.k * p.r;
  if (report.a0_size > 0) {
    report.measured_ratio =
        Rational(static_cast<std::int64_t>(report.af_size - report.a0_size),
                 static_cast<std::int64_t>(report.a0_size));
  }

  report.clauses.push_back(
      {"degeneracy", report.degeneracy == p.d,
       "degeneracy " + std::to_string(report.degeneracy) + ", expected " +
           std::to_string(p.d)});
  report.clauses.push_back(
      {"full-infection",
       report.af_size == report.n && report.af_size == expected_af,
       "|A_f| = " + std::to_string(report.af_size) + ", n = " +
           std::to_string(report.n) + ", expected d + kr = " +
           std::to_string(expected_af)});
  const Rational expected_ratio = extremal_ratio(p);
  report.clauses.push_back(
      {"ratio", report.a0_size > 0 && report.measured_ratio == expected_ratio,
       "measured " + std::to_string(report.measured_ratio.numerator()) + "/" +
           std::to_string(report.measured_ratio.denominator()) +
           ", expected " + std::to_string(expected_ratio.numerator()) + "/" +
           std::to_string(expected_ratio.denominator())});
  report.clauses.push_back({"one-round", report.tau == 1,
                            "tau = " + std::to_string(report.tau)});
  return report;
}

CertificationReport certify_extremal(const ExtremalParams& p) {
  CertificationReport report = evaluate_extremal(p, build_extremal(p));
  for (const ClauseResult& clause : report.clauses) {
    if (!clause.passed) throw CertificationFailure(clause.name, clause.detail);
  }
  return report;
}

bool meets_sharpness(std::size_t a0_size, std::size_t af_size, std::size_t d,
                     std::size_t r, const Rational& epsilon) {
  if (r <= d) throw NotApplicableError("sharpness needs r > d");
  // |A_f| (r - d) >= (1 - eps) r |A_0|
  const Rational lhs(static_cast<std::int64_t>(af_size) *
                     static_cast<std::int64_t>(r - d));
  const Rational rhs = (Rational(1) - epsilon) *
                       Rational(static_cast<std::int64_t>(r * a0_size));
  return lhs >= rhs;
}

}  // namespace bootperc
