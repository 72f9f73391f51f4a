#include "bootperc/bounds.hpp"

#include <string>

#include "bootperc/degeneracy.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/percolation.hpp"

namespace bootperc {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

Verdict evaluate_theorem(std::size_t a0_size, std::size_t af_size,
                         std::size_t r, std::size_t d) {
  if (r <= d) return Verdict::not_applicable;
  const bool lower = a0_size <= af_size;
  const bool upper = (r - d) * af_size <= r * a0_size;
  return lower && upper ? Verdict::holds : Verdict::violated;
}

Verdict evaluate_runtime(std::size_t tau, std::size_t a0_size, std::size_t r,
                         std::size_t d) {
  if (r <= d) return Verdict::not_applicable;
  return (r - d) * tau <= d * a0_size ? Verdict::holds : Verdict::violated;
}

BoundReport check_theorem(const Graph& g, const VertexSet& a0, std::size_t r,
                          std::optional<std::size_t> d_override) {
  const std::size_t degeneracy = compute_ordering(g).d;
  BoundReport report;
  report.d = degeneracy;
  if (d_override) {
    if (*d_override < degeneracy) {
      throw ParameterError("d override " + std::to_string(*d_override) +
                           " is below the degeneracy " +
                           std::to_string(degeneracy));
    }
    report.d = *d_override;
  }
  report.r = r;
  const PercolationTrace trace = run(g, a0, r);
  report.a0_size = trace.a0.size();
  report.af_size = trace.a_f.size();
  report.tau = trace.tau;
  report.theorem =
      evaluate_theorem(report.a0_size, report.af_size, r, report.d);
  report.runtime = evaluate_runtime(report.tau, report.a0_size, r, report.d);
  if (r > report.d) {
    report.bound = Rational(static_cast<std::int64_t>(r * report.a0_size),
                            static_cast<std::int64_t>(r - report.d));
  }
  return report;
}

bool check_runtime(const Graph& g, const VertexSet& a0, std::size_t r) {
  const std::size_t d = compute_ordering(g).d;
  if (r <= d) {
    throw NotApplicableError("running-time bound needs r > d (r = " +
                             std::to_string(r) + ", d = " +
                             std::to_string(d) + ")");
  }
  const PercolationTrace trace = run(g, a0, r);
  return evaluate_runtime(trace.tau, trace.a0.size(), r, d) == Verdict::holds;
}

Rational min_perc_lower_bound(std::size_t n, std::size_t d, std::size_t r) {
  if (r == 0) throw ParameterError("threshold r must be >= 1");
  const auto n64 = static_cast<std::int64_t>(n);
  const auto gap = static_cast<std::int64_t>(r) - static_cast<std::int64_t>(d);
  return Rational(n64 * gap, static_cast<std::int64_t>(r));
}

bool forest_bound_check(std::size_t a0_size, std::size_t af_size,
                        std::size_t r) {
  if (r < 2) throw ParameterError("forest bound needs r >= 2");
  return a0_size <= af_size && (r - 1) * af_size <= r * a0_size;
}

}  // namespace bootperc
