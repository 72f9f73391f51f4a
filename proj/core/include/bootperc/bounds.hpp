#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "bootperc/graph.hpp"
#include "bootperc/rational.hpp"

namespace bootperc {

enum class Verdict { holds, violated, not_applicable };

std::string_view to_string(Verdict v);

/// Outcome of checking |A_0| <= |A_f| <= (1 + d/(r-d))|A_0| and
/// tau <= d/(r-d)·|A_0| on one run. All comparisons are integer
/// cross-multiplications.
struct BoundReport {
  std::size_t d = 0;
  std::size_t r = 0;
  std::size_t a0_size = 0;
  std::size_t af_size = 0;
  std::size_t tau = 0;
  Verdict theorem = Verdict::not_applicable;
  Verdict runtime = Verdict::not_applicable;
  /// r|A_0| / (r - d); empty when r <= d.
  std::optional<Rational> bound;
};

/// Integer forms of the two statements; not_applicable when r <= d.
Verdict evaluate_theorem(std::size_t a0_size, std::size_t af_size,
                         std::size_t r, std::size_t d);
Verdict evaluate_runtime(std::size_t tau, std::size_t a0_size, std::size_t r,
                         std::size_t d);

/// Runs the process and evaluates both bounds with d = degeneracy(g), or
/// with `d_override` when given. The override may only raise d; a value
/// below the degeneracy throws ParameterError. The run happens even when
/// the bounds are not applicable.
BoundReport check_theorem(const Graph& g, const VertexSet& a0, std::size_t r,
                          std::optional<std::size_t> d_override = {});

/// (r - d)·tau <= d·|A_0|. Throws NotApplicableError when r <= d.
bool check_runtime(const Graph& g, const VertexSet& a0, std::size_t r);

/// n(r - d)/r. Non-positive (vacuous) when r <= d. Throws ParameterError
/// for r == 0.
Rational min_perc_lower_bound(std::size_t n, std::size_t d, std::size_t r);

/// |A_0| <= |A_f| and (r - 1)|A_f| <= r|A_0|. Throws ParameterError for
/// r < 2.
bool forest_bound_check(std::size_t a0_size, std::size_t af_size,
                        std::size_t r);

}  // namespace bootperc
