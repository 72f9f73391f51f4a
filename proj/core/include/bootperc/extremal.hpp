#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bootperc/graph.hpp"
#include "bootperc/rational.hpp"

namespace bootperc {

/// Parameters of the sharpness family: d >= 1, r >= 2, r > d, k >= 1.
struct ExtremalParams {
  std::size_t d = 1;
  std::size_t r = 2;
  std::size_t k = 1;
};

/// Throws ParameterError unless the invariants above hold.
void validate(const ExtremalParams& p);

struct ExtremalInstance {
  Graph graph;
  VertexSet a0;
};

/// Hub set H = {0..d-1}, then k blocks of r vertices. Block i starts at
/// d + i·r: its first d vertices form U_i, the remaining r - d form I_i.
/// Every vertex of H ∪ I_i is joined to every vertex of U_i and nothing
/// else is joined. A_0 = H ∪ I_1 ∪ ... ∪ I_k.
ExtremalInstance build_extremal(const ExtremalParams& p);

/// (|A_f| - |A_0|) / |A_0| = kd / (d + k(r - d)).
Rational extremal_ratio(const ExtremalParams& p);

struct ClauseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificationReport {
  ExtremalParams params;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t degeneracy = 0;
  std::size_t a0_size = 0;
  std::size_t af_size = 0;
  std::size_t tau = 0;
  Rational measured_ratio;
  std::vector<ClauseResult> clauses;

  bool all_passed() const;
};

/// Checks a (possibly tampered) instance against the family's claims:
///   degeneracy     compute_ordering(g).d == d
///   full-infection A_f == V and |A_f| == d + kr
///   ratio          measured ratio == extremal_ratio(p)
///   one-round      tau == 1
/// Never throws on a failing clause; see certify_extremal.
CertificationReport evaluate_extremal(const ExtremalParams& p,
                                      const ExtremalInstance& instance);

/// Builds and evaluates the instance; throws CertificationFailure naming
/// the first failing clause.
CertificationReport certify_extremal(const ExtremalParams& p);

/// |A_f| >= (1 - eps)(1 + d/(r - d))|A_0|, compared exactly.
bool meets_sharpness(std::size_t a0_size, std::size_t af_size, std::size_t d,
                     std::size_t r, const Rational& epsilon);

}  // namespace bootperc
