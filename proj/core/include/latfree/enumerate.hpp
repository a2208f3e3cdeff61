#pragma once

#include <cstdint>
#include <vector>

#include "latfree/equivalence.hpp"
#include "latfree/simplex.hpp"

namespace latfree {

/// Hermite-normal-form parameters of a 3D simplex with one vertex at the
/// origin: vertices (a,0,0), (b,c,0), (d,e,f) with a >= 1, c,f >= 2,
/// 0 <= b < c, 0 <= d < f, 0 <= e < f.
struct HnfParams3 {
  Int a, b, c, d, e, f;

  Simplex simplex() const;

  friend bool operator==(const HnfParams3&, const HnfParams3&) = default;
};

/// Axis-aligned simplex conv(0, l1*e1, ..., ld*ed) described by its
/// nondecreasing axis intercepts, each at least 2.
class AxisLambda {
public:
  explicit AxisLambda(std::vector<Int> lambdas);

  const std::vector<Int>& lambdas() const { return lambdas_; }
  int dim() const { return static_cast<int>(lambdas_.size()); }
  Simplex simplex() const { return Simplex::axis(lambdas_); }

  friend bool operator==(const AxisLambda&, const AxisLambda&) = default;

private:
  std::vector<Int> lambdas_;
};

/// Outcome of the bounded 3D search: one entry per equivalence class, sorted
/// by canonical form. The representative is the parameter-wise smallest
/// surviving simplex of the class; multiplicity counts how many raw parameter
/// tuples landed in the class.
struct ClassificationResult {
  struct ClassEntry {
    CanonicalForm form;
    Simplex representative;
    std::uint64_t multiplicity = 0;
  };
  std::vector<ClassEntry> classes;
};

/// Sweep the finite parameter boxes that cover all integral maximal
/// lattice-free simplices in dimension 3, keep the maximal ones, and collapse
/// them into equivalence classes by canonical form. The result does not
/// depend on the number of worker threads.
ClassificationResult enumerate_3d(int jobs = 1);

/// Extremal axis intercepts: 2, then 1 + (product of the previous entries)
/// for the middle positions, and the bare product for the last. The last
/// entry bounds the largest intercept of any maximal axis-aligned simplex.
std::vector<Int> sylvester_bounds(int d);

/// All maximal axis-aligned simplices in dimension d, i.e. all nondecreasing
/// integer vectors with entries >= 2 whose reciprocals sum to exactly 1,
/// in lexicographic order.
std::vector<AxisLambda> enumerate_axis(int d);

/// Analytic maximality test for axis-aligned simplices: the reciprocal sum
/// equals 1 exactly. (Sum >= 1 is lattice-freeness, sum <= 1 makes the
/// slanted facet carry a relative-interior point.)
bool axis_is_maximal(const AxisLambda& lambda);

/// The slanted facet of the axis simplex in primitive form; the remaining
/// facets are the nonnegativity inequalities.
FacetIneq axis_facet(const AxisLambda& lambda);

} // namespace latfree
