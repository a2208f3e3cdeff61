#pragma once

// Internal pruned lattice-point scan shared by the simplex and classification
// code. Not installed.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "latfree/simplex.hpp"

namespace latfree::detail {

enum class Rel { le, lt, eq };

/// Componentwise min/max over a nonempty point set.
std::pair<std::vector<Int>, std::vector<Int>> bounding_box(std::span<const Point> pts);

/// Sweep the integer points of the box [lo, hi] in lexicographic order and
/// hand every point satisfying all facet relations to visit. A branch is cut
/// as soon as the fixed prefix plus the extreme achievable contribution of
/// the free coordinates rules a relation out. Returns false iff visit aborted
/// the sweep by returning false. Throws BudgetExceededError when the box
/// holds more than point_budget integer points.
bool scan_box(const std::vector<Int>& lo, const std::vector<Int>& hi,
              const std::vector<FacetIneq>& facets, const std::vector<Rel>& rels,
              std::uint64_t point_budget, const std::function<bool(const Point&)>& visit);

} // namespace latfree::detail
