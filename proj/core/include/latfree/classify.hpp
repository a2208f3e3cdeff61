#pragma once

#include <optional>
#include <vector>

#include "latfree/simplex.hpp"

namespace latfree {

/// Per-facet summary of the integer points in the facet's relative interior:
/// how many there are and, when at least one exists, the rank of the lattice
/// spanned by their differences from the lexicographically first one.
/// sublattice_rank is empty exactly when the facet has no such point.
struct FacetLatticeReport {
  struct Entry {
    std::uint64_t interior_point_count = 0;
    std::optional<int> sublattice_rank;
  };
  std::vector<Entry> facets; // ordered by opposite vertex index
};

/// No integer point in the topological interior.
bool is_lattice_free(const Simplex& s, std::uint64_t point_budget = kDefaultPointBudget);

/// Lattice-free and every facet carries an integer point in its relative
/// interior. For lattice-free bodies the facet criterion characterizes
/// maximality with respect to inclusion, so this is the operative test.
bool is_maximal_lattice_free(const Simplex& s, std::uint64_t point_budget = kDefaultPointBudget);

FacetLatticeReport facet_lattice_report(const Simplex& s,
                                        std::uint64_t point_budget = kDefaultPointBudget);

/// At most one facet has a relative-interior point lattice of full rank d-1.
/// Meaningful for maximal lattice-free simplices.
bool observation_holds(const Simplex& s, std::uint64_t point_budget = kDefaultPointBudget);

} // namespace latfree
