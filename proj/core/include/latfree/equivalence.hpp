#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "latfree/int_matrix.hpp"
#include "latfree/simplex.hpp"

namespace latfree {

/// Complete invariant of unimodular equivalence (unimodular map + integer
/// translation + vertex relabeling): the lexicographically smallest row-HNF
/// over all choices of base vertex and ordering of the remaining vertices.
/// Two simplices are equivalent iff their canonical forms are equal.
struct CanonicalForm {
  int dim = 0;
  IntMatrix hnf;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Simplex& s);

/// Same dimension required (UsageError otherwise).
bool are_equivalent(const Simplex& s, const Simplex& t);

/// Witness of equivalence: s_j = m * t_{sigma(j)} + v for every vertex index
/// j, with |det(m)| = 1.
struct EquivalenceWitness {
  IntMatrix m;
  std::vector<Int> v;
  std::vector<int> sigma;
};

/// Recovers a verified witness when the simplices are equivalent, nothing
/// otherwise. The witness is checked against the defining equations before
/// being returned.
std::optional<EquivalenceWitness> find_witness(const Simplex& s, const Simplex& t);

} // namespace latfree
