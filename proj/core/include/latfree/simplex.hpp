#pragma once

#include <cstdint>
#include <vector>

#include "latfree/int_matrix.hpp"

namespace latfree {

using Point = std::vector<Int>;

/// Default cap on the number of integer points a bounding-box scan may sweep.
inline constexpr std::uint64_t kDefaultPointBudget = 100'000'000;

/// Integral simplex: d+1 affinely independent integer vertices in dimension
/// d >= 2. Vertex order is preserved as given.
class Simplex {
public:
  explicit Simplex(std::vector<Point> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }

  /// Columns are vertex(i) - vertex(base) for i != base, in increasing i.
  IntMatrix edge_matrix(int base = 0) const;

  /// conv(0, l[0]*e1, ..., l[d-1]*ed).
  static Simplex axis(const std::vector<Int>& lambdas);
  /// conv(0, e1, ..., ed).
  static Simplex unit(int dim);

  friend bool operator==(const Simplex&, const Simplex&) = default;

private:
  std::vector<Point> vertices_;
};

/// Apply x -> m*x + shift to every vertex.
Simplex transform(const Simplex& s, const IntMatrix& m, const Point& shift);

/// One facet of a simplex as a primitive integer inequality normal*x <= rhs.
/// Equality holds exactly on the d vertices other than opposite_vertex, and
/// the opposite vertex satisfies normal*x < rhs strictly.
struct FacetIneq {
  std::vector<Int> normal;
  Int rhs = 0;
  int opposite_vertex = -1;

  friend bool operator==(const FacetIneq&, const FacetIneq&) = default;
};

/// All d+1 facets, ordered by opposite vertex index.
std::vector<FacetIneq> facets(const Simplex& s);

enum class Region { interior, closure };

/// Integer points of the open (interior) or closed (closure) simplex, in
/// lexicographic order. Throws BudgetExceededError if the bounding box of s
/// holds more than point_budget integer points.
std::vector<Point> lattice_points(const Simplex& s, Region region,
                                  std::uint64_t point_budget = kDefaultPointBudget);

/// Integer points in the relative interior of the facet opposite the given
/// vertex index: equality on that facet, strict inequality on all others.
/// The scan is budgeted against the facet's own bounding box.
std::vector<Point> facet_relint_points(const Simplex& s, int facet_index,
                                       std::uint64_t point_budget = kDefaultPointBudget);

} // namespace latfree
