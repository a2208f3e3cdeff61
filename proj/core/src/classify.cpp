#include "latfree/classify.hpp"

#include "latfree/int_matrix.hpp"
#include "scan.hpp"

namespace latfree {

namespace {

bool interior_point_exists(const Simplex& s, std::uint64_t point_budget) {
  auto [lo, hi] = detail::bounding_box(s.vertices());
  std::vector<FacetIneq> fs = facets(s);
  std::vector<detail::Rel> rels(fs.size(), detail::Rel::lt);
  bool found = false;
  detail::scan_box(lo, hi, fs, rels, point_budget, [&](const Point&) {
    found = true;
    return false;
  });
  return found;
}

bool facet_relint_point_exists(const Simplex& s, const std::vector<FacetIneq>& fs, int k,
                               std::uint64_t point_budget) {
  std::vector<detail::Rel> rels(fs.size(), detail::Rel::lt);
  rels[static_cast<std::size_t>(k)] = detail::Rel::eq;
  std::vector<Point> facet_verts;
  for (int i = 0; i <= s.dim(); ++i)
    if (i != k) facet_verts.push_back(s.vertex(i));
  auto [lo, hi] = detail::bounding_box(facet_verts);
  bool found = false;
  detail::scan_box(lo, hi, fs, rels, point_budget, [&](const Point&) {
    found = true;
    return false;
  });
  return found;
}

} // namespace

bool is_lattice_free(const Simplex& s, std::uint64_t point_budget) {
  return !interior_point_exists(s, point_budget);
}

bool is_maximal_lattice_free(const Simplex& s, std::uint64_t point_budget) {
  if (interior_point_exists(s, point_budget)) return false;
  std::vector<FacetIneq> fs = facets(s);
  for (int k = 0; k <= s.dim(); ++k)
    if (!facet_relint_point_exists(s, fs, k, point_budget)) return false;
  return true;
}

FacetLatticeReport facet_lattice_report(const Simplex& s, std::uint64_t point_budget) {
  const int d = s.dim();
  FacetLatticeReport report;
  report.facets.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    std::vector<Point> pts = facet_relint_points(s, k, point_budget);
    FacetLatticeReport::Entry entry;
    entry.interior_point_count = pts.size();
    if (!pts.empty()) {
      // Differences from the lexicographically first point; the scan already
      // yields lexicographic order.
      IntMatrix diffs(static_cast<int>(pts.size()) - 1, d);
      for (std::size_t i = 1; i < pts.size(); ++i)
        for (int j = 0; j < d; ++j)
          diffs(static_cast<int>(i) - 1, j) = checked_sub(pts[i][j], pts[0][j]);
      entry.sublattice_rank = rank(diffs);
    }
    report.facets.push_back(std::move(entry));
  }
  return report;
}

bool observation_holds(const Simplex& s, std::uint64_t point_budget) {
  FacetLatticeReport report = facet_lattice_report(s, point_budget);
  const int d = s.dim();
  int full_rank_facets = 0;
  for (const auto& entry : report.facets)
    if (entry.sublattice_rank && *entry.sublattice_rank == d - 1) ++full_rank_facets;
  return full_rank_facets <= 1;
}

} // namespace latfree
