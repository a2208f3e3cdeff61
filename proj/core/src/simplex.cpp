#include "latfree/simplex.hpp"

#include <numeric>
#include <string>

#include "latfree/errors.hpp"
#include "scan.hpp"

namespace latfree {

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const int d = static_cast<int>(vertices_.size()) - 1;
  if (d < 2) throw InvalidInputError("simplex needs at least 3 vertices (dimension >= 2)");
  for (const Point& v : vertices_)
    if (static_cast<int>(v.size()) != d)
      throw InvalidInputError("simplex vertex length does not match dimension " + std::to_string(d));
  if (det(edge_matrix(0)) == 0) throw InvalidInputError("degenerate simplex: vertices are affinely dependent");
}

IntMatrix Simplex::edge_matrix(int base) const {
  const int d = dim();
  if (base < 0 || base > d) throw UsageError("edge_matrix: base vertex index out of range");
  IntMatrix e(d, d);
  int col = 0;
  for (int i = 0; i <= d; ++i) {
    if (i == base) continue;
    for (int r = 0; r < d; ++r) e(r, col) = checked_sub(vertices_[i][r], vertices_[base][r]);
    ++col;
  }
  return e;
}

Simplex Simplex::axis(const std::vector<Int>& lambdas) {
  const int d = static_cast<int>(lambdas.size());
  std::vector<Point> verts(static_cast<std::size_t>(d) + 1, Point(d, 0));
  for (int j = 0; j < d; ++j) verts[static_cast<std::size_t>(j) + 1][j] = lambdas[j];
  return Simplex(std::move(verts));
}

Simplex Simplex::unit(int dim) { return axis(std::vector<Int>(static_cast<std::size_t>(dim), 1)); }

Simplex transform(const Simplex& s, const IntMatrix& m, const Point& shift) {
  const int d = s.dim();
  if (!m.square() || m.rows() != d || static_cast<int>(shift.size()) != d)
    throw UsageError("transform: dimension mismatch");
  std::vector<Point> verts;
  verts.reserve(s.vertices().size());
  for (const Point& v : s.vertices()) {
    Point w = m * v;
    for (int j = 0; j < d; ++j) w[j] = checked_add(w[j], shift[j]);
    verts.push_back(std::move(w));
  }
  return Simplex(std::move(verts));
}

namespace {

// Generalized cross product: integer normal of the hyperplane spanned by the
// rows of the (d-1) x d difference matrix.
std::vector<Int> hyperplane_normal(const IntMatrix& diffs) {
  const int d = diffs.cols();
  std::vector<Int> n(static_cast<std::size_t>(d), 0);
  for (int j = 0; j < d; ++j) {
    IntMatrix minor(d - 1, d - 1);
    for (int r = 0; r < d - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == j) continue;
        minor(r, cc++) = diffs(r, c);
      }
    }
    Int m = det(minor);
    n[static_cast<std::size_t>(j)] = (j % 2 == 0) ? m : checked_neg(m);
  }
  return n;
}

Int dot(const std::vector<Int>& a, const Point& b) {
  Int s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s = checked_add(s, checked_mul(a[j], b[j]));
  return s;
}

} // namespace

std::vector<FacetIneq> facets(const Simplex& s) {
  const int d = s.dim();
  std::vector<FacetIneq> out;
  out.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    // Facet through every vertex except k.
    std::vector<const Point*> pts;
    for (int i = 0; i <= d; ++i)
      if (i != k) pts.push_back(&s.vertex(i));
    IntMatrix diffs(d - 1, d);
    for (int r = 1; r < d; ++r)
      for (int c = 0; c < d; ++c) diffs(r - 1, c) = checked_sub((*pts[r])[c], (*pts[0])[c]);
    std::vector<Int> n = hyperplane_normal(diffs);
    Int rhs = dot(n, *pts[0]);
    Int off = dot(n, s.vertex(k));
    if (off == rhs) throw InvalidInputError("degenerate simplex: facet contains its opposite vertex");
    if (off > rhs) {
      for (Int& v : n) v = checked_neg(v);
      rhs = checked_neg(rhs);
    }
    Int g = 0;
    for (Int v : n) g = gcd_nonneg(g, v);
    for (Int& v : n) v /= g;
    rhs /= g; // g divides n*x for any integer x, in particular rhs
    out.push_back(FacetIneq{std::move(n), rhs, k});
  }
  return out;
}

std::vector<Point> lattice_points(const Simplex& s, Region region, std::uint64_t point_budget) {
  auto [lo, hi] = detail::bounding_box(s.vertices());
  std::vector<FacetIneq> fs = facets(s);
  std::vector<detail::Rel> rels(fs.size(),
                                region == Region::interior ? detail::Rel::lt : detail::Rel::le);
  std::vector<Point> pts;
  detail::scan_box(lo, hi, fs, rels, point_budget, [&](const Point& p) {
    pts.push_back(p);
    return true;
  });
  return pts;
}

std::vector<Point> facet_relint_points(const Simplex& s, int facet_index,
                                       std::uint64_t point_budget) {
  const int d = s.dim();
  if (facet_index < 0 || facet_index > d) throw UsageError("facet_relint_points: facet index out of range");
  std::vector<FacetIneq> fs = facets(s);
  std::vector<detail::Rel> rels(fs.size(), detail::Rel::lt);
  rels[static_cast<std::size_t>(facet_index)] = detail::Rel::eq;
  std::vector<Point> facet_verts;
  facet_verts.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i <= d; ++i)
    if (i != facet_index) facet_verts.push_back(s.vertex(i));
  auto [lo, hi] = detail::bounding_box(facet_verts);
  std::vector<Point> pts;
  detail::scan_box(lo, hi, fs, rels, point_budget, [&](const Point& p) {
    pts.push_back(p);
    return true;
  });
  return pts;
}

} // namespace latfree
