#include "latfree/int_matrix.hpp"

#include <cassert>
#include <limits>
#include <ostream>
#include <utility>

#include "latfree/errors.hpp"
#include "wide.hpp"

namespace latfree {

using detail::Wide;

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw UsageError("matrix dimensions must be nonnegative");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<Int>> rows) {
  std::vector<std::vector<Int>> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.emplace_back(row);
  return from_rows(r);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc) throw UsageError("ragged row list");
    for (int j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& cols) {
  int nc = static_cast<int>(cols.size());
  int nr = nc == 0 ? 0 : static_cast<int>(cols.front().size());
  IntMatrix m(nr, nc);
  for (int j = 0; j < nc; ++j) {
    if (static_cast<int>(cols[j].size()) != nr) throw UsageError("ragged column list");
    for (int i = 0; i < nr; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Int> IntMatrix::row(int i) const {
  std::vector<Int> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

std::vector<Int> IntMatrix::col(int j) const {
  std::vector<Int> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Int s = 0;
      for (int k = 0; k < a.cols(); ++k) s = checked_add(s, checked_mul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x) {
  if (a.cols() != static_cast<int>(x.size())) throw UsageError("matrix-vector product: dimensions differ");
  std::vector<Int> y(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    Int s = 0;
    for (int k = 0; k < a.cols(); ++k) s = checked_add(s, checked_mul(a(i, k), x[k]));
    y[i] = s;
  }
  return y;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
  }
  return os << ']';
}

namespace {

// Square working copy in 128-bit entries.
struct WideMatrix {
  int n;
  std::vector<Wide> e;

  explicit WideMatrix(const IntMatrix& m) : n(m.rows()), e(static_cast<std::size_t>(n) * n) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) (*this)(i, j) = m(i, j);
  }
  WideMatrix(int n_, bool ident) : n(n_), e(static_cast<std::size_t>(n_) * n_, 0) {
    if (ident)
      for (int i = 0; i < n; ++i) (*this)(i, i) = 1;
  }
  Wide& operator()(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
  Wide operator()(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

  IntMatrix narrowed() const {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = detail::narrow((*this)(i, j));
    return m;
  }
};

struct WideExtGcd {
  Wide g, p, q;
};

WideExtGcd wide_ext_gcd(Wide x, Wide y) {
  Wide r0 = x, r1 = y;
  Wide p0 = 1, p1 = 0;
  Wide q0 = 0, q1 = 1;
  while (r1 != 0) {
    Wide q = r0 / r1;
    Wide r2 = detail::wide_sub(r0, detail::wide_mul(q, r1));
    Wide p2 = detail::wide_sub(p0, detail::wide_mul(q, p1));
    Wide q2 = detail::wide_sub(q0, detail::wide_mul(q, q1));
    r0 = r1; r1 = r2;
    p0 = p1; p1 = p2;
    q0 = q1; q1 = q2;
  }
  if (r0 < 0) {
    r0 = -r0;
    p0 = -p0;
    q0 = -q0;
  }
  return {r0, p0, q0};
}

// rows (i0, i1) <- (p*row_i0 + q*row_i1, s*row_i0 + t*row_i1) on both
// matrices; the block [[p,q],[s,t]] has determinant +-1.
void combine_rows(WideMatrix& a, WideMatrix& b, int i0, int i1, Wide p, Wide q, Wide s, Wide t) {
  using detail::wide_add;
  using detail::wide_mul;
  for (int j = 0; j < a.n; ++j) {
    Wide x = a(i0, j), y = a(i1, j);
    a(i0, j) = wide_add(wide_mul(p, x), wide_mul(q, y));
    a(i1, j) = wide_add(wide_mul(s, x), wide_mul(t, y));
  }
  for (int j = 0; j < b.n; ++j) {
    Wide x = b(i0, j), y = b(i1, j);
    b(i0, j) = wide_add(wide_mul(p, x), wide_mul(q, y));
    b(i1, j) = wide_add(wide_mul(s, x), wide_mul(t, y));
  }
}

} // namespace

Int det(const IntMatrix& m) {
  if (!m.square()) throw UsageError("det: matrix must be square");
  const int n = m.rows();
  if (n == 0) return 1;
  WideMatrix a(m);
  int sign = 1;
  Wide prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Wide num = detail::wide_sub(detail::wide_mul(a(i, j), a(k, k)),
                                    detail::wide_mul(a(i, k), a(k, j)));
        assert(num % prev == 0); // Bareiss division is exact
        a(i, j) = num / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Wide d = a(n - 1, n - 1);
  return detail::narrow(sign < 0 ? -d : d);
}

bool is_unimodular(const IntMatrix& m) {
  Int d = det(m);
  return d == 1 || d == -1;
}

ExtGcd ext_gcd(Int x, Int y) {
  if (x == 0 && y == 0) return {0, 0, 0};
  WideExtGcd r = wide_ext_gcd(x, y);
  return {detail::narrow(r.g), detail::narrow(r.p), detail::narrow(r.q)};
}

HnfResult row_hnf(const IntMatrix& m) {
  if (!m.square()) throw UsageError("row_hnf: matrix must be square");
  const int n = m.rows();
  WideMatrix h(m);
  WideMatrix u(n, true);
  for (int j = 0; j < n; ++j) {
    // Clear the column below the diagonal by gcd row combinations.
    for (int i = j + 1; i < n; ++i) {
      if (h(i, j) == 0) continue;
      auto [g, p, q] = wide_ext_gcd(h(j, j), h(i, j));
      Wide sj = h(j, j) / g;
      Wide si = h(i, j) / g;
      combine_rows(h, u, j, i, p, q, -si, sj);
    }
    if (h(j, j) == 0) throw SingularMatrixError("row_hnf: matrix is singular");
    if (h(j, j) < 0) {
      for (int k = 0; k < n; ++k) h(j, k) = -h(j, k);
      for (int k = 0; k < n; ++k) u(j, k) = -u(j, k);
    }
    // Reduce the entries above the diagonal into [0, h(j,j)).
    for (int i = 0; i < j; ++i) {
      Wide q = detail::wide_floor_div(h(i, j), h(j, j));
      if (q == 0) continue;
      for (int k = 0; k < n; ++k) {
        h(i, k) = detail::wide_sub(h(i, k), detail::wide_mul(q, h(j, k)));
        u(i, k) = detail::wide_sub(u(i, k), detail::wide_mul(q, u(j, k)));
      }
    }
  }
  return {h.narrowed(), u.narrowed()};
}

int rank(const IntMatrix& m) {
  const int nr = m.rows();
  const int nc = m.cols();
  std::vector<Wide> e(static_cast<std::size_t>(nr) * nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) e[static_cast<std::size_t>(i) * nc + j] = m(i, j);
  auto at = [&](int i, int j) -> Wide& { return e[static_cast<std::size_t>(i) * nc + j]; };

  int r = 0;
  for (int j = 0; j < nc && r < nr; ++j) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int k = 0; k < nc; ++k) std::swap(at(r, k), at(piv, k));
    for (int i = r + 1; i < nr; ++i) {
      if (at(i, j) == 0) continue;
      auto [g, p, q] = wide_ext_gcd(at(r, j), at(i, j));
      Wide sr = at(r, j) / g;
      Wide si = at(i, j) / g;
      for (int k = 0; k < nc; ++k) {
        Wide x = at(r, k), y = at(i, k);
        at(r, k) = detail::wide_add(detail::wide_mul(p, x), detail::wide_mul(q, y));
        at(i, k) = detail::wide_sub(detail::wide_mul(sr, y), detail::wide_mul(si, x));
      }
    }
    ++r;
  }
  return r;
}

namespace {

IntMatrix minor_matrix(const IntMatrix& m, int drop_row, int drop_col) {
  IntMatrix s(m.rows() - 1, m.cols() - 1);
  for (int i = 0, si = 0; i < m.rows(); ++i) {
    if (i == drop_row) continue;
    for (int j = 0, sj = 0; j < m.cols(); ++j) {
      if (j == drop_col) continue;
      s(si, sj) = m(i, j);
      ++sj;
    }
    ++si;
  }
  return s;
}

} // namespace

IntMatrix unimodular_inverse(const IntMatrix& m) {
  Int d = det(m);
  if (d != 1 && d != -1) throw UsageError("unimodular_inverse: matrix is not unimodular");
  const int n = m.rows();
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int c = det(minor_matrix(m, j, i));
      if ((i + j) % 2 != 0) c = checked_neg(c);
      inv(i, j) = d == 1 ? c : checked_neg(c);
    }
  return inv;
}

} // namespace latfree
