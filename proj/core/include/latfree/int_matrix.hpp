#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "latfree/checked.hpp"

namespace latfree {

/// Dense integer matrix, row-major. Every operation on it is exact; overflow
/// of the 64-bit representation throws OverflowError.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  Int& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Int> row(int i) const;
  std::vector<Int> col(int j) const;

  IntMatrix transposed() const;

  /// Ordering compares dimensions first, then entries in row-major order.
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend std::strong_ordering operator<=>(const IntMatrix&, const IntMatrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant by fraction-free Bareiss elimination.
Int det(const IntMatrix& m);

/// True iff m is square with determinant +1 or -1.
bool is_unimodular(const IntMatrix& m);

/// Row-style Hermite normal form of a nonsingular square matrix:
/// u * input = h with u unimodular, h upper triangular, h(j,j) > 0 and
/// 0 <= h(i,j) < h(j,j) for i < j. h is the unique such form under left
/// unimodular action.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};
HnfResult row_hnf(const IntMatrix& m);

/// g = gcd(x, y) >= 0 together with Bezout coefficients p*x + q*y = g.
/// ext_gcd(0, 0) = {0, 0, 0}.
struct ExtGcd {
  Int g;
  Int p;
  Int q;
};
ExtGcd ext_gcd(Int x, Int y);

/// Rank over the rationals, computed by exact integer row reduction.
int rank(const IntMatrix& m);

/// Integer inverse of a unimodular matrix (UsageError if |det| != 1).
IntMatrix unimodular_inverse(const IntMatrix& m);

} // namespace latfree
