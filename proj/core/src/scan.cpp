#include "scan.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "latfree/errors.hpp"
#include "wide.hpp"

namespace latfree::detail {

std::pair<std::vector<Int>, std::vector<Int>> bounding_box(std::span<const Point> pts) {
  assert(!pts.empty());
  std::vector<Int> lo = pts.front();
  std::vector<Int> hi = pts.front();
  for (const Point& p : pts)
    for (std::size_t j = 0; j < p.size(); ++j) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
  return {std::move(lo), std::move(hi)};
}

namespace {

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

} // namespace

bool scan_box(const std::vector<Int>& lo, const std::vector<Int>& hi,
              const std::vector<FacetIneq>& facets, const std::vector<Rel>& rels,
              std::uint64_t point_budget, const std::function<bool(const Point&)>& visit) {
  const int d = static_cast<int>(lo.size());
  const int nf = static_cast<int>(facets.size());
  assert(rels.size() == facets.size());

  unsigned __int128 volume = 1;
  for (int j = 0; j < d; ++j) {
    if (hi[j] < lo[j]) return true; // empty box
    volume *= static_cast<unsigned __int128>(hi[j] - lo[j] + 1);
  }
  if (point_budget != 0 && volume > point_budget)
    throw BudgetExceededError("bounding box holds " + u128_to_string(volume) +
                              " integer points, exceeding the point budget of " +
                              std::to_string(point_budget));

  // Extreme contribution of coordinates j..d-1 to each facet form, checked
  // once; every partial sum the sweep forms afterwards is a prefix of an
  // achievable total and therefore representable.
  std::vector<std::vector<Int>> minrem(nf, std::vector<Int>(d + 1, 0));
  std::vector<std::vector<Int>> maxrem(nf, std::vector<Int>(d + 1, 0));
  for (int k = 0; k < nf; ++k) {
    assert(static_cast<int>(facets[k].normal.size()) == d);
    for (int j = d - 1; j >= 0; --j) {
      Int c1 = checked_mul(facets[k].normal[j], lo[j]);
      Int c2 = checked_mul(facets[k].normal[j], hi[j]);
      minrem[k][j] = checked_add(minrem[k][j + 1], std::min(c1, c2));
      maxrem[k][j] = checked_add(maxrem[k][j + 1], std::max(c1, c2));
    }
    // Prefix extremes must be representable too; the sweep forms them with
    // plain arithmetic.
    Int acc_min = 0, acc_max = 0;
    for (int j = 0; j < d; ++j) {
      Int c1 = checked_mul(facets[k].normal[j], lo[j]);
      Int c2 = checked_mul(facets[k].normal[j], hi[j]);
      acc_min = checked_add(acc_min, std::min(c1, c2));
      acc_max = checked_add(acc_max, std::max(c1, c2));
    }
  }

  Point x(static_cast<std::size_t>(d), 0);
  // sums[depth][k]: contribution of coordinates < depth to facet form k.
  std::vector<std::vector<Int>> sums(static_cast<std::size_t>(d) + 1, std::vector<Int>(nf, 0));

  // At each depth the feasible values of x[depth] form an interval: every
  // relation is monotone in x[depth] once the prefix is fixed and the free
  // coordinates are replaced by their extreme contributions.
  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == d) return visit(x);
    Wide xlo = lo[depth];
    Wide xhi = hi[depth];
    for (int k = 0; k < nf && xlo <= xhi; ++k) {
      const Wide n = facets[k].normal[depth];
      const Wide base = sums[depth][k];
      // Upper-side requirement: base + n*x + minrem <= cap.
      Wide cap = facets[k].rhs;
      if (rels[k] == Rel::lt) cap -= 1;
      Wide r_hi = cap - base - minrem[k][depth + 1];
      if (n > 0)
        xhi = std::min(xhi, wide_floor_div(r_hi, n));
      else if (n < 0)
        xlo = std::max(xlo, wide_ceil_div(r_hi, n));
      else if (r_hi < 0)
        return true;
      // Lower-side requirement (equality only): base + n*x + maxrem >= rhs.
      if (rels[k] == Rel::eq) {
        Wide r_lo = static_cast<Wide>(facets[k].rhs) - base - maxrem[k][depth + 1];
        if (n > 0)
          xlo = std::max(xlo, wide_ceil_div(r_lo, n));
        else if (n < 0)
          xhi = std::min(xhi, wide_floor_div(r_lo, n));
        else if (r_lo > 0)
          return true;
      }
    }
    if (xlo > xhi) return true;
    std::vector<Int>& next = sums[static_cast<std::size_t>(depth) + 1];
    for (Int v = static_cast<Int>(xlo);; ++v) {
      x[static_cast<std::size_t>(depth)] = v;
      for (int k = 0; k < nf; ++k)
        next[k] = sums[depth][k] + static_cast<Int>(facets[k].normal[depth] * v);
      if (!rec(depth + 1)) return false;
      if (v == static_cast<Int>(xhi)) break;
    }
    return true;
  };
  return rec(0);
}

} // namespace latfree::detail
