#include "latfree/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "latfree/errors.hpp"

namespace latfree {

namespace {

struct CanonicalSearch {
  IntMatrix h;            // lexicographically smallest HNF
  IntMatrix u;            // unimodular multiplier: u * edges = h
  std::vector<int> order; // vertex indices: order[0] is the base
};

IntMatrix ordered_edge_matrix(const Simplex& s, const std::vector<int>& order) {
  const int d = s.dim();
  IntMatrix e(d, d);
  const Point& base = s.vertex(order[0]);
  for (int c = 0; c < d; ++c) {
    const Point& v = s.vertex(order[static_cast<std::size_t>(c) + 1]);
    for (int r = 0; r < d; ++r) e(r, c) = checked_sub(v[r], base[r]);
  }
  return e;
}

// Minimize the row-HNF of the edge matrix over all base vertices and all
// orderings of the remaining vertices. The row-HNF is invariant under left
// unimodular action, the base choice quotients out translation, and the
// ordering quotients out relabeling, so the minimum is a complete invariant.
CanonicalSearch canonical_search(const Simplex& s) {
  const int d = s.dim();
  std::optional<CanonicalSearch> best;
  for (int base = 0; base <= d; ++base) {
    std::vector<int> rest;
    for (int i = 0; i <= d; ++i)
      if (i != base) rest.push_back(i);
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> order;
      order.reserve(static_cast<std::size_t>(d) + 1);
      order.push_back(base);
      order.insert(order.end(), rest.begin(), rest.end());
      HnfResult r = row_hnf(ordered_edge_matrix(s, order));
      if (!best || r.h < best->h)
        best = CanonicalSearch{std::move(r.h), std::move(r.u), std::move(order)};
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return *std::move(best);
}

} // namespace

CanonicalForm canonical_form(const Simplex& s) {
  CanonicalSearch c = canonical_search(s);
  return CanonicalForm{s.dim(), std::move(c.h)};
}

bool are_equivalent(const Simplex& s, const Simplex& t) {
  if (s.dim() != t.dim()) throw UsageError("are_equivalent: dimension mismatch");
  return canonical_form(s) == canonical_form(t);
}

std::optional<EquivalenceWitness> find_witness(const Simplex& s, const Simplex& t) {
  if (s.dim() != t.dim()) throw UsageError("find_witness: dimension mismatch");
  const int d = s.dim();
  CanonicalSearch cs = canonical_search(s);
  CanonicalSearch ct = canonical_search(t);
  if (cs.h != ct.h) return std::nullopt;

  // us * Es = h = ut * Et, hence Es = (us^-1 * ut) * Et: the matched vertex
  // orderings are related by m = us^-1 * ut and the base translation.
  IntMatrix m = unimodular_inverse(cs.u) * ct.u;
  const Point& s_base = s.vertex(cs.order[0]);
  Point m_t_base = m * t.vertex(ct.order[0]);
  std::vector<Int> v(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) v[static_cast<std::size_t>(j)] = checked_sub(s_base[j], m_t_base[j]);

  std::vector<int> sigma(static_cast<std::size_t>(d) + 1, -1);
  for (int k = 0; k <= d; ++k) sigma[static_cast<std::size_t>(cs.order[k])] = ct.order[k];

  if (!is_unimodular(m)) throw std::logic_error("find_witness: recovered matrix is not unimodular");
  for (int j = 0; j <= d; ++j) {
    Point image = m * t.vertex(sigma[static_cast<std::size_t>(j)]);
    for (int r = 0; r < d; ++r)
      if (checked_add(image[r], v[static_cast<std::size_t>(r)]) != s.vertex(j)[r])
        throw std::logic_error("find_witness: witness verification failed");
  }
  return EquivalenceWitness{std::move(m), std::move(v), std::move(sigma)};
}

} // namespace latfree
