#include "latfree/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>
#include <utility>

#include "latfree/classify.hpp"
#include "latfree/errors.hpp"

namespace latfree {

Simplex HnfParams3::simplex() const {
  if (a < 1 || c < 2 || f < 2 || b < 0 || b >= c || d < 0 || d >= f || e < 0 || e >= f)
    throw UsageError("HnfParams3 out of range");
  return Simplex({{0, 0, 0}, {a, 0, 0}, {b, c, 0}, {d, e, f}});
}

AxisLambda::AxisLambda(std::vector<Int> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw InvalidInputError("axis intercept list is empty");
  Int prev = 2;
  for (Int l : lambdas_) {
    if (l < prev) throw InvalidInputError("axis intercepts must be nondecreasing and >= 2");
    prev = l;
  }
}

namespace {

// Every integral maximal lattice-free simplex in dimension 3 has a Hermite
// parameter tuple inside one of these two boxes: with a >= 2 the parameters
// satisfy a <= 6, c <= 18, f <= 8, and with a = 1 they satisfy c <= 8 and
// f <= 16 unless the simplex is unimodularly equivalent to one with a >= 2,
// in which case the first box already covers its class and deduplication by
// canonical form merges the two routes.
constexpr Int kMaxA = 6;
constexpr Int kMaxCWithA2 = 18;
constexpr Int kMaxFWithA2 = 8;
constexpr Int kMaxCWithA1 = 8;
constexpr Int kMaxFWithA1 = 16;

struct OuterTriple {
  Int a, c, f;
};

std::vector<OuterTriple> outer_triples() {
  std::vector<OuterTriple> v;
  for (Int a = 2; a <= kMaxA; ++a)
    for (Int c = 2; c <= kMaxCWithA2; ++c)
      for (Int f = 2; f <= kMaxFWithA2; ++f) v.push_back({a, c, f});
  for (Int c = 2; c <= kMaxCWithA1; ++c)
    for (Int f = 2; f <= kMaxFWithA1; ++f) v.push_back({1, c, f});
  return v;
}

struct ClassValue {
  Simplex representative;
  std::uint64_t multiplicity;
};

using ClassMap = std::map<CanonicalForm, ClassValue>;

void record(ClassMap& classes, CanonicalForm form, const Simplex& s, std::uint64_t count) {
  auto it = classes.find(form);
  if (it == classes.end()) {
    classes.emplace(std::move(form), ClassValue{s, count});
    return;
  }
  it->second.multiplicity += count;
  if (s.vertices() < it->second.representative.vertices()) it->second.representative = s;
}

void scan_triples(const std::vector<OuterTriple>& triples, std::size_t begin, std::size_t end,
                  ClassMap& classes) {
  for (std::size_t i = begin; i < end; ++i) {
    const auto [a, c, f] = triples[i];
    for (Int b = 0; b < c; ++b)
      for (Int d = 0; d < f; ++d)
        for (Int e = 0; e < f; ++e) {
          Simplex s = HnfParams3{a, b, c, d, e, f}.simplex();
          if (!is_maximal_lattice_free(s)) continue;
          record(classes, canonical_form(s), s, 1);
        }
  }
}

} // namespace

ClassificationResult enumerate_3d(int jobs) {
  if (jobs < 1) throw UsageError("enumerate_3d: jobs must be >= 1");
  const std::vector<OuterTriple> triples = outer_triples();
  const std::size_t n = triples.size();
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);

  ClassMap merged;
  if (workers <= 1) {
    scan_triples(triples, 0, n, merged);
  } else {
    std::vector<ClassMap> maps(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t begin = n * w / workers;
      std::size_t end = n * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        try {
          scan_triples(triples, begin, end, maps[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& m : maps)
      for (auto& [form, value] : m) record(merged, form, value.representative, value.multiplicity);
  }

  ClassificationResult result;
  result.classes.reserve(merged.size());
  for (auto& [form, value] : merged)
    result.classes.push_back({form, std::move(value.representative), value.multiplicity});
  return result;
}

std::vector<Int> sylvester_bounds(int d) {
  if (d < 2) throw UsageError("sylvester_bounds: dimension must be >= 2");
  std::vector<Int> v{2};
  Int prod = 2;
  for (int j = 2; j < d; ++j) {
    v.push_back(checked_add(prod, 1));
    prod = checked_mul(prod, v.back());
  }
  v.push_back(prod);
  return v;
}

namespace {

void axis_dfs(int slots, Int min_lambda, Int rem_num, Int rem_den, std::vector<Int>& prefix,
              std::vector<AxisLambda>& out) {
  if (slots == 1) {
    if (rem_den % rem_num == 0) {
      Int lam = rem_den / rem_num;
      if (lam >= min_lambda) {
        prefix.push_back(lam);
        out.push_back(AxisLambda(prefix));
        prefix.pop_back();
      }
    }
    return;
  }
  // With further slots open, 1/lam must stay strictly below the remaining
  // sum; nondecreasing order caps lam at slots / remaining.
  Int lo = std::max(min_lambda, floor_div(rem_den, rem_num) + 1);
  Int hi = floor_div(checked_mul(static_cast<Int>(slots), rem_den), rem_num);
  for (Int lam = lo; lam <= hi; ++lam) {
    Int num = checked_sub(checked_mul(rem_num, lam), rem_den);
    Int den = checked_mul(rem_den, lam);
    Int g = gcd_nonneg(num, den);
    prefix.push_back(lam);
    axis_dfs(slots - 1, lam, num / g, den / g, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<AxisLambda> enumerate_axis(int d) {
  if (d < 2) throw UsageError("enumerate_axis: dimension must be >= 2");
  std::vector<AxisLambda> out;
  std::vector<Int> prefix;
  axis_dfs(d, 2, 1, 1, prefix, out);
  return out;
}

bool axis_is_maximal(const AxisLambda& lambda) {
  Int num = 0, den = 1;
  for (Int l : lambda.lambdas()) {
    num = checked_add(checked_mul(num, l), den);
    den = checked_mul(den, l);
    Int g = gcd_nonneg(num, den);
    num /= g;
    den /= g;
  }
  return num == den;
}

FacetIneq axis_facet(const AxisLambda& lambda) {
  Int lcm = 1;
  for (Int l : lambda.lambdas()) lcm = checked_mul(lcm / gcd_nonneg(lcm, l), l);
  std::vector<Int> normal;
  normal.reserve(lambda.lambdas().size());
  Int g = 0;
  for (Int l : lambda.lambdas()) {
    normal.push_back(lcm / l);
    g = gcd_nonneg(g, normal.back());
  }
  for (Int& a : normal) a /= g;
  return FacetIneq{std::move(normal), lcm / g, 0};
}

} // namespace latfree
