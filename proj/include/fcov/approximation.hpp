#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "fcov/covering.hpp"
#include "fcov/error.hpp"
#include "fcov/fuzzy_set.hpp"
#include "fcov/rational.hpp"

namespace fcov {

struct ApproxPair {
  FuzzySet lower;
  FuzzySet upper;
};

struct RoughnessReport {
  Rational mu;
  std::optional<Rational> mu_alpha_beta;
  Grade alpha;
  Grade beta;
};

namespace detail {

inline FuzzySet lower_aligned(const FuzzyCovering& c, const FuzzySet& x) {
  std::vector<std::uint32_t> acc(x.size(), 0);
  for (const auto& m : c.members()) {
    auto v = m.set.numerators();
    if (!num_subset(v, x.numerators())) continue;
    for (std::size_t y = 0; y < acc.size(); ++y) acc[y] = std::max(acc[y], v[y]);
  }
  return FuzzySet(x.universe(), x.denominator(), std::move(acc));
}

inline FuzzySet upper_aligned(const FuzzyCovering& c, const FuzzySet& x, const FuzzySet& lower) {
  std::vector<std::uint32_t> acc(lower.numerators().begin(), lower.numerators().end());
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!x.positive_at(p) || lower.positive_at(p)) continue;
    FuzzySet h = neighborhood(c, p);
    auto v = h.numerators();
    for (std::size_t y = 0; y < acc.size(); ++y) acc[y] = std::max(acc[y], v[y]);
  }
  return FuzzySet(x.universe(), x.denominator(), std::move(acc));
}

}  // namespace detail

inline FuzzySet lower_approx(const FuzzyCovering& c0, const FuzzySet& x0) {
  auto [c, x] = detail::align(c0, x0);
  return detail::lower_aligned(c, x);
}

inline FuzzySet upper_approx(const FuzzyCovering& c0, const FuzzySet& x0) {
  auto [c, x] = detail::align(c0, x0);
  return detail::upper_aligned(c, x, detail::lower_aligned(c, x));
}

inline ApproxPair approximate(const FuzzyCovering& c0, const FuzzySet& x0) {
  auto [c, x] = detail::align(c0, x0);
  FuzzySet lo = detail::lower_aligned(c, x);
  FuzzySet up = detail::upper_aligned(c, x, lo);
  return {std::move(lo), std::move(up)};
}

// Union of the neighborhoods of every element in the support of X.
inline FuzzySet neighborhood_union(const FuzzyCovering& c0, const FuzzySet& x0) {
  auto [c, x] = detail::align(c0, x0);
  std::vector<std::uint32_t> acc(x.size(), 0);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!x.positive_at(p)) continue;
    FuzzySet h = neighborhood(c, p);
    auto v = h.numerators();
    for (std::size_t y = 0; y < acc.size(); ++y) acc[y] = std::max(acc[y], v[y]);
  }
  return FuzzySet(x.universe(), x.denominator(), std::move(acc));
}

// Intersection, over every member subset whose union contains X, of that union.
// Only subsets that first reach X along the index-ordered search matter: any
// extension has a larger union and cannot lower the intersection.
inline FuzzySet subcovering_bound(const FuzzyCovering& c0, const FuzzySet& x0, std::size_t guard = kDefaultSizeGuard) {
  auto [c, x] = detail::align(c0, x0);
  const std::size_t n = c.size();
  if (n > guard)
    throw Error(Errc::size_guard, "covering has " + std::to_string(n) + " members; exhaustive bound is " +
                                      std::to_string(guard));
  const std::size_t len = x.size();
  std::vector<std::uint32_t> top(len, 0);
  for (const auto& m : c.members()) {
    auto v = m.set.numerators();
    for (std::size_t y = 0; y < len; ++y) top[y] = std::max(top[y], v[y]);
  }
  if (!detail::num_subset(x.numerators(), top))
    throw Error(Errc::not_covered, "X is not contained in the union of the covering");

  std::vector<std::uint32_t> bound(len, c.denominator());
  auto target = x.numerators();
  auto dfs = [&](auto&& self, std::size_t next, const std::vector<std::uint32_t>& acc) -> void {
    for (std::size_t i = next; i < n; ++i) {
      std::vector<std::uint32_t> grown(acc);
      auto v = c.set(i).numerators();
      for (std::size_t y = 0; y < len; ++y) grown[y] = std::max(grown[y], v[y]);
      if (detail::num_subset(target, grown)) {
        for (std::size_t y = 0; y < len; ++y) bound[y] = std::min(bound[y], grown[y]);
      } else {
        self(self, i + 1, grown);
      }
    }
  };
  dfs(dfs, 0, std::vector<std::uint32_t>(len, 0));
  return FuzzySet(x.universe(), x.denominator(), std::move(bound));
}

// 1 - |lower| / |upper|, and 0 when the upper approximation is empty.
inline Rational roughness(const FuzzyCovering& c, const FuzzySet& x) {
  ApproxPair p = approximate(c, x);
  Rational up = scalar_cardinality(p.upper);
  if (up == Rational(0)) return Rational(0);
  return Rational(1) - scalar_cardinality(p.lower) / up;
}

// 1 - #(lower > alpha) / #(upper > beta).
inline Rational roughness_ab(const FuzzyCovering& c, const FuzzySet& x, Grade alpha, Grade beta) {
  ApproxPair p = approximate(c, x);
  auto num = strict_alpha_cut(p.lower, alpha).size();
  auto den = strict_alpha_cut(p.upper, beta).size();
  if (den == 0) throw Error(Errc::degenerate_cut, "no element of the upper approximation exceeds beta");
  return Rational(1) - Rational(std::int64_t(num), std::int64_t(den));
}

inline RoughnessReport roughness_report(const FuzzyCovering& c, const FuzzySet& x, Grade alpha, Grade beta) {
  RoughnessReport r{roughness(c, x), std::nullopt, alpha, beta};
  try {
    r.mu_alpha_beta = roughness_ab(c, x, alpha, beta);
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate_cut) throw;
  }
  return r;
}

}  // namespace fcov
