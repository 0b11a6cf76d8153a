#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcov/error.hpp"
#include "fcov/grade.hpp"
#include "fcov/rational.hpp"
#include "fcov/universe.hpp"

namespace fcov {

using IndexSet = std::vector<std::size_t>;

// Membership vector over a universe, stored as numerators on a shared grid.
class FuzzySet {
 public:
  FuzzySet(Universe u, std::uint32_t den, std::vector<std::uint32_t> nums)
      : u_(std::move(u)), den_(den), nums_(std::move(nums)) {
    check_denominator(den_);
    if (nums_.size() != u_.size())
      throw Error(Errc::length_mismatch, "expected " + std::to_string(u_.size()) + " memberships, got " +
                                             std::to_string(nums_.size()));
    for (std::size_t i = 0; i < nums_.size(); ++i)
      if (nums_[i] > den_) throw Error(Errc::grade_off_grid, "membership above 1", u_.label(i));
  }

  static FuzzySet empty(const Universe& u, std::uint32_t den = kDefaultDenominator) {
    return FuzzySet(u, den, std::vector<std::uint32_t>(u.size(), 0));
  }
  static FuzzySet full(const Universe& u, std::uint32_t den = kDefaultDenominator) {
    return FuzzySet(u, den, std::vector<std::uint32_t>(u.size(), den));
  }
  static FuzzySet constant(const Universe& u, Grade g) {
    return FuzzySet(u, g.den, std::vector<std::uint32_t>(u.size(), g.num));
  }

  const Universe& universe() const noexcept { return u_; }
  std::uint32_t denominator() const noexcept { return den_; }
  std::size_t size() const noexcept { return nums_.size(); }
  std::span<const std::uint32_t> numerators() const noexcept { return nums_; }
  std::uint32_t numerator(std::size_t i) const { return nums_[i]; }
  Grade operator[](std::size_t i) const { return {nums_[i], den_}; }
  bool positive_at(std::size_t i) const { return nums_[i] > 0; }

  bool is_empty() const {
    return std::all_of(nums_.begin(), nums_.end(), [](std::uint32_t v) { return v == 0; });
  }

  // Same values on a grid that divides into `den`.
  FuzzySet on_grid(std::uint32_t den) const {
    if (den == den_) return *this;
    check_denominator(den);
    std::vector<std::uint32_t> out(nums_.size());
    for (std::size_t i = 0; i < nums_.size(); ++i) {
      std::uint64_t scaled = std::uint64_t(nums_[i]) * den;
      if (scaled % den_ != 0)
        throw Error(Errc::grade_off_grid, "value not representable on grid 1/" + std::to_string(den),
                    u_.label(i));
      out[i] = static_cast<std::uint32_t>(scaled / den_);
    }
    return FuzzySet(u_, den, std::move(out));
  }

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
    if (!(a.u_ == b.u_) || a.size() != b.size()) return false;
    if (a.den_ == b.den_) return a.nums_ == b.nums_;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

  // Lexicographic by grade value, used for deterministic ordering.
  friend std::strong_ordering lex_compare(const FuzzySet& a, const FuzzySet& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
      if (auto c = a[i] <=> b[i]; c != 0) return c;
    return a.size() <=> b.size();
  }

 private:
  Universe u_;
  std::uint32_t den_;
  std::vector<std::uint32_t> nums_;
};

template <class Strings>
FuzzySet make_fuzzy_set_from(const Universe& u, const Strings& values, std::uint32_t den) {
  std::vector<std::uint32_t> nums;
  std::size_t i = 0;
  for (const auto& v : values) {
    try {
      nums.push_back(parse_grade(v, den).num);
    } catch (const Error& e) {
      throw e.at("[" + std::to_string(i) + "]");
    }
    ++i;
  }
  return FuzzySet(u, den, std::move(nums));
}

inline FuzzySet make_fuzzy_set(const Universe& u, std::span<const std::string> values,
                               std::uint32_t den = kDefaultDenominator) {
  return make_fuzzy_set_from(u, values, den);
}

inline FuzzySet make_fuzzy_set(const Universe& u, std::initializer_list<std::string_view> values,
                               std::uint32_t den = kDefaultDenominator) {
  return make_fuzzy_set_from(u, values, den);
}

namespace detail {

template <class Op>
FuzzySet pointwise(const FuzzySet& a, const FuzzySet& b, Op op) {
  require_same(a.universe(), b.universe());
  if (a.denominator() != b.denominator()) {
    std::uint32_t d = common_denominator(a.denominator(), b.denominator());
    return pointwise(a.on_grid(d), b.on_grid(d), op);
  }
  std::vector<std::uint32_t> out(a.size());
  auto x = a.numerators(), y = b.numerators();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(x[i], y[i]);
  return FuzzySet(a.universe(), a.denominator(), std::move(out));
}

}  // namespace detail

inline FuzzySet fs_union(const FuzzySet& a, const FuzzySet& b) {
  return detail::pointwise(a, b, [](std::uint32_t x, std::uint32_t y) { return std::max(x, y); });
}

inline FuzzySet fs_intersect(const FuzzySet& a, const FuzzySet& b) {
  return detail::pointwise(a, b, [](std::uint32_t x, std::uint32_t y) { return std::min(x, y); });
}

inline FuzzySet fs_complement(const FuzzySet& a) {
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.denominator() - a.numerator(i);
  return FuzzySet(a.universe(), a.denominator(), std::move(out));
}

inline bool fs_subset(const FuzzySet& a, const FuzzySet& b) {
  require_same(a.universe(), b.universe());
  if (a.denominator() == b.denominator()) {
    auto x = a.numerators(), y = b.numerators();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] > y[i]) return false;
    return true;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Rational scalar_cardinality(const FuzzySet& a) {
  std::int64_t sum = 0;
  for (std::uint32_t v : a.numerators()) sum += v;
  return Rational(sum, a.denominator());
}

// Elements whose grade is strictly above t.
inline IndexSet strict_alpha_cut(const FuzzySet& a, Grade t) {
  IndexSet out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > t) out.push_back(i);
  return out;
}

inline IndexSet support(const FuzzySet& a) {
  IndexSet out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.positive_at(i)) out.push_back(i);
  return out;
}

inline std::string to_string(const FuzzySet& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += format_grade(a[i]);
  }
  return s + "]";
}

}  // namespace fcov
