#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcov/covering.hpp"
#include "fcov/error.hpp"
#include "fcov/fuzzy_set.hpp"

namespace fcov {

// Square grade matrix over one universe, row-major.
class FuzzyRelation {
 public:
  FuzzyRelation(Universe u, std::uint32_t den, std::vector<std::uint32_t> cells)
      : u_(std::move(u)), den_(den), cells_(std::move(cells)) {
    check_denominator(den_);
    if (cells_.size() != u_.size() * u_.size())
      throw Error(Errc::length_mismatch, "relation needs " + std::to_string(u_.size() * u_.size()) + " cells");
    for (std::uint32_t v : cells_)
      if (v > den_) throw Error(Errc::grade_off_grid, "relation grade above 1");
  }

  static FuzzyRelation from_rows(const Universe& u, std::span<const FuzzySet> rows) {
    if (rows.size() != u.size()) throw Error(Errc::length_mismatch, "relation needs one row per element");
    std::uint32_t den = rows.empty() ? kDefaultDenominator : rows.front().denominator();
    for (const auto& r : rows) {
      require_same(u, r.universe());
      den = common_denominator(den, r.denominator());
    }
    std::vector<std::uint32_t> cells;
    cells.reserve(u.size() * u.size());
    for (const auto& r : rows) {
      FuzzySet lifted = r.on_grid(den);
      auto g = lifted.numerators();
      cells.insert(cells.end(), g.begin(), g.end());
    }
    return FuzzyRelation(u, den, std::move(cells));
  }

  const Universe& universe() const noexcept { return u_; }
  std::uint32_t denominator() const noexcept { return den_; }
  std::size_t size() const noexcept { return u_.size(); }
  std::uint32_t numerator(std::size_t x, std::size_t y) const { return cells_[x * u_.size() + y]; }
  Grade operator()(std::size_t x, std::size_t y) const { return {numerator(x, y), den_}; }

  FuzzySet row(std::size_t x) const {
    auto first = cells_.begin() + std::ptrdiff_t(x * u_.size());
    return FuzzySet(u_, den_, std::vector<std::uint32_t>(first, first + std::ptrdiff_t(u_.size())));
  }

  friend bool operator==(const FuzzyRelation& a, const FuzzyRelation& b) {
    if (!(a.u_ == b.u_)) return false;
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y)
        if (a(x, y) != b(x, y)) return false;
    return true;
  }

 private:
  Universe u_;
  std::uint32_t den_;
  std::vector<std::uint32_t> cells_;
};

// Rows become members, named R(x). A zero row is a null member.
inline FuzzyCovering covering_from_relation(const FuzzyRelation& r) {
  const Universe& u = r.universe();
  std::vector<Member> ms;
  for (std::size_t x = 0; x < u.size(); ++x) {
    FuzzySet row = r.row(x);
    ms.push_back({"R(" + u.label(x) + ")", std::move(row)});
  }
  for (std::size_t y = 0; y < u.size(); ++y) {
    bool covered = false;
    for (std::size_t x = 0; x < u.size() && !covered; ++x) covered = r.numerator(x, y) > 0;
    if (!covered) throw Error(Errc::coverage_gap, "relation column is all zero", u.label(y));
  }
  return FuzzyCovering::build(u, std::move(ms), false);
}

struct NeighborhoodRelation {
  FuzzyRelation relation;
  Grade alpha;  // smallest diagonal grade
};

inline NeighborhoodRelation relation_from_neighborhoods(const FuzzyCovering& c) {
  auto hoods = neighborhoods(c);
  FuzzyRelation r = FuzzyRelation::from_rows(c.universe(), hoods);
  Grade alpha = Grade::one(r.denominator());
  for (std::size_t x = 0; x < r.size(); ++x) alpha = std::min(alpha, r(x, x));
  return {std::move(r), alpha};
}

struct RelationChecks {
  std::optional<Grade> alpha_reflexive;  // largest alpha with R(x,x) >= alpha everywhere, if positive
  bool reflexive = false;
  bool symmetric = false;
  bool min_transitive = false;
};

inline RelationChecks relation_checks(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  RelationChecks out;
  std::uint32_t diag = r.denominator();
  for (std::size_t x = 0; x < n; ++x) diag = std::min(diag, r.numerator(x, x));
  if (diag > 0) out.alpha_reflexive = Grade{diag, r.denominator()};
  out.reflexive = diag == r.denominator();
  out.symmetric = true;
  for (std::size_t x = 0; x < n && out.symmetric; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (r.numerator(x, y) != r.numerator(y, x)) {
        out.symmetric = false;
        break;
      }
  out.min_transitive = true;
  for (std::size_t x = 0; x < n && out.min_transitive; ++x)
    for (std::size_t y = 0; y < n && out.min_transitive; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (std::min(r.numerator(x, y), r.numerator(y, z)) > r.numerator(x, z)) {
          out.min_transitive = false;
          break;
        }
  return out;
}

}  // namespace fcov
