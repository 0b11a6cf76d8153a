#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcov/error.hpp"
#include "fcov/fuzzy_set.hpp"
#include "fcov/universe.hpp"

namespace fcov {

struct Member {
  std::string name;
  FuzzySet set;

  friend bool operator==(const Member&, const Member&) = default;
};

// A member dropped at construction because its vector repeated an earlier one.
struct MergeRecord {
  std::string kept;
  std::string dropped;

  friend bool operator==(const MergeRecord&, const MergeRecord&) = default;
};

inline constexpr std::size_t kDefaultSizeGuard = 20;

// Validated fuzzy covering: non-null members, every element covered, no repeated vectors.
// All members share one grid.
class FuzzyCovering {
 public:
  static FuzzyCovering make(const Universe& u, std::vector<Member> sets) { return build(u, std::move(sets), true); }

  const Universe& universe() const noexcept { return u_; }
  std::uint32_t denominator() const noexcept { return den_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::span<const Member> members() const noexcept { return members_; }
  const Member& member(std::size_t i) const {
    if (i >= members_.size())
      throw Error(Errc::index_out_of_range, "member index " + std::to_string(i) + " out of range");
    return members_[i];
  }
  const FuzzySet& set(std::size_t i) const { return member(i).set; }
  std::span<const MergeRecord> merged() const noexcept { return merged_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (members_[i].name == name) return i;
    return std::nullopt;
  }

  FuzzyCovering on_grid(std::uint32_t den) const {
    if (den == den_) return *this;
    FuzzyCovering c = *this;
    c.den_ = den;
    for (auto& m : c.members_) m.set = m.set.on_grid(den);
    return c;
  }

  // Names, vectors and order all equal.
  friend bool operator==(const FuzzyCovering& a, const FuzzyCovering& b) {
    return a.u_ == b.u_ && a.members_ == b.members_;
  }

  // Internal constructor path used by derived coverings that drop duplicates silently.
  static FuzzyCovering build(const Universe& u, std::vector<Member> sets, bool record_merges) {
    std::uint32_t den = sets.empty() ? kDefaultDenominator : sets.front().set.denominator();
    for (const auto& m : sets) {
      if (!(m.set.universe() == u))
        throw Error(Errc::universe_mismatch, "member lives on a different universe", m.name);
      den = common_denominator(den, m.set.denominator());
    }
    FuzzyCovering c(u, den);
    std::map<std::vector<std::uint32_t>, std::size_t> seen;
    for (auto& m : sets) {
      FuzzySet s = m.set.on_grid(den);
      if (s.is_empty()) throw Error(Errc::null_member, "covering member is the empty set", m.name);
      std::vector<std::uint32_t> key(s.numerators().begin(), s.numerators().end());
      auto [it, fresh] = seen.emplace(std::move(key), c.members_.size());
      if (!fresh) {
        if (record_merges) c.merged_.push_back({c.members_[it->second].name, m.name});
        continue;
      }
      c.members_.push_back({std::move(m.name), std::move(s)});
    }
    for (std::size_t x = 0; x < u.size(); ++x) {
      bool covered = std::any_of(c.members_.begin(), c.members_.end(),
                                 [x](const Member& m) { return m.set.positive_at(x); });
      if (!covered) throw Error(Errc::coverage_gap, "element has zero membership in every member", u.label(x));
    }
    return c;
  }

 private:
  FuzzyCovering(Universe u, std::uint32_t den) : u_(std::move(u)), den_(den) {}

  Universe u_;
  std::uint32_t den_;
  std::vector<Member> members_;
  std::vector<MergeRecord> merged_;
};

inline FuzzyCovering make_covering(const Universe& u, std::vector<Member> sets) {
  return FuzzyCovering::make(u, std::move(sets));
}

namespace detail {

inline std::string neighborhood_name(const Universe& u, std::size_t x) { return "N(" + u.label(x) + ")"; }

// Named by the first element producing each vector; repeats dropped.
inline FuzzyCovering covering_of_neighborhoods(const Universe& u, const std::vector<FuzzySet>& hoods) {
  std::vector<Member> ms;
  ms.reserve(hoods.size());
  for (std::size_t x = 0; x < hoods.size(); ++x) ms.push_back({neighborhood_name(u, x), hoods[x]});
  return FuzzyCovering::build(u, std::move(ms), false);
}

inline std::pair<FuzzyCovering, FuzzySet> align(const FuzzyCovering& c, const FuzzySet& x) {
  require_same(c.universe(), x.universe());
  std::uint32_t d = common_denominator(c.denominator(), x.denominator());
  return {c.on_grid(d), x.on_grid(d)};
}

inline std::pair<FuzzyCovering, FuzzyCovering> align(const FuzzyCovering& a, const FuzzyCovering& b) {
  require_same(a.universe(), b.universe());
  std::uint32_t d = common_denominator(a.denominator(), b.denominator());
  return {a.on_grid(d), b.on_grid(d)};
}

inline bool num_subset(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace detail

inline FuzzySet neighborhood(const FuzzyCovering& c, std::size_t x) {
  const Universe& u = c.universe();
  if (x >= u.size()) throw Error(Errc::unknown_element, "element index out of range", std::to_string(x));
  std::vector<std::uint32_t> acc(u.size(), c.denominator());
  for (const auto& m : c.members()) {
    if (!m.set.positive_at(x)) continue;
    auto v = m.set.numerators();
    for (std::size_t y = 0; y < acc.size(); ++y) acc[y] = std::min(acc[y], v[y]);
  }
  return FuzzySet(u, c.denominator(), std::move(acc));
}

inline FuzzySet neighborhood(const FuzzyCovering& c, std::string_view label) {
  return neighborhood(c, c.universe().index_of(label));
}

inline std::vector<FuzzySet> neighborhoods(const FuzzyCovering& c) {
  std::vector<FuzzySet> out;
  out.reserve(c.universe().size());
  for (std::size_t x = 0; x < c.universe().size(); ++x) out.push_back(neighborhood(c, x));
  return out;
}

inline FuzzyCovering induced_covering(const FuzzyCovering& c) {
  return detail::covering_of_neighborhoods(c.universe(), neighborhoods(c));
}

struct NamedCovering {
  std::string name;
  FuzzyCovering covering;

  friend bool operator==(const NamedCovering&, const NamedCovering&) = default;
};

// Named coverings sharing one universe. May be empty.
class CoveringFamily {
 public:
  CoveringFamily(Universe u, std::vector<NamedCovering> coverings) : u_(std::move(u)), items_(std::move(coverings)) {
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (!(items_[i].covering.universe() == u_))
        throw Error(Errc::universe_mismatch, "covering lives on a different universe", items_[i].name);
      for (std::size_t j = 0; j < i; ++j)
        if (items_[j].name == items_[i].name)
          throw Error(Errc::duplicate_name, "covering name used twice", items_[i].name);
    }
  }

  const Universe& universe() const noexcept { return u_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  std::span<const NamedCovering> coverings() const noexcept { return items_; }
  const NamedCovering& at(std::size_t i) const { return items_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < items_.size(); ++i)
      if (items_[i].name == name) return i;
    return std::nullopt;
  }
  const FuzzyCovering& get(std::string_view name) const {
    if (auto i = find(name)) return items_[*i].covering;
    throw Error(Errc::unknown_covering, "no covering with this name", std::string(name));
  }

  friend bool operator==(const CoveringFamily& a, const CoveringFamily& b) {
    return a.u_ == b.u_ && a.items_ == b.items_;
  }

 private:
  Universe u_;
  std::vector<NamedCovering> items_;
};

// Pointwise intersection of per-covering neighborhoods, one vector per element.
inline std::vector<FuzzySet> family_neighborhoods(std::span<const FuzzyCovering* const> cs) {
  if (cs.empty()) throw Error(Errc::empty_family, "family has no coverings");
  std::vector<FuzzySet> acc = neighborhoods(*cs.front());
  for (std::size_t i = 1; i < cs.size(); ++i) {
    auto next = neighborhoods(*cs[i]);
    for (std::size_t x = 0; x < acc.size(); ++x) acc[x] = fs_intersect(acc[x], next[x]);
  }
  return acc;
}

inline FuzzyCovering induced_family_covering(const CoveringFamily& d) {
  std::vector<const FuzzyCovering*> cs;
  for (const auto& nc : d.coverings()) cs.push_back(&nc.covering);
  return detail::covering_of_neighborhoods(d.universe(), family_neighborhoods(cs));
}

// All member subsets whose union contains X, ordered by size then by index sequence.
inline std::vector<IndexSet> subcoverings(const FuzzyCovering& c0, const FuzzySet& x0,
                                          std::size_t guard = kDefaultSizeGuard) {
  auto [c, x] = detail::align(c0, x0);
  const std::size_t n = c.size();
  if (n > guard || n >= 63)
    throw Error(Errc::size_guard, "covering has " + std::to_string(n) + " members; exhaustive bound is " +
                                      std::to_string(guard));
  std::vector<IndexSet> out;
  const std::size_t len = x.size();
  std::vector<std::uint32_t> acc(len);
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    std::fill(acc.begin(), acc.end(), 0);
    IndexSet idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      idx.push_back(i);
      auto v = c.set(i).numerators();
      for (std::size_t y = 0; y < len; ++y) acc[y] = std::max(acc[y], v[y]);
    }
    if (detail::num_subset(x.numerators(), acc)) out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

inline bool is_reducible(const FuzzyCovering& c, std::size_t i) {
  const FuzzySet& target = c.set(i);
  std::vector<std::uint32_t> acc(target.size(), 0);
  bool any = false;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == i || !fs_subset(c.set(j), target)) continue;
    any = true;
    auto v = c.set(j).numerators();
    for (std::size_t y = 0; y < acc.size(); ++y) acc[y] = std::max(acc[y], v[y]);
  }
  return any && std::equal(acc.begin(), acc.end(), target.numerators().begin());
}

inline bool is_intersectional(const FuzzyCovering& c, std::size_t i) {
  const FuzzySet& target = c.set(i);
  std::vector<std::uint32_t> acc(target.size(), c.denominator());
  bool any = false;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == i || !fs_subset(target, c.set(j))) continue;
    any = true;
    auto v = c.set(j).numerators();
    for (std::size_t y = 0; y < acc.size(); ++y) acc[y] = std::min(acc[y], v[y]);
  }
  return any && std::equal(acc.begin(), acc.end(), target.numerators().begin());
}

namespace detail {

template <class Pred>
FuzzyCovering strip_to_fixpoint(const FuzzyCovering& c, Pred removable) {
  FuzzyCovering cur = c;
  for (;;) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!removable(cur, i)) continue;
      if (!pick || lex_compare(cur.set(i), cur.set(*pick)) < 0) pick = i;
    }
    if (!pick) return cur;
    std::vector<Member> rest;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (i != *pick) rest.push_back(cur.member(i));
    cur = FuzzyCovering::build(cur.universe(), std::move(rest), false);
  }
}

}  // namespace detail

// Irreducible residue: reducible members removed one at a time, smallest vector first.
inline FuzzyCovering reduce_covering(const FuzzyCovering& c) {
  return detail::strip_to_fixpoint(c, [](const FuzzyCovering& k, std::size_t i) { return is_reducible(k, i); });
}

// Non-intersectional residue, removal order as in reduce_covering.
inline FuzzyCovering reduce_intersections(const FuzzyCovering& c) {
  return detail::strip_to_fixpoint(c,
                                   [](const FuzzyCovering& k, std::size_t i) { return is_intersectional(k, i); });
}

inline FuzzyCovering covering_union(const FuzzyCovering& a0, const FuzzyCovering& b0) {
  auto [a, b] = detail::align(a0, b0);
  std::vector<Member> ms(a.members().begin(), a.members().end());
  ms.insert(ms.end(), b.members().begin(), b.members().end());
  return FuzzyCovering::build(a.universe(), std::move(ms), false);
}

inline FuzzyCovering covering_intersection(const FuzzyCovering& a0, const FuzzyCovering& b0) {
  auto [a, b] = detail::align(a0, b0);
  auto na = neighborhoods(a), nb = neighborhoods(b);
  for (std::size_t x = 0; x < na.size(); ++x) na[x] = fs_intersect(na[x], nb[x]);
  return detail::covering_of_neighborhoods(a.universe(), na);
}

// Every member of `fine` lies below some member of `coarse`.
inline bool is_coarser(const FuzzyCovering& fine0, const FuzzyCovering& coarse0) {
  auto [fine, coarse] = detail::align(fine0, coarse0);
  for (const auto& m : fine.members()) {
    bool below = std::any_of(coarse.members().begin(), coarse.members().end(), [&](const Member& k) {
      return detail::num_subset(m.set.numerators(), k.set.numerators());
    });
    if (!below) return false;
  }
  return true;
}

// Set equality of member vectors; names are ignored.
inline bool covering_equal(const FuzzyCovering& a0, const FuzzyCovering& b0) {
  auto [a, b] = detail::align(a0, b0);
  if (a.size() != b.size()) return false;
  for (const auto& m : a.members()) {
    bool found = std::any_of(b.members().begin(), b.members().end(),
                             [&](const Member& k) { return k.set == m.set; });
    if (!found) return false;
  }
  return true;
}

}  // namespace fcov
