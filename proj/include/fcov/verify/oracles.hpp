#pragma once

// Brute-force references written directly from the definitions on plain integer
// vectors. None of these call the library algorithms they are compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "fcov/covering.hpp"
#include "fcov/fuzzy_set.hpp"

namespace fcov::verify::oracle {

using Vec = std::vector<int>;
using Family = std::vector<Vec>;
using Mask = std::uint32_t;

inline Vec raw(const FuzzySet& s) { return Vec(s.numerators().begin(), s.numerators().end()); }

inline Family raw(const FuzzyCovering& c) {
  Family f;
  for (const auto& m : c.members()) f.push_back(raw(m.set));
  return f;
}

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Vec join(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline Vec meet(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

inline Vec union_of(const Family& f, Mask mask, std::size_t n) {
  Vec r(n, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (mask >> i & 1) r = join(r, f[i]);
  return r;
}

inline Vec intersection_of(const Family& f, Mask mask, std::size_t n, int top) {
  Vec r(n, top);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (mask >> i & 1) r = meet(r, f[i]);
  return r;
}

// Intersection of all members positive at x.
inline Vec neighborhood(const Family& f, std::size_t x, std::size_t n, int top) {
  Vec r(n, top);
  for (const auto& c : f)
    if (c[x] > 0) r = meet(r, c);
  return r;
}

// Every non-empty member subset whose union contains x_set, in mask order.
inline std::vector<Mask> subcoverings(const Family& f, const Vec& x_set) {
  std::vector<Mask> out;
  for (Mask mask = 1; mask < (Mask(1) << f.size()); ++mask)
    if (leq(x_set, union_of(f, mask, x_set.size()))) out.push_back(mask);
  return out;
}

inline Vec subcovering_bound(const Family& f, const Vec& x_set, int top) {
  Vec r(x_set.size(), top);
  for (Mask m : subcoverings(f, x_set)) r = meet(r, union_of(f, m, x_set.size()));
  return r;
}

// X equals the union of some subfamily (the empty union is the empty set).
inline bool is_union_of_members(const Family& f, const Vec& x_set) {
  for (Mask mask = 0; mask < (Mask(1) << f.size()); ++mask)
    if (union_of(f, mask, x_set.size()) == x_set) return true;
  return false;
}

// Member i equals the union (or intersection) of some non-empty set of the members in `alive` other than i.
inline bool expressible(const Family& f, Mask alive, std::size_t i, bool by_union, int top) {
  Mask others = alive & ~(Mask(1) << i);
  for (Mask sub = others; sub != 0; sub = (sub - 1) & others) {
    Vec v = by_union ? union_of(f, sub, f[i].size()) : intersection_of(f, sub, f[i].size(), top);
    if (v == f[i]) return true;
  }
  return false;
}

// Every fixpoint reachable by removing expressible members one at a time, in any order.
inline std::set<Mask> all_removal_fixpoints(const Family& f, bool by_union, int top) {
  std::set<Mask> ends;
  std::set<Mask> seen;
  std::vector<Mask> stack{(Mask(1) << f.size()) - 1};
  while (!stack.empty()) {
    Mask alive = stack.back();
    stack.pop_back();
    if (!seen.insert(alive).second) continue;
    bool any = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!(alive >> i & 1) || !expressible(f, alive, i, by_union, top)) continue;
      any = true;
      stack.push_back(alive & ~(Mask(1) << i));
    }
    if (!any) ends.insert(alive);
  }
  return ends;
}

inline Family select(const Family& f, Mask mask) {
  Family r;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (mask >> i & 1) r.push_back(f[i]);
  return r;
}

inline std::set<Vec> as_set(const Family& f) { return {f.begin(), f.end()}; }

struct Reducts {
  std::vector<Mask> reducts;
  Mask core = 0;
  Mask superfluous = 0;
};

// Def-level reduct scan over all subfamilies; minimality against every proper subset.
inline Reducts reducts(const std::vector<Family>& coverings, std::size_t n, int top) {
  const std::size_t m = coverings.size();
  auto inter = [&](Mask mask) {
    std::set<Vec> out;
    for (std::size_t x = 0; x < n; ++x) {
      Vec v(n, top);
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) v = meet(v, neighborhood(coverings[i], x, n, top));
      out.insert(v);
    }
    return out;
  };
  const Mask full = (Mask(1) << m) - 1;
  const auto whole = inter(full);
  std::vector<bool> sat(full + 1, false);
  for (Mask mask = 1; mask <= full; ++mask) sat[mask] = inter(mask) == whole;
  Reducts r;
  for (Mask mask = 1; mask <= full; ++mask) {
    if (!sat[mask]) continue;
    bool minimal = true;
    for (Mask sub = (mask - 1) & mask; sub != 0 && minimal; sub = (sub - 1) & mask) minimal = !sat[sub];
    if (minimal) r.reducts.push_back(mask);
  }
  for (std::size_t i = 0; i < m; ++i) {
    Mask rest = full & ~(Mask(1) << i);
    if (rest != 0 && sat[rest])
      r.superfluous |= Mask(1) << i;
    else
      r.core |= Mask(1) << i;
  }
  return r;
}

}  // namespace fcov::verify::oracle
