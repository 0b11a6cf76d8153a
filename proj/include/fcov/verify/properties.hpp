#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fcov/approximation.hpp"
#include "fcov/covering.hpp"
#include "fcov/infosys.hpp"
#include "fcov/mapping.hpp"
#include "fcov/relation.hpp"
#include "fcov/verify/check.hpp"
#include "fcov/verify/generators.hpp"
#include "fcov/verify/oracles.hpp"

namespace fcov::verify {

struct SuiteOptions {
  std::uint64_t seed = 20240501;
  std::size_t cases = 1000;
  std::size_t max_elements = 6;
  std::size_t max_members = 5;
};

namespace detail {

inline std::uint64_t salt(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : id) h = (h ^ std::uint8_t(c)) * 1099511628211ull;
  return seed ^ h;
}

inline std::string show(const FuzzySet& s) { return to_string(s); }

inline std::string show(const FuzzyCovering& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + to_string(c.set(i));
  return s + "}";
}

inline FuzzyCovering without(const FuzzyCovering& c, std::size_t i) {
  std::vector<Member> ms;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (j != i) ms.push_back(c.member(j));
  return FuzzyCovering::make(c.universe(), std::move(ms));
}

inline std::set<oracle::Vec> vectors(const FuzzyCovering& c) {
  auto f = oracle::raw(c);
  return {f.begin(), f.end()};
}

// Random sets plus every member, so fixed points are exercised.
inline std::vector<FuzzySet> probe_sets(Generator& gen, const FuzzyCovering& c, std::size_t randoms) {
  std::vector<FuzzySet> xs;
  for (const auto& m : c.members()) xs.push_back(m.set);
  for (std::size_t i = 0; i < randoms; ++i) xs.push_back(gen.set(c.universe()));
  xs.push_back(FuzzySet::empty(c.universe(), gen.denominator()));
  xs.push_back(FuzzySet::full(c.universe(), gen.denominator()));
  return xs;
}

}  // namespace detail

inline std::vector<Check> approximation_properties(const SuiteOptions& o) {
  using detail::show;
  std::vector<Property> p9;
  for (int k = 1; k <= 8; ++k) p9.emplace_back("", "");
  const char* ids9[] = {"approx.empty", "approx.universe", "approx.lower-in-upper", "approx.upper-join",
                        "approx.monotone", "approx.member-fixed", "approx.idempotent", "approx.compose"};
  for (int k = 0; k < 8; ++k) p9[k].raw().id = ids9[k];
  p9[0].raw().title = "approximations of the empty set are empty";
  p9[1].raw().title = "approximations of U lie inside U";
  p9[2].raw().title = "lower inside upper and inside X";
  p9[3].raw().title = "upper(X) u upper(Y) inside upper(X u Y)";
  p9[4].raw().title = "both approximations are monotone";
  p9[5].raw().title = "members are fixed points";
  p9[6].raw().title = "both approximations are idempotent";
  p9[7].raw().title = "upper(lower X) = lower X and lower(upper X) inside upper X";
  Property p316("approx.neighborhood-union", "neighborhood union inside the upper approximation");
  Property p312("approx.lower-fixed-points", "lower fixed points are exactly member unions and are upper fixed points");
  Property p344("is.neighborhood-union", "neighborhood union unchanged by IS and lower_IS inside lower");
  Property p337("red.adjoin-unions", "adjoining member unions leaves both approximations unchanged");
  Property p348("union.lower", "lower approximation of a part inside that of the union");

  Generator gen(detail::salt(o.seed, "approx"));
  for (std::size_t t = 0; t < o.cases; ++t) {
    Universe u = gen.universe(o.max_elements);
    FuzzyCovering c = gen.covering(u, o.max_members);
    FuzzySet x = gen.set(u), y0 = gen.set(u);
    FuzzySet y = fs_union(x, y0);
    FuzzySet empty = FuzzySet::empty(u, gen.denominator()), full = FuzzySet::full(u, gen.denominator());
    for (auto& p : p9) p.count();
    auto ctx = [&] { return show(c) + " X=" + show(x) + " Y=" + show(y); };

    p9[0].expect(lower_approx(c, empty) == empty && upper_approx(c, empty) == empty, ctx);
    p9[1].expect(fs_subset(lower_approx(c, full), full) && fs_subset(upper_approx(c, full), full), ctx);
    auto px = approximate(c, x), py = approximate(c, y), py0 = approximate(c, y0);
    p9[2].expect(fs_subset(px.lower, px.upper) && fs_subset(px.lower, x), ctx);
    p9[3].expect(fs_subset(fs_union(px.upper, py0.upper), upper_approx(c, fs_union(x, y0))), ctx);
    p9[4].expect(fs_subset(px.lower, py.lower) && fs_subset(px.upper, py.upper), ctx);
    bool fixed = true;
    for (const auto& m : c.members()) fixed &= lower_approx(c, m.set) == m.set && upper_approx(c, m.set) == m.set;
    p9[5].expect(fixed, ctx);
    p9[6].expect(lower_approx(c, px.lower) == px.lower && upper_approx(c, px.upper) == px.upper, ctx);
    p9[7].expect(upper_approx(c, px.lower) == px.lower && fs_subset(lower_approx(c, px.upper), px.upper), ctx);

    p316.count();
    p316.expect(fs_subset(neighborhood_union(c, x), px.upper), ctx);

    p312.count();
    {
      auto fam = oracle::raw(c);
      // Half the probes are exact unions of a random subfamily.
      FuzzySet z = x;
      if (gen.chance(50)) {
        z = empty;
        for (const auto& m : c.members())
          if (gen.chance(50)) z = fs_union(z, m.set);
      }
      auto pz = approximate(c, z);
      bool is_union = oracle::is_union_of_members(fam, oracle::raw(z));
      p312.expect((pz.lower == z) == is_union, [&] { return "lower(Z)=Z vs union oracle on " + show(c) + " Z=" + show(z); });
      if (pz.lower == z) p312.expect(pz.upper == z, [&] { return "upper(Z) != Z on " + show(c) + " Z=" + show(z); });
    }

    p344.count();
    {
      FuzzyCovering is = reduce_intersections(c);
      p344.expect(neighborhood_union(c, x) == neighborhood_union(is, x) && fs_subset(lower_approx(is, x), px.lower),
                  [&] { return ctx() + " IS=" + show(is); });
    }

    p337.count();
    {
      std::vector<Member> ms(c.members().begin(), c.members().end());
      for (int e = 0; e < 3; ++e) {
        FuzzySet z = FuzzySet::empty(u, c.denominator());
        for (const auto& m : c.members())
          if (gen.chance(50)) z = fs_union(z, m.set);
        if (!z.is_empty()) ms.push_back({"U" + std::to_string(e), z});
      }
      FuzzyCovering grown = FuzzyCovering::build(u, std::move(ms), false);
      auto pg = approximate(grown, x);
      p337.expect(pg.lower == px.lower && pg.upper == px.upper, [&] { return ctx() + " grown=" + show(grown); });
    }

    p348.count();
    {
      FuzzyCovering d = gen.covering(u, o.max_members);
      FuzzySet both = lower_approx(covering_union(c, d), x);
      p348.expect(fs_subset(px.lower, both) && fs_subset(lower_approx(d, x), both),
                  [&] { return ctx() + " D=" + show(d); });
    }
  }

  std::vector<Check> out;
  for (auto& p : p9) out.push_back(p.result());
  for (auto* p : {&p316, &p312, &p344, &p337, &p348}) out.push_back(p->result());
  return out;
}

inline std::vector<Check> neighborhood_properties(const SuiteOptions& o) {
  using detail::show;
  Property p32("neighborhood.monotone", "neighborhood monotonicity and mutual positivity");
  Property pcov("neighborhood.induced", "induced covering matches direct neighborhood evaluation");
  Property pfam("neighborhood.family", "family neighborhoods: fold of per-covering neighborhoods, monotone");
  Generator gen(detail::salt(o.seed, "neighborhood"));
  for (std::size_t t = 0; t < o.cases; ++t) {
    Universe u = gen.universe(o.max_elements);
    FuzzyCovering c = gen.covering(u, o.max_members);
    const std::size_t n = u.size();
    const int top = int(c.denominator());
    auto hoods = neighborhoods(c);
    auto fam = oracle::raw(c);
    p32.count();
    pcov.count();
    std::set<oracle::Vec> want;
    for (std::size_t x = 0; x < n; ++x) {
      want.insert(oracle::neighborhood(fam, x, n, top));
      for (std::size_t y = 0; y < n; ++y) {
        if (!hoods[x].positive_at(y)) continue;
        p32.expect(fs_subset(hoods[y], hoods[x]), [&] { return show(c) + " at " + u.label(x) + "," + u.label(y); });
        if (hoods[y].positive_at(x))
          p32.expect(hoods[x] == hoods[y], [&] { return show(c) + " mutual " + u.label(x) + "," + u.label(y); });
      }
    }
    pcov.expect(detail::vectors(induced_covering(c)) == want, [&] { return show(c); });

    pfam.count();
    std::size_t m = gen.uniform(1, 3);
    std::vector<NamedCovering> cs{{"A1", c}};
    for (std::size_t i = 1; i < m; ++i) cs.push_back({"A" + std::to_string(i + 1), gen.covering(u, o.max_members)});
    CoveringFamily d(u, cs);
    std::vector<const FuzzyCovering*> ptrs;
    for (const auto& nc : d.coverings()) ptrs.push_back(&nc.covering);
    auto delta = family_neighborhoods(ptrs);
    std::set<oracle::Vec> want_delta;
    for (std::size_t x = 0; x < n; ++x) {
      oracle::Vec v(n, top);
      for (const auto& nc : d.coverings()) v = oracle::meet(v, oracle::neighborhood(oracle::raw(nc.covering), x, n, top));
      want_delta.insert(v);
      pfam.expect(oracle::raw(delta[x]) == v, [&] { return "delta at " + u.label(x); });
      for (std::size_t y = 0; y < n; ++y)
        if (delta[x].positive_at(y)) pfam.expect(fs_subset(delta[y], delta[x]), "delta monotonicity");
    }
    pfam.expect(detail::vectors(induced_family_covering(d)) == want_delta, "Cov(family) vectors");
  }
  return {p32.result(), pcov.result(), pfam.result()};
}

inline std::vector<Check> subcovering_properties(const SuiteOptions& o) {
  using detail::show;
  Property pfc("subcover.enumeration", "subcovering enumeration matches the exhaustive oracle");
  Property p321("subcover.chain", "neighborhood union inside upper inside subcovering bound (oracle bound)");
  Property p323("subcover.without-full", "bound unchanged without the full covering when there are two or more subcoverings");
  Generator gen(detail::salt(o.seed, "subcovering"));
  for (std::size_t t = 0; t < o.cases; ++t) {
    Universe u = gen.universe(o.max_elements);
    FuzzyCovering c = gen.covering(u, 6);
    FuzzySet top = FuzzySet::empty(u, c.denominator());
    for (const auto& m : c.members()) top = fs_union(top, m.set);
    FuzzySet x = fs_intersect(gen.set(u), top);
    auto fam = oracle::raw(c);
    auto ctx = [&] { return show(c) + " X=" + show(x); };

    pfc.count();
    auto got = subcoverings(c, x);
    auto want = oracle::subcoverings(fam, oracle::raw(x));
    std::set<IndexSet> want_sets;
    for (auto mask : want) {
      IndexSet s;
      for (std::size_t i = 0; i < fam.size(); ++i)
        if (mask >> i & 1) s.push_back(i);
      want_sets.insert(s);
    }
    pfc.expect(std::set<IndexSet>(got.begin(), got.end()) == want_sets && got.size() == want.size(), ctx);

    p321.count();
    FuzzySet bound = subcovering_bound(c, x);
    auto up = upper_approx(c, x);
    p321.expect(oracle::raw(bound) == oracle::subcovering_bound(fam, oracle::raw(x), int(c.denominator())),
                [&] { return ctx() + " bound=" + show(bound); });
    p321.expect(fs_subset(neighborhood_union(c, x), up) && fs_subset(up, bound), ctx);

    p323.count();
    if (want.size() >= 2) {
      oracle::Vec r(x.size(), int(c.denominator()));
      oracle::Mask full = (oracle::Mask(1) << fam.size()) - 1;
      for (auto mask : want)
        if (mask != full) r = oracle::meet(r, oracle::union_of(fam, mask, x.size()));
      p323.expect(r == oracle::raw(bound), ctx);
    }
  }
  return {pfc.result(), p321.result(), p323.result()};
}

inline std::vector<Check> reduction_properties(const SuiteOptions& o) {
  using detail::show;
  Property p325("red.still-covers", "removing a reducible member leaves a covering");
  Property p328("red.approx-invariant", "approximations invariant under removing reducible members and under RED");
  Property p338("red.neighborhood-invariant", "neighborhoods invariant under removing reducible members and under RED");
  Property p327("red.order-free", "RED is independent of removal order and idempotent");
  Property p346("is.order-free", "IS is independent of removal order and idempotent");
  Generator gen(detail::salt(o.seed, "reduction"));
  for (std::size_t t = 0; t < o.cases; ++t) {
    Universe u = gen.universe(o.max_elements);
    FuzzyCovering c = gen.covering(u, o.max_members);
    auto xs = detail::probe_sets(gen, c, 4);
    auto hoods = neighborhoods(c);
    auto fam = oracle::raw(c);
    const int top = int(c.denominator());

    p325.count();
    p328.count();
    p338.count();
    auto same_approx = [&](const FuzzyCovering& d) {
      for (const auto& x : xs) {
        auto a = approximate(c, x), b = approximate(d, x);
        if (!(a.lower == b.lower) || !(a.upper == b.upper)) return false;
      }
      return true;
    };
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!is_reducible(c, i)) continue;
      try {
        FuzzyCovering d = detail::without(c, i);
        p328.expect(same_approx(d), [&] { return show(c) + " minus " + show(c.set(i)); });
        p338.expect(neighborhoods(d) == hoods, [&] { return show(c) + " minus " + show(c.set(i)); });
      } catch (const Error& e) {
        p325.expect(false, [&] { return show(c) + " minus " + show(c.set(i)) + ": " + e.what(); });
      }
    }
    FuzzyCovering red = reduce_covering(c);
    p328.expect(same_approx(red), [&] { return show(c) + " RED=" + show(red); });
    p338.expect(neighborhoods(red) == hoods, [&] { return show(c) + " RED=" + show(red); });

    p327.count();
    auto ends = oracle::all_removal_fixpoints(fam, true, top);
    p327.expect(ends.size() == 1 && oracle::as_set(oracle::select(fam, *ends.begin())) == detail::vectors(red),
                [&] { return show(c) + " RED=" + show(red) + " fixpoints=" + std::to_string(ends.size()); });
    p327.expect(reduce_covering(red) == red, [&] { return "RED not idempotent on " + show(c); });

    p346.count();
    FuzzyCovering is = reduce_intersections(c);
    auto ends_is = oracle::all_removal_fixpoints(fam, false, top);
    p346.expect(ends_is.size() == 1 && oracle::as_set(oracle::select(fam, *ends_is.begin())) == detail::vectors(is),
                [&] { return show(c) + " IS=" + show(is) + " fixpoints=" + std::to_string(ends_is.size()); });
    p346.expect(reduce_intersections(is) == is, [&] { return "IS not idempotent on " + show(c); });
  }
  return {p325.result(), p328.result(), p338.result(), p327.result(), p346.result()};
}

inline std::vector<Check> equivalence_properties(const SuiteOptions& o) {
  using detail::show;
  Property p334("red.equivalence", "equal RED iff equal lower approximations on all sampled X");
  Property p318("approx.lower-determines-upper", "equal lower approximations imply equal upper approximations");
  Generator gen(detail::salt(o.seed, "equivalence"));
  std::size_t equal_pairs = 0;
  for (std::size_t t = 0; t < o.cases; ++t) {
    Universe u = gen.universe(o.max_elements);
    FuzzyCovering a = gen.covering(u, o.max_members);
    FuzzyCovering b = a;
    int mode = int(gen.uniform(0, 2));
    if (mode == 0) {
      // Same irreducible core with a different set of unions adjoined.
      FuzzyCovering red = reduce_covering(a);
      std::vector<Member> ms(red.members().begin(), red.members().end());
      for (int e = 0; e < 3; ++e) {
        FuzzySet z = FuzzySet::empty(u, a.denominator());
        for (const auto& m : red.members())
          if (gen.chance(50)) z = fs_union(z, m.set);
        if (!z.is_empty()) ms.push_back({"U" + std::to_string(e), z});
      }
      b = FuzzyCovering::build(u, std::move(ms), false);
    } else if (mode == 1) {
      b = gen.covering(u, o.max_members);
    } else {
      // One member nudged.
      std::vector<Member> ms(a.members().begin(), a.members().end());
      auto& s = ms[gen.uniform(0, ms.size() - 1)].set;
      std::vector<std::uint32_t> v(s.numerators().begin(), s.numerators().end());
      std::size_t x = gen.uniform(0, v.size() - 1);
      v[x] = v[x] == a.denominator() ? v[x] - 1 : v[x] + 1;
      s = FuzzySet(u, a.denominator(), std::move(v));
      try {
        b = FuzzyCovering::build(u, std::move(ms), false);
      } catch (const Error&) {
        b = a;
      }
    }
    std::vector<FuzzySet> xs = detail::probe_sets(gen, a, 6);
    for (const auto& m : b.members()) xs.push_back(m.set);

    bool same_red = covering_equal(reduce_covering(a), reduce_covering(b));
    bool same_lower = true, same_upper = true;
    for (const auto& x : xs) {
      auto pa = approximate(a, x), pb = approximate(b, x);
      same_lower &= pa.lower == pb.lower;
      same_upper &= pa.upper == pb.upper;
    }
    equal_pairs += same_red;
    p334.count();
    p334.expect(same_red == same_lower, [&] { return show(a) + " vs " + show(b); });
    p318.count();
    if (same_lower) p318.expect(same_upper, [&] { return show(a) + " vs " + show(b); });
  }
  auto r = p334.result();
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(equal_pairs) + " pairs with equal RED";
  return {r, p318.result()};
}

inline std::vector<Check> lattice_properties(const SuiteOptions& o) {
  using detail::show;
  Property p352("lattice.meet-is-induced", "intersection of coverings equals Cov of their union");
  std::vector<Property> p355;
  const char* titles[] = {"C1 u C1 = C1",
                          "C1 n C1 is finer than C1",
                          "union commutes",
                          "intersection commutes",
                          "union associates",
                          "intersection associates",
                          "C1 u (C1 n C2) is finer than C1",
                          "C1 n (C1 u C2) is finer than C1"};
  const char* ids[] = {"lattice.union-idempotent", "lattice.meet-self-finer", "lattice.union-commutes",
                       "lattice.meet-commutes",    "lattice.union-associates", "lattice.meet-associates",
                       "lattice.absorb-union",     "lattice.absorb-meet"};
  for (int k = 1; k <= 8; ++k) p355.emplace_back(ids[k - 1], titles[k - 1]);
  Generator gen(detail::salt(o.seed, "lattice"));
  for (std::size_t t = 0; t < o.cases; ++t) {
    Universe u = gen.universe(o.max_elements);
    FuzzyCovering a = gen.covering(u, o.max_members), b = gen.covering(u, o.max_members),
                  c = gen.covering(u, o.max_members);
    auto ctx = [&] { return show(a) + " " + show(b) + " " + show(c); };
    p352.count();
    p352.expect(covering_equal(covering_intersection(a, b), induced_covering(covering_union(a, b))), ctx);
    for (auto& p : p355) p.count();
    p355[0].expect(covering_equal(covering_union(a, a), a), ctx);
    p355[1].expect(is_coarser(covering_intersection(a, a), a), ctx);
    p355[2].expect(covering_equal(covering_union(a, b), covering_union(b, a)), ctx);
    p355[3].expect(covering_equal(covering_intersection(a, b), covering_intersection(b, a)), ctx);
    p355[4].expect(covering_equal(covering_union(covering_union(a, b), c), covering_union(a, covering_union(b, c))), ctx);
    p355[5].expect(covering_equal(covering_intersection(covering_intersection(a, b), c),
                                  covering_intersection(a, covering_intersection(b, c))),
                   ctx);
    p355[6].expect(is_coarser(covering_union(a, covering_intersection(a, b)), a), ctx);
    p355[7].expect(is_coarser(covering_intersection(a, covering_union(a, b)), a), ctx);
  }
  std::vector<Check> out{p352.result()};
  for (auto& p : p355) out.push_back(p.result());
  return out;
}

// Every covering of a two-element universe on the grid {0, 1/2, 1}: unions and
// intersections of any two are again coverings.
inline Check closure_property() {
  Property p("lattice.closure", "union and intersection of coverings stay coverings (|U|=2, D=2, exhaustive)");
  Universe u = Universe::indexed(2);
  std::vector<FuzzySet> vs;
  for (std::uint32_t a = 0; a <= 2; ++a)
    for (std::uint32_t b = 0; b <= 2; ++b)
      if (a + b > 0) vs.push_back(FuzzySet(u, 2, {a, b}));
  std::vector<FuzzyCovering> all;
  for (std::uint32_t mask = 1; mask < (1u << vs.size()); ++mask) {
    std::vector<Member> ms;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask >> i & 1) ms.push_back({"C" + std::to_string(i), vs[i]});
    try {
      all.push_back(FuzzyCovering::make(u, std::move(ms)));
    } catch (const Error&) {
    }
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      p.count();
      try {
        (void)covering_union(a, b);
        (void)covering_intersection(a, b);
      } catch (const Error& e) {
        p.expect(false, [&] { return std::string(e.what()); });
      }
    }
  return p.result();
}

inline std::vector<Check> mapping_properties(const SuiteOptions& o) {
  using detail::show;
  Property p46a("image.meet-contained", "f(Ci n Cj) inside f(Ci) n f(Cj)");
  Property p46b("image.join", "f(Ci u Cj) = f(Ci) u f(Cj)");
  Property p46c("image.meet-consistent", "f(Ci n Cj) = f(Ci) n f(Cj) under consistency");
  Property p48("image.meet-all", "consistent f preserves the intersection of all members");
  Property p49a("preimage.contains", "C inside the preimage of its image");
  Property p49b("preimage.recovers", "C equals the preimage of its image under consistency");
  Property p412("consistency.meet", "consistency passes to intersections of coverings");
  Property p416("preimage.covering", "preimage of image recovers a covering and a family intersection under consistency");
  Property p418("image.covering-meet", "image of an intersection equals intersection of images under consistency");
  Generator gen(detail::salt(o.seed, "mapping"));
  std::size_t consistent_cases = 0;
  for (std::size_t t = 0; t < o.cases; ++t) {
    Universe u = gen.universe(o.max_elements);
    PointMapping f = gen.mapping(u, gen.uniform(1, u.size()));
    bool make_consistent = gen.chance(60);
    FuzzyCovering c = make_consistent ? gen.consistent_covering(f, o.max_members) : gen.covering(u, o.max_members);
    bool consistent = is_consistent(f, c);
    consistent_cases += consistent;
    auto ctx = [&] {
      std::string s = "f=[";
      for (auto y : f.image()) s += std::to_string(y);
      return s + "] C=" + show(c);
    };

    p46a.count();
    p46b.count();
    p46c.count();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) {
        auto fi = image_set(f, c.set(i)), fj = image_set(f, c.set(j));
        auto lhs = image_set(f, fs_intersect(c.set(i), c.set(j)));
        p46a.expect(fs_subset(lhs, fs_intersect(fi, fj)), ctx);
        p46b.expect(image_set(f, fs_union(c.set(i), c.set(j))) == fs_union(fi, fj), ctx);
        if (consistent) p46c.expect(lhs == fs_intersect(fi, fj), ctx);
      }
    p48.count();
    if (consistent) {
      FuzzySet all = FuzzySet::full(u, c.denominator());
      FuzzySet imgs = FuzzySet::full(f.target(), c.denominator());
      for (const auto& m : c.members()) {
        all = fs_intersect(all, m.set);
        imgs = fs_intersect(imgs, image_set(f, m.set));
      }
      p48.expect(image_set(f, all) == imgs, ctx);
    }

    p49a.count();
    p49b.count();
    for (const auto& m : c.members()) {
      auto back = preimage_set(f, image_set(f, m.set));
      p49a.expect(fs_subset(m.set, back), ctx);
      if (consistent) p49b.expect(back == m.set, ctx);
    }

    FuzzyCovering d = make_consistent ? gen.consistent_covering(f, o.max_members) : gen.covering(u, o.max_members);
    bool both = consistent && is_consistent(f, d);
    p412.count();
    if (both) p412.expect(is_consistent(f, covering_intersection(c, d)), [&] { return ctx() + " D=" + show(d); });

    p416.count();
    if (consistent) p416.expect(covering_equal(preimage_covering(f, image_covering(f, c)), c), ctx);
    if (both) {
      FuzzyCoveringSystem s(u, {{"C", c}, {"D", d}});
      FuzzyCovering inter = family_intersection(s);
      p416.expect(covering_equal(preimage_covering(f, image_covering(f, inter)), inter),
                  [&] { return ctx() + " D=" + show(d); });
    }

    p418.count();
    if (both) {
      p418.expect(covering_equal(image_covering(f, covering_intersection(c, d)),
                                 covering_intersection(image_covering(f, c), image_covering(f, d))),
                  [&] { return ctx() + " D=" + show(d); });
    }
  }
  auto tag = [&](Property& p) {
    Check r = p.result();
    if (r.ok()) r.detail = std::to_string(consistent_cases) + " consistent instances";
    return r;
  };
  return {p46a.result(), p46b.result(), tag(p46c), tag(p48), p49a.result(), tag(p49b), tag(p412), tag(p416), tag(p418)};
}

inline std::vector<Check> relation_properties(const SuiteOptions& o) {
  using detail::show;
  Property p("relation.neighborhood", "neighborhood relation is alpha-reflexive and min-transitive; round trip is idempotent");
  Generator gen(detail::salt(o.seed, "relation"));
  for (std::size_t t = 0; t < o.cases; ++t) {
    Universe u = gen.universe(o.max_elements);
    FuzzyCovering c = gen.covering(u, o.max_members);
    p.count();
    auto nr = relation_from_neighborhoods(c);
    auto chk = relation_checks(nr.relation);
    p.expect(chk.alpha_reflexive && *chk.alpha_reflexive == nr.alpha && chk.min_transitive, [&] { return show(c); });
    auto again = relation_from_neighborhoods(covering_from_relation(nr.relation));
    p.expect(again.relation == nr.relation, [&] { return "round trip on " + show(c); });
  }
  return {p.result()};
}

inline std::vector<Check> property_checks(const SuiteOptions& o = {}) {
  std::vector<Check> out;
  auto add = [&](std::vector<Check> cs) { out.insert(out.end(), cs.begin(), cs.end()); };
  add(neighborhood_properties(o));
  add(approximation_properties(o));
  add(subcovering_properties(o));
  add(reduction_properties(o));
  add(equivalence_properties(o));
  add(lattice_properties(o));
  out.push_back(closure_property());
  add(mapping_properties(o));
  add(relation_properties(o));
  return out;
}

}  // namespace fcov::verify
