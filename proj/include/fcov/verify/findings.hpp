#pragma once

// Searches for statements that are reported, never asserted. Every check here
// has verdict `info`; the detail line carries the counts and a witness.

#include <string>
#include <vector>

#include "fcov/infosys.hpp"
#include "fcov/relation.hpp"
#include "fcov/verify/compression.hpp"
#include "fcov/verify/generators.hpp"
#include "fcov/verify/properties.hpp"

namespace fcov::verify {

namespace detail {

inline Check finding(std::string id, std::string title, std::size_t cases, std::string detail) {
  return {std::move(id), std::move(title), Verdict::info, cases, std::move(detail)};
}

}  // namespace detail

inline std::vector<Check> finding_checks(const SuiteOptions& o) {
  using detail::show;
  std::vector<Check> out;

  {
    Generator gen(detail::salt(o.seed, "finding-image"));
    std::size_t bad = 0;
    std::string witness;
    for (std::size_t t = 0; t < o.cases; ++t) {
      Universe u = gen.universe(o.max_elements);
      PointMapping f = gen.mapping(u, gen.uniform(1, u.size()));
      FuzzyCovering a = gen.covering(u, o.max_members), b = gen.covering(u, o.max_members);
      auto lhs = image_covering(f, covering_intersection(a, b));
      auto rhs = covering_intersection(image_covering(f, a), image_covering(f, b));
      if (!is_coarser(lhs, rhs)) {
        if (!bad++) {
          witness = "f=[";
          for (auto y : f.image()) witness += std::to_string(y);
          witness += "] " + show(a) + " " + show(b);
        }
      }
    }
    out.push_back(detail::finding("finding.image-meet", "f(C1 n C2) finer than f(C1) n f(C2) without consistency", o.cases,
                                  std::to_string(bad) + " counterexamples" + (bad ? ", first " + witness : "")));
  }

  {
    Generator gen(detail::salt(o.seed, "finding-delta"));
    std::size_t bad = 0, coarser = 0;
    for (std::size_t t = 0; t < o.cases; ++t) {
      Universe u = gen.universe(o.max_elements);
      FuzzyCoveringSystem s = gen.system(u, 4, o.max_members);
      Partition p = family_partition(s);
      std::vector<std::size_t> image(u.size());
      for (std::size_t x = 0; x < u.size(); ++x) image[x] = p.block_of(x);
      PointMapping f(u, Universe::indexed(p.block_count(), "y"), std::move(image));
      bool ok = true;
      for (const auto& nc : s.coverings()) ok &= is_consistent(f, nc.covering);
      bad += !ok;
      coarser += p.block_count() < homomorphism_partition(s).block_count();
    }
    out.push_back(detail::finding("finding.neighborhood-map", "mapping collapsing neighborhood-equality blocks is consistent", o.cases,
                                  std::to_string(bad) + " systems with an inconsistent map; " + std::to_string(coarser) +
                                      " where the value kernel is strictly finer"));
  }

  {
    Generator gen(detail::salt(o.seed, "finding-core"));
    std::size_t bad = 0;
    for (std::size_t t = 0; t < o.cases; ++t) {
      Universe u = gen.universe(o.max_elements);
      auto rep = reduct_report(gen.system(u, 4, o.max_members));
      bad += !rep.core_matches_reducts;
    }
    out.push_back(detail::finding("finding.core", "core equals the intersection of all reducts", o.cases,
                                  std::to_string(bad) + " mismatches"));
  }

  {
    Generator gen(detail::salt(o.seed, "finding-neighborhood"));
    std::size_t premise = 0, bad = 0;
    std::string witness;
    for (std::size_t t = 0; t < o.cases; ++t) {
      Universe u = gen.universe(std::min<std::size_t>(o.max_elements, 4));
      FuzzyCovering a = gen.covering(u, 4);
      FuzzyCovering b = gen.chance(50) ? induced_covering(a) : gen.covering(u, 4);
      bool same = true;
      for (const auto* c : {&a, &b})
        for (const auto& m : c->members()) same &= upper_approx(a, m.set) == upper_approx(b, m.set);
      if (!same) continue;
      ++premise;
      if (!(neighborhoods(a) == neighborhoods(b)) && !bad++) witness = show(a) + " " + show(b);
    }
    out.push_back(detail::finding("finding.upper-neighborhoods", "equal member upper approximations give equal neighborhoods", o.cases,
                                  std::to_string(premise) + " pairs met the premise, " + std::to_string(bad) +
                                      " counterexamples" + (bad ? ", first " + witness : "")));
  }

  {
    Universe u = Universe::indexed(2);
    auto run = [&](std::initializer_list<std::string_view> m1, std::initializer_list<std::string_view> m2) {
      FuzzyCovering c = make_covering(u, {{"C1", make_fuzzy_set(u, m1)}, {"C2", make_fuzzy_set(u, m2)}});
      auto nr = relation_from_neighborhoods(c);
      auto chk = relation_checks(nr.relation);
      return "alpha=" + format_grade(nr.alpha) + " symmetric=" + (chk.symmetric ? "yes" : "no");
    };
    out.push_back(detail::finding("finding.symmetry", "neighborhood relations need not be symmetric", 2,
                                  "{[.5,.5],[0,.5]}: " + run({"0.5", "0.5"}, {"0", "0.5"}) +
                                      "; {[1,1],[0,1]}: " + run({"1", "1"}, {"0", "1"})));
  }
  return out;
}

}  // namespace fcov::verify
