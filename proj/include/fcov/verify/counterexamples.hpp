#pragma once

#include <string>
#include <vector>

#include "fcov/approximation.hpp"
#include "fcov/covering.hpp"
#include "fcov/verify/check.hpp"
#include "fcov/verify/golden.hpp"
#include "fcov/verify/oracles.hpp"
#include "fcov/verify/sample_data.hpp"

namespace fcov::verify {

// Each check passes only when the listed non-property actually fails on its witness.
inline std::vector<Check> counterexample_checks() {
  using namespace sample;
  std::vector<Check> out;
  detail::GoldenLog g(out);

  auto c11 = members({13, 14, 15, 16});
  auto x11 = set4({"0.4", "0", "0.1", "0.5"});
  auto y11 = set4({"0", "0.5", "0.5", "0"});

  g.start("cx.upper-universe", "upper(U) differs from U");
  g.guarded([&] { g.expect(!(upper_approx(c11, FuzzySet::full(u4())) == FuzzySet::full(u4())), "upper(U) = U"); });

  g.start("cx.upper-union", "upper(X u Y) not inside upper(X) u upper(Y)");
  g.guarded([&] {
    g.expect(!fs_subset(upper_approx(c11, fs_union(x11, y11)), fs_union(upper_approx(c11, x11), upper_approx(c11, y11))),
             "upper(X u Y) is contained");
  });

  g.start("cx.upper-extensive", "X not inside upper(X)");
  g.guarded([&] { g.expect(!fs_subset(x11, upper_approx(c11, x11)), "X is contained"); });

  g.start("cx.fixed-point-converse", "converses of the fixed-point statements fail");
  g.guarded([&] {
    auto c = members({17, 18, 19, 20});
    auto fam = oracle::raw(c);
    auto x = set4({"0.5", "0.5", "0.5", "0.5"});
    auto p = approximate(c, x);
    g.expect(p.lower == p.upper && !(p.lower == x), "lower(X) = upper(X) should hold with lower(X) != X");
    auto y = set4({"0.1", "0.1", "0.1", "0.1"});
    g.expect(upper_approx(c, y) == y, "upper(Y) = Y");
    g.expect(!oracle::is_union_of_members(fam, oracle::raw(y)), "Y should not be a union of members");
    g.expect(!(lower_approx(c, y) == y), "lower(Y) should differ from Y");
  });

  g.start("cx.lower-vs-induced", "lower approximation against C not inside that against Cov(C)");
  g.guarded([&] {
    auto c = members({21, 22, 23});
    auto x = set4({"0.2", "0.5", "0.6", "0"});
    g.expect(!fs_subset(lower_approx(c, x), lower_approx(induced_covering(c), x)), "lower_C(X) is contained");
  });

  g.start("cx.upper-vs-neighborhoods", "upper approximation not inside the neighborhood union");
  g.guarded([&] {
    auto c = members({17, 18, 19, 20});
    auto x = set4({"0.2", "0.2", "0.2", "0.2"});
    g.expect(!fs_subset(upper_approx(c, x), neighborhood_union(c, x)), "upper(X) is contained");
  });

  g.start("cx.bound-vs-upper", "subcovering bound not inside the upper approximation");
  g.guarded([&] {
    auto c = members({24, 25, 26});
    auto x = set4({"0.1", "0", "0.2", "0"});
    g.expect(!fs_subset(subcovering_bound(c, x), upper_approx(c, x)), "bound is contained");
  });

  g.start("cx.upper-vs-is", "upper approximation against C not inside that against IS(C)");
  g.guarded([&] {
    auto c = members({32, 33, 34, 35, 36, 37, 38, 39});
    auto x = set4({"0.4", "0.2", "0", "0"});
    g.expect(!fs_subset(upper_approx(c, x), upper_approx(reduce_intersections(c), x)), "upper_C(X) is contained");
  });

  g.start("cx.upper-union-covering", "upper approximation on a union not inside that on a part");
  g.guarded([&] {
    auto c1 = members({21, 22, 23});
    auto c2 = induced_covering(c1);
    auto x = set4({"0.2", "0.5", "0.6", "0.1"});
    g.expect(!fs_subset(upper_approx(covering_union(c1, c2), x), upper_approx(c2, x)), "upper_union(X) is contained");
  });

  g.start("cx.upper-intersection-covering", "upper approximation on a part not inside that on the intersection");
  g.guarded([&] {
    auto c1 = members({21, 22, 23});
    auto c2 = make_covering(u4(), {{"D", set4({"0.2", "0.1", "0.4", "0.5"})}});
    auto x = set4({"0.2", "0.4", "0.5", "0.5"});
    auto inter = upper_approx(covering_intersection(c1, c2), x);
    g.expect(!fs_subset(upper_approx(c1, x), inter), "upper_C1(X) is contained");
    g.expect(!fs_subset(upper_approx(c2, x), inter), "upper_C2(X) is contained");
  });

  return out;
}

}  // namespace fcov::verify
