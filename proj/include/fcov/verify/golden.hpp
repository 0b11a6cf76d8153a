#pragma once

#include <string>
#include <vector>

#include "fcov/approximation.hpp"
#include "fcov/covering.hpp"
#include "fcov/infosys.hpp"
#include "fcov/mapping.hpp"
#include "fcov/verify/check.hpp"
#include "fcov/verify/sample_data.hpp"

namespace fcov::verify {

namespace detail {

class GoldenLog {
 public:
  explicit GoldenLog(std::vector<Check>& out) : out_(out) {}

  void start(std::string id, std::string title) {
    out_.push_back(Check{std::move(id), std::move(title), Verdict::pass, 0, {}});
  }

  void expect(bool ok, const std::string& what) {
    Check& c = out_.back();
    ++c.cases;
    if (!ok && c.verdict == Verdict::pass) {
      c.verdict = Verdict::fail;
      c.detail = what;
    }
  }

  void same(const FuzzySet& got, const FuzzySet& want, const std::string& what) {
    expect(got == want, what + ": got " + to_string(got) + ", want " + to_string(want));
  }

  // Same vectors in the same order.
  void members(const FuzzyCovering& got, const std::vector<FuzzySet>& want, const std::string& what) {
    bool ok = got.size() == want.size();
    for (std::size_t i = 0; ok && i < want.size(); ++i) ok = got.set(i) == want[i];
    std::string shown;
    for (const auto& m : got.members()) shown += to_string(m.set) + " ";
    expect(ok, what + ": got " + shown);
  }

  void partition(const Partition& got, const std::vector<std::vector<std::size_t>>& want, const std::string& what) {
    Partition w = Partition::from_blocks(got.universe(), want);
    expect(got == w, what + ": got " + to_string(got) + ", want " + to_string(w));
  }

  template <class F>
  void guarded(F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, std::string("threw: ") + e.what());
    }
  }

 private:
  std::vector<Check>& out_;
};

}  // namespace detail

inline std::vector<Check> golden_checks() {
  using namespace sample;
  std::vector<Check> out;
  detail::GoldenLog g(out);

  g.start("houses.union", "union of two specialists' judgements is the high-price set");
  g.guarded([&] {
    g.same(fs_union(high_a(), high_b()), houses().get("price").set(0), "high*A u high*B");
    g.expect(houses().size() == 2 && houses().universe().size() == 8, "8 houses, 2 coverings");
  });

  g.start("induced.single", "induced covering of C'1..C'3");
  g.guarded([&] {
    g.members(induced_covering(primed_covering()), {set4({"0.5", "0.5", "0.5", "0.5"}), set4({"0", "0.5", "0", "0.5"})},
              "Cov");
  });

  g.start("induced.family", "induced covering of a family");
  g.guarded([&] {
    g.members(induced_family_covering(three_coverings()),
              {set4({"0.5", "0.5", "0.5", "0.5"}), set4({"0", "0", "0.5", "0.5"})}, "Cov(family)");
  });

  g.start("approx.four-member", "approximations on the four-member covering");
  g.guarded([&] {
    auto c = members({13, 14, 15, 16});
    auto full = FuzzySet::full(u4());
    auto x = set4({"0.4", "0", "0.1", "0.5"});
    auto y = set4({"0", "0.5", "0.5", "0"});
    auto want_u = set4({"0.3", "0.4", "0.5", "0.5"});
    g.same(lower_approx(c, full), want_u, "lower(U)");
    g.same(upper_approx(c, full), want_u, "upper(U)");
    g.same(upper_approx(c, x), set4({"0.3", "0", "0.5", "0.4"}), "upper(X)");
    g.same(upper_approx(c, y), set4({"0", "0.4", "0.5", "0"}), "upper(Y)");
    g.same(upper_approx(c, fs_union(x, y)), want_u, "upper(X u Y)");
  });

  g.start("neighborhood.lower-vs-induced", "neighborhoods of C21..C23 and lower approximations against Cov");
  g.guarded([&] {
    auto c = members({21, 22, 23});
    g.same(neighborhood(c, 0), set4({"0.1", "0", "0.2", "0"}), "N(x1)");
    g.same(neighborhood(c, 1), set4({"0.1", "0.1", "0.2", "0"}), "N(x2)");
    g.same(neighborhood(c, 2), set4({"0.1", "0", "0.2", "0"}), "N(x3)");
    g.same(neighborhood(c, 3), set4({"0.1", "0", "0.4", "0.5"}), "N(x4)");
    auto x = set4({"0.2", "0.5", "0.6", "0"});
    g.same(lower_approx(c, x), set4({"0.2", "0.4", "0.5", "0"}), "lower_C(X)");
    g.same(lower_approx(induced_covering(c), x), set4({"0.1", "0.1", "0.2", "0"}), "lower_Cov(X)");
  });

  g.start("neighborhood.union-gap", "neighborhood union strictly below the upper approximation");
  g.guarded([&] {
    auto c = members({17, 18, 19, 20});
    auto x = set4({"0.2", "0.2", "0.2", "0.2"});
    g.same(lower_approx(c, x), x, "lower(X)");
    g.same(upper_approx(c, x), x, "upper(X)");
    g.same(neighborhood_union(c, x), set4({"0.1", "0.1", "0.1", "0.1"}), "union of N(x)");
  });

  g.start("subcover.listing", "subcoverings and their bound");
  g.guarded([&] {
    auto c = members({24, 25, 26});
    auto x = set4({"0.1", "0", "0.2", "0"});
    std::vector<IndexSet> want{{0}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    g.expect(subcoverings(c, x) == want, "FC(X) = {C24},{C26},{C24,C25},{C24,C26},{C25,C26},{C24,C25,C26}");
    g.same(subcovering_bound(c, x), set4({"0.1", "0.1", "0.2", "0.1"}), "bound");
    g.same(upper_approx(c, x), set4({"0.1", "0.1", "0.1", "0.1"}), "upper(X)");
  });

  g.start("red.shared-residue", "irreducible residues of two coverings coincide");
  g.guarded([&] {
    auto c1 = members({17, 18, 19, 20, 27, 28});
    auto c2 = members({17, 18, 19, 20, 29, 30});
    auto base = members({17, 18, 19, 20});
    g.expect(is_reducible(c1, *c1.find("C27")), "C27 reducible");
    g.expect(!is_reducible(c1, *c1.find("C17")), "C17 irreducible");
    g.expect(covering_equal(reduce_covering(c1), base), "RED(C1) = {C17..C20}");
    g.expect(covering_equal(reduce_covering(c2), base), "RED(C2) = {C17..C20}");
    g.expect(covering_equal(reduce_covering(c1), reduce_covering(c2)), "RED(C1) = RED(C2)");
  });

  g.start("is.drop-one", "non-intersectional residue drops C31");
  g.guarded([&] {
    auto c = members({17, 18, 19, 20, 31});
    g.expect(is_intersectional(c, *c.find("C31")), "C31 intersectional");
    g.expect(!is_intersectional(c, *c.find("C17")), "C17 not intersectional");
    g.expect(covering_equal(reduce_intersections(c), members({17, 18, 19, 20})), "IS = {C17..C20}");
  });

  g.start("is.eight-member", "non-intersectional residue of C32..C39");
  g.guarded([&] {
    auto c = members({32, 33, 34, 35, 36, 37, 38, 39});
    auto is = reduce_intersections(c);
    g.expect(covering_equal(is, members({36, 37, 38, 39})), "IS = {C36..C39}");
    auto x = set4({"0.4", "0.2", "0", "0"});
    g.same(upper_approx(c, x), set4({"0.1", "0.2", "0", "0"}), "upper_C(X)");
    g.same(upper_approx(is, x), set4({"0.1", "0.1", "0", "0"}), "upper_IS(X)");
  });

  g.start("union.with-induced", "approximations on the union of a covering and its induced covering");
  g.guarded([&] {
    auto c1 = members({21, 22, 23});
    auto c2 = induced_covering(c1);
    auto un = covering_union(c1, c2);
    auto x = set4({"0.2", "0.5", "0.6", "0.1"});
    g.expect(un.size() == 4, "union has 4 distinct members");
    g.same(upper_approx(c1, x), set4({"0.2", "0.4", "0.5", "0.5"}), "upper_C1(X)");
    g.same(upper_approx(c2, x), set4({"0.1", "0.1", "0.4", "0.5"}), "upper_C2(X)");
    g.same(lower_approx(un, x), set4({"0.2", "0.4", "0.5", "0"}), "lower_union(X)");
    g.same(upper_approx(un, x), set4({"0.2", "0.4", "0.5", "0.5"}), "upper_union(X)");
  });

  g.start("intersection.lower", "lower approximation on an intersection of coverings");
  g.guarded([&] {
    auto c1 = members({21, 22, 23});
    auto c2 = make_covering(u4(), {{"D", set4({"0.2", "0.1", "0.4", "0.5"})}});
    auto x = set4({"0.2", "0.4", "0.5", "0.5"});
    g.same(lower_approx(covering_intersection(c1, c2), x), set4({"0.1", "0.1", "0.4", "0.5"}), "lower_(C1 n C2)(X)");
  });

  g.start("coarser", "coarser covering");
  g.guarded([&] { g.expect(is_coarser(members({21, 22, 23}), members({40, 41})), "{C40,C41} coarser than {C21,C22,C23}"); });

  g.start("roughness", "roughness measures");
  g.guarded([&] {
    auto c = members({21, 22, 23});
    auto x = set4({"0.2", "0.5", "0.6", "0.1"});
    auto p = approximate(c, x);
    g.same(p.lower, set4({"0.2", "0.4", "0.5", "0"}), "lower");
    g.same(p.upper, set4({"0.2", "0.4", "0.5", "0.5"}), "upper");
    g.expect(strict_alpha_cut(p.lower, parse_grade("0.4")) == IndexSet{2}, "lower cut at 0.4 = {x3}");
    g.expect(strict_alpha_cut(p.upper, parse_grade("0.2")) == IndexSet{1, 2, 3}, "upper cut at 0.2 = {x2,x3,x4}");
    g.expect(roughness(c, x) == Rational(5, 16), "mu = 5/16, got " + roughness(c, x).fraction());
    auto ab = roughness_ab(c, x, parse_grade("0.4"), parse_grade("0.2"));
    g.expect(ab == Rational(2, 3), "mu(0.4,0.2) = 2/3, got " + ab.fraction());
  });

  g.start("mapping.consistency", "consistency of point mappings");
  g.guarded([&] {
    auto c = primed_covering();
    g.partition(kernel_partition(alternating_map()), {{0, 2}, {1, 3}}, "kernel");
    g.expect(is_consistent(alternating_map(), c), "f consistent");
    g.expect(!is_consistent(paired_map(), c), "collapsing x1,x2 is not consistent");
  });

  g.start("mapping.image-meets", "images of member intersections under a consistent map");
  g.guarded([&] {
    auto c = primed_covering();
    auto f = alternating_map();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        g.same(image_set(f, fs_intersect(c.set(i), c.set(j))), fs_intersect(image_set(f, c.set(i)), image_set(f, c.set(j))),
               "f(Ci n Cj)");
  });

  g.start("mapping.round-trip", "preimage of image recovers each member");
  g.guarded([&] {
    auto c = primed_covering();
    auto f = alternating_map();
    for (const auto& m : c.members()) g.same(preimage_set(f, image_set(f, m.set)), m.set, m.name);
  });

  g.start("mapping.consistent-meet", "consistency passes to the intersection of coverings");
  g.guarded([&] {
    auto fam = three_coverings();
    auto f = paired_map();
    g.expect(is_consistent(f, fam.get("C1")), "consistent on C1");
    g.expect(is_consistent(f, fam.get("C2")), "consistent on C2");
    g.expect(is_consistent(f, covering_intersection(fam.get("C1"), fam.get("C2"))), "consistent on C1 n C2");
  });

  g.start("cars.compression", "compression and reducts of the car system");
  g.guarded([&] {
    auto s = cars();
    g.expect(s.get("appearance").size() == 2 && s.get("appearance").merged().size() == 1,
             "appearance keeps 2 members after merging the repeat");
    g.partition(covering_partition(s.get("price")), {{0, 1}, {2, 3, 4, 5, 6, 7}}, "U/price");
    g.partition(covering_partition(s.get("structure")), {{0, 1, 3, 6, 7}, {2, 4}, {5}}, "U/structure");
    g.partition(covering_partition(s.get("size")), {{0, 1, 2, 4, 5}, {3, 6, 7}}, "U/size");
    g.partition(covering_partition(s.get("appearance")), {{0, 1, 2, 3, 4, 5, 6, 7}}, "U/appearance");
    g.partition(family_partition(s), {{0, 1}, {2, 4}, {3, 6, 7}, {5}}, "U/family");

    auto r = build_homomorphism(s);
    std::vector<std::size_t> img(r.mapping.image().begin(), r.mapping.image().end());
    g.expect(img == std::vector<std::size_t>{0, 0, 1, 2, 1, 3, 2, 2}, "f: x1,x2->y1 x3,x5->y2 x4,x7,x8->y3 x6->y4");
    g.expect(r.image.universe().size() == 4, "four target elements");
    const Universe& t = r.image.universe();
    auto s4 = [&](std::initializer_list<std::string_view> v) { return make_fuzzy_set(t, v); };
    g.members(r.image.get("price"), {s4({"1", "0.5", "1", "1"}), s4({"0.5", "0.5", "1", "0.5"}), s4({"0", "1", "0.5", "1"})},
              "f(price)");
    g.members(r.image.get("structure"),
              {s4({"0", "1", "0", "0"}), s4({"1", "0.5", "1", "1"}), s4({"1", "0.5", "0.5", "0"})}, "f(structure)");
    g.members(r.image.get("size"), {s4({"1", "1", "0", "1"}), s4({"0.5", "1", "0.5", "0.5"}), s4({"1", "1", "1", "0.5"})},
              "f(size)");
    g.members(r.image.get("appearance"), {s4({"1", "0.5", "1", "1"}), s4({"1", "1", "1", "0.5"})}, "f(appearance)");

    auto rep = reduct_report(s);
    bool appearance_superfluous = false;
    for (const auto& n : rep.superfluous) appearance_superfluous |= n == "appearance";
    g.expect(appearance_superfluous, "appearance superfluous");
    bool found = false;
    for (const auto& red : rep.reducts) found |= red == std::vector<std::string>{"price", "structure", "size"};
    g.expect(found, "{price, structure, size} is a reduct");
    auto img_rep = reduct_report(r.image);
    found = false;
    for (const auto& red : img_rep.reducts) found |= red == std::vector<std::string>{"price", "structure", "size"};
    g.expect(found, "{price, structure, size} is a reduct of the image");
  });

  return out;
}

}  // namespace fcov::verify
