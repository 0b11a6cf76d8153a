#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fcov/infosys.hpp"
#include "fcov/verify/check.hpp"
#include "fcov/verify/generators.hpp"
#include "fcov/verify/oracles.hpp"
#include "fcov/verify/properties.hpp"

namespace fcov::verify {

namespace detail {

inline std::vector<oracle::Family> raw_family(const FuzzyCoveringSystem& s) {
  std::vector<oracle::Family> out;
  for (const auto& nc : s.coverings()) out.push_back(oracle::raw(nc.covering));
  return out;
}

inline std::vector<std::string> names_of(const FuzzyCoveringSystem& s, oracle::Mask mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (mask >> i & 1) out.push_back(s.coverings()[i].name);
  return out;
}

// x ~ y iff the family neighborhoods at x and y coincide, from the oracle.
inline Partition oracle_family_partition(const FuzzyCoveringSystem& s) {
  const std::size_t n = s.universe().size();
  const int top = int(s.coverings().front().covering.denominator());
  std::vector<oracle::Vec> keys;
  for (std::size_t x = 0; x < n; ++x) {
    oracle::Vec v(n, top);
    for (const auto& nc : s.coverings()) v = oracle::meet(v, oracle::neighborhood(oracle::raw(nc.covering), x, n, top));
    keys.push_back(v);
  }
  return Partition::by_key(s.universe(), keys);
}

inline std::string show(const FuzzyCoveringSystem& s) {
  std::string out;
  for (const auto& nc : s.coverings()) out += nc.name + "=" + show(nc.covering) + " ";
  return out;
}

}  // namespace detail

inline std::vector<Check> compression_checks(const SuiteOptions& o) {
  Property phom("compress.sound", "constructed mapping is a consistent surjection and compresses soundly");
  Property psize("compress.size", "|U2| <= |U1|, blocks refine the neighborhood-equality partition");
  Property pdelta("compress.partition", "family partition equals neighborhood equality of the family neighborhoods");
  Property p54("reduct.image", "reducts of the system and of its image coincide (oracle)");
  Property p55("core.image", "core and superfluous coverings coincide on system and image (oracle)");
  Property prep("reduct.oracle", "reduct report matches the exhaustive oracle");
  Generator gen(detail::salt(o.seed, "compression"));
  std::size_t shrunk = 0;
  for (std::size_t t = 0; t < o.cases; ++t) {
    Universe u = gen.universe(o.max_elements);
    FuzzyCoveringSystem s = gen.system(u, 4, o.max_members);
    auto ctx = [&] { return detail::show(s); };
    for (auto* p : {&phom, &psize, &pdelta, &p54, &p55, &prep}) p->count();

    std::optional<CompressionResult> built;
    try {
      built = build_homomorphism(s);
    } catch (const Error& e) {
      phom.expect(false, [&] { return ctx() + e.what(); });
      continue;
    }
    const CompressionResult& r = *built;
    const PointMapping& f = r.mapping;
    phom.expect(f.is_surjective(), ctx);
    for (const auto& nc : s.coverings()) {
      phom.expect(is_consistent(f, nc.covering), ctx);
      for (const auto& m : nc.covering.members())
        phom.expect(preimage_set(f, image_set(f, m.set)) == m.set, ctx);
      phom.expect(covering_equal(preimage_covering(f, r.image.get(nc.name)), nc.covering), ctx);
    }
    std::size_t k = r.image.universe().size();
    shrunk += k < u.size();
    psize.expect(k <= u.size() && k == r.blocks.block_count(), ctx);
    psize.expect(r.blocks.refines(r.neighborhood_blocks), ctx);
    psize.expect((k == u.size()) == r.blocks.is_discrete(), ctx);

    pdelta.expect(family_partition(s) == detail::oracle_family_partition(s) &&
                      r.neighborhood_blocks == family_partition(s),
                  ctx);

    const int top = int(s.coverings().front().covering.denominator());
    auto before = oracle::reducts(detail::raw_family(s), u.size(), top);
    auto after = oracle::reducts(detail::raw_family(r.image), k, top);
    p54.expect(before.reducts == after.reducts, ctx);
    p55.expect(before.core == after.core && before.superfluous == after.superfluous, ctx);

    auto check_report = [&](const FuzzyCoveringSystem& sys, const oracle::Reducts& want) {
      ReductReport rep = reduct_report(sys);
      std::set<std::vector<std::string>> got(rep.reducts.begin(), rep.reducts.end()), expected;
      for (auto mask : want.reducts) expected.insert(detail::names_of(sys, mask));
      prep.expect(got == expected && rep.reducts.size() == want.reducts.size(), ctx);
      prep.expect(rep.core == detail::names_of(sys, want.core) &&
                      rep.superfluous == detail::names_of(sys, want.superfluous),
                  ctx);
    };
    check_report(s, before);
    check_report(r.image, after);
  }
  Check size = psize.result();
  if (size.ok()) size.detail = std::to_string(shrunk) + " systems compressed to fewer objects";
  return {phom.result(), size, pdelta.result(), p54.result(), p55.result(), prep.result()};
}

// Random add/remove sequences: incremental state must equal a rebuild at every step.
inline Check dynamic_checks(const SuiteOptions& o) {
  Property p("dynamic.rebuild", "incremental add/remove matches a full rebuild at every step");
  Generator gen(detail::salt(o.seed, "dynamic"));
  for (std::size_t t = 0; t < o.cases; ++t) {
    Universe u = gen.universe(o.max_elements);
    FuzzyCoveringSystem s = gen.system(u, 3, o.max_members);
    PartitionTable table = PartitionTable::build(s);
    std::size_t steps = gen.uniform(1, 6);
    std::string trace = detail::show(s);
    for (std::size_t step = 0; step < steps; ++step) {
      p.count();
      SystemUpdate next = [&] {
        if (s.size() > 1 && gen.chance(40)) {
          std::string name = s.names()[gen.uniform(0, s.size() - 1)];
          trace += "| -" + name;
          return remove_covering(s, table, name);
        }
        std::string name = "B" + std::to_string(t) + "_" + std::to_string(step);
        FuzzyCovering c = gen.chance(30) ? s.coverings()[gen.uniform(0, s.size() - 1)].covering
                                          : gen.covering(u, o.max_members);
        trace += "| +" + name + "=" + detail::show(c);
        return add_covering(s, table, {name, c});
      }();
      p.expect(next.table == PartitionTable::build(next.system), [&] { return "table drift after " + trace; });
      p.expect(next.compression == build_homomorphism(next.system), [&] { return "compression drift after " + trace; });
      s = std::move(next.system);
      table = std::move(next.table);
    }
    p.count();
    auto code_of = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.code();
      }
      return Errc::internal_inconsistency;
    };
    p.expect(code_of([&] { add_covering(s, table, s.coverings().front()); }) == Errc::duplicate_name,
             "duplicate add not rejected");
    p.expect(code_of([&] { remove_covering(s, table, "no such covering"); }) == Errc::unknown_covering,
             "unknown removal not rejected");
    FuzzyCoveringSystem single(u, {s.coverings().front()});
    p.expect(code_of([&] { remove_covering(single, PartitionTable::build(single), single.names().front()); }) ==
                 Errc::last_covering,
             "last removal not rejected");
  }
  Check r = p.result();
  if (r.ok()) r.detail = std::to_string(o.cases) + " sequences";
  return r;
}

}  // namespace fcov::verify
