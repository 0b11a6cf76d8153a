#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fcov/covering.hpp"
#include "fcov/fuzzy_set.hpp"
#include "fcov/infosys.hpp"
#include "fcov/mapping.hpp"

namespace fcov::verify {

// Seeded source of small random instances on a coarse grid.
class Generator {
 public:
  explicit Generator(std::uint64_t seed, std::uint32_t den = 10) : rng_(seed), den_(den) {}

  std::uint32_t denominator() const noexcept { return den_; }
  std::mt19937_64& engine() noexcept { return rng_; }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(unsigned percent) { return uniform(0, 99) < percent; }

  Universe universe(std::size_t max_n, std::size_t min_n = 1) { return Universe::indexed(uniform(min_n, max_n)); }

  // Values drawn from `levels` + 1 evenly spaced grid points; coarse levels make ties common.
  std::uint32_t grade(std::size_t levels, unsigned zero_pct) {
    if (chance(zero_pct)) return 0;
    std::size_t step = uniform(1, levels);
    return static_cast<std::uint32_t>(step * den_ / levels);
  }

  std::size_t levels() {
    static constexpr std::size_t choices[] = {1, 2, 5, 10};
    std::size_t l = choices[uniform(0, 3)];
    while (den_ % l != 0) --l;
    return l;
  }

  FuzzySet set(const Universe& u, unsigned zero_pct = 30, std::size_t levels = 0) {
    if (levels == 0) levels = this->levels();
    std::vector<std::uint32_t> v(u.size());
    for (auto& g : v) g = grade(levels, zero_pct);
    return FuzzySet(u, den_, std::move(v));
  }

  FuzzySet nonempty_set(const Universe& u, unsigned zero_pct, std::size_t levels) {
    for (;;) {
      FuzzySet s = set(u, zero_pct, levels);
      if (!s.is_empty()) return s;
    }
  }

  // A covering of at most max_members members. Unions and intersections of members
  // are mixed in so that reducible and intersectional members occur often.
  FuzzyCovering covering(const Universe& u, std::size_t max_members, std::size_t min_members = 1) {
    std::size_t levels = this->levels();
    std::size_t k = uniform(min_members, max_members);
    std::vector<FuzzySet> sets;
    for (std::size_t i = 0; i < k; ++i) sets.push_back(nonempty_set(u, 35, levels));
    std::vector<std::uint32_t> col(u.size(), 0);
    for (const auto& s : sets)
      for (std::size_t x = 0; x < u.size(); ++x) col[x] = std::max(col[x], s.numerator(x));
    for (std::size_t x = 0; x < u.size(); ++x) {
      if (col[x] > 0) continue;
      std::size_t i = uniform(0, sets.size() - 1);
      std::vector<std::uint32_t> v(sets[i].numerators().begin(), sets[i].numerators().end());
      v[x] = static_cast<std::uint32_t>(uniform(1, levels) * den_ / levels);
      sets[i] = FuzzySet(u, den_, std::move(v));
    }
    std::size_t extra = sets.size() < max_members ? uniform(0, max_members - sets.size()) : 0;
    for (std::size_t e = 0; e < extra && sets.size() >= 2; ++e) {
      const FuzzySet& a = sets[uniform(0, sets.size() - 1)];
      const FuzzySet& b = sets[uniform(0, sets.size() - 1)];
      FuzzySet c = chance(50) ? fs_union(a, b) : fs_intersect(a, b);
      if (!c.is_empty()) sets.push_back(std::move(c));
    }
    std::shuffle(sets.begin(), sets.end(), rng_);
    std::vector<Member> ms;
    for (std::size_t i = 0; i < sets.size(); ++i) ms.push_back({"C" + std::to_string(i + 1), std::move(sets[i])});
    return FuzzyCovering::build(u, std::move(ms), false);
  }

  // Surjection onto k targets.
  PointMapping mapping(const Universe& u, std::size_t k) {
    k = std::max<std::size_t>(1, std::min(k, u.size()));
    std::vector<std::size_t> image(u.size());
    std::vector<std::size_t> order(u.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    for (std::size_t i = 0; i < order.size(); ++i) image[order[i]] = i < k ? i : uniform(0, k - 1);
    return PointMapping(u, Universe::indexed(k, "y"), std::move(image));
  }

  // A covering on which f is consistent: the preimage of a random covering of the target.
  FuzzyCovering consistent_covering(const PointMapping& f, std::size_t max_members) {
    return preimage_covering(f, covering(f.target(), max_members));
  }

  // m coverings, some derived from others so that reducts are non-trivial.
  FuzzyCoveringSystem system(const Universe& u, std::size_t max_m, std::size_t max_members) {
    std::size_t m = uniform(1, max_m);
    std::vector<NamedCovering> cs;
    for (std::size_t i = 0; i < m; ++i) {
      std::string name = "A" + std::to_string(i + 1);
      if (i >= 2 && chance(30)) {
        cs.push_back({name, covering_union(cs[uniform(0, i - 1)].covering, cs[uniform(0, i - 1)].covering)});
      } else if (i >= 1 && chance(15)) {
        cs.push_back({name, cs[uniform(0, i - 1)].covering});
      } else if (chance(10)) {
        cs.push_back({name, FuzzyCovering::make(u, {{"T", FuzzySet::full(u, den_)}})});
      } else {
        cs.push_back({name, covering(u, max_members)});
      }
    }
    return FuzzyCoveringSystem(u, std::move(cs));
  }

 private:
  std::mt19937_64 rng_;
  std::uint32_t den_;
};

}  // namespace fcov::verify
