#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcov/covering.hpp"
#include "fcov/error.hpp"
#include "fcov/mapping.hpp"
#include "fcov/partition.hpp"

namespace fcov {

// A universe with a non-empty named family of coverings.
class FuzzyCoveringSystem {
 public:
  FuzzyCoveringSystem(const Universe& u, std::vector<NamedCovering> coverings)
      : FuzzyCoveringSystem(CoveringFamily(u, std::move(coverings))) {}

  explicit FuzzyCoveringSystem(CoveringFamily family) : family_(std::move(family)) {
    if (family_.empty()) throw Error(Errc::empty_family, "system needs at least one covering");
  }

  const Universe& universe() const noexcept { return family_.universe(); }
  const CoveringFamily& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return family_.size(); }
  std::span<const NamedCovering> coverings() const noexcept { return family_.coverings(); }
  const FuzzyCovering& get(std::string_view name) const { return family_.get(name); }
  std::optional<std::size_t> find(std::string_view name) const { return family_.find(name); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& nc : coverings()) out.push_back(nc.name);
    return out;
  }

  friend bool operator==(const FuzzyCoveringSystem&, const FuzzyCoveringSystem&) = default;

 private:
  CoveringFamily family_;
};

// Blocks of exact neighborhood equality.
inline Partition covering_partition(const FuzzyCovering& c) {
  std::vector<std::vector<std::uint32_t>> keys;
  for (const auto& h : neighborhoods(c)) keys.emplace_back(h.numerators().begin(), h.numerators().end());
  return Partition::by_key(c.universe(), keys);
}

// Blocks on which every member takes a single value. Refines covering_partition.
inline Partition value_partition(const FuzzyCovering& c) {
  std::vector<std::vector<std::uint32_t>> keys(c.universe().size());
  for (const auto& m : c.members())
    for (std::size_t x = 0; x < keys.size(); ++x) keys[x].push_back(m.set.numerator(x));
  return Partition::by_key(c.universe(), keys);
}

inline Partition family_partition(const FuzzyCoveringSystem& s) {
  Partition p = covering_partition(s.coverings().front().covering);
  for (std::size_t i = 1; i < s.size(); ++i) p = meet(p, covering_partition(s.coverings()[i].covering));
  return p;
}

inline Partition homomorphism_partition(const FuzzyCoveringSystem& s) {
  Partition p = value_partition(s.coverings().front().covering);
  for (std::size_t i = 1; i < s.size(); ++i) p = meet(p, value_partition(s.coverings()[i].covering));
  return p;
}

struct PartitionEntry {
  std::string name;
  Partition neighborhood;  // equal neighborhoods
  Partition kernel;        // equal member values

  friend bool operator==(const PartitionEntry&, const PartitionEntry&) = default;
};

inline PartitionEntry partition_entry(const NamedCovering& nc) {
  return {nc.name, covering_partition(nc.covering), value_partition(nc.covering)};
}

// Per-covering partitions with their meets, kept alongside a system across updates.
class PartitionTable {
 public:
  static PartitionTable build(const FuzzyCoveringSystem& s) {
    std::vector<PartitionEntry> es;
    for (const auto& nc : s.coverings()) es.push_back(partition_entry(nc));
    return PartitionTable(std::move(es));
  }

  std::span<const PartitionEntry> entries() const noexcept { return entries_; }
  const Partition& family_partition() const noexcept { return delta_; }
  const Partition& homomorphism_partition() const noexcept { return kernel_; }

  // Appends one entry and refines both meets by it.
  PartitionTable with(PartitionEntry e) const {
    PartitionTable t = *this;
    t.delta_ = meet(t.delta_, e.neighborhood);
    t.kernel_ = meet(t.kernel_, e.kernel);
    t.entries_.push_back(std::move(e));
    return t;
  }

  // Drops one entry and recomputes both meets from the cached remainder.
  PartitionTable without(std::string_view name) const {
    std::vector<PartitionEntry> es;
    for (const auto& e : entries_)
      if (e.name != name) es.push_back(e);
    if (es.size() == entries_.size()) throw Error(Errc::unknown_covering, "no covering with this name", std::string(name));
    if (es.empty()) throw Error(Errc::last_covering, "cannot remove the only covering", std::string(name));
    return PartitionTable(std::move(es));
  }

  friend bool operator==(const PartitionTable&, const PartitionTable&) = default;

 private:
  explicit PartitionTable(std::vector<PartitionEntry> es)
      : entries_(std::move(es)), delta_(entries_.at(0).neighborhood), kernel_(entries_.at(0).kernel) {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      delta_ = meet(delta_, entries_[i].neighborhood);
      kernel_ = meet(kernel_, entries_[i].kernel);
    }
  }

  std::vector<PartitionEntry> entries_;
  Partition delta_;
  Partition kernel_;
};

struct ProvenanceEntry {
  std::string target;
  std::vector<std::string> sources;

  friend bool operator==(const ProvenanceEntry&, const ProvenanceEntry&) = default;
};

struct CompressionResult {
  PointMapping mapping;
  FuzzyCoveringSystem image;
  Partition blocks;                // partition the mapping collapses
  Partition neighborhood_blocks;   // meet of the neighborhood-equality partitions
  std::vector<ProvenanceEntry> provenance;

  friend bool operator==(const CompressionResult&, const CompressionResult&) = default;
};

// Labels blocks y1..yK by least element, maps onto them and takes the image of every covering.
inline CompressionResult compress_with(const FuzzyCoveringSystem& s, const PartitionTable& t) {
  std::vector<std::string> names = s.names();
  if (t.entries().size() != names.size())
    throw Error(Errc::internal_inconsistency, "partition table does not match the system");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (t.entries()[i].name != names[i])
      throw Error(Errc::internal_inconsistency, "partition table does not match the system", names[i]);

  const Universe& u = s.universe();
  const Partition& blocks = t.homomorphism_partition();
  Universe target = Universe::indexed(blocks.block_count(), "y");
  std::vector<std::size_t> image(u.size());
  for (std::size_t x = 0; x < u.size(); ++x) image[x] = blocks.block_of(x);
  PointMapping f(u, target, std::move(image));

  std::vector<NamedCovering> imaged;
  for (const auto& nc : s.coverings()) {
    if (!is_consistent(f, nc.covering))
      throw Error(Errc::internal_inconsistency, "constructed mapping is not consistent", nc.name);
    imaged.push_back({nc.name, image_covering(f, nc.covering)});
  }

  std::vector<ProvenanceEntry> prov;
  for (std::size_t b = 0; b < blocks.block_count(); ++b) {
    ProvenanceEntry e{target.label(b), {}};
    for (std::size_t x : blocks.block(b)) e.sources.push_back(u.label(x));
    prov.push_back(std::move(e));
  }
  return {std::move(f), FuzzyCoveringSystem(target, std::move(imaged)), blocks, t.family_partition(), std::move(prov)};
}

inline CompressionResult build_homomorphism(const FuzzyCoveringSystem& s) {
  return compress_with(s, PartitionTable::build(s));
}

// Neighborhood-intersection covering of the named subfamily.
inline FuzzyCovering family_intersection(const FuzzyCoveringSystem& s, std::span<const std::string> subset) {
  if (subset.empty()) throw Error(Errc::empty_subset, "choose at least one covering");
  std::vector<const FuzzyCovering*> cs;
  for (const auto& n : subset) cs.push_back(&s.get(n));
  return detail::covering_of_neighborhoods(s.universe(), family_neighborhoods(cs));
}

inline FuzzyCovering family_intersection(const FuzzyCoveringSystem& s) {
  auto all = s.names();
  return family_intersection(s, all);
}

struct ReductReport {
  std::vector<std::string> core;
  std::vector<std::vector<std::string>> reducts;
  std::vector<std::string> superfluous;
  std::vector<std::string> reduct_intersection;
  bool core_matches_reducts = false;

  friend bool operator==(const ReductReport&, const ReductReport&) = default;
};

// Exhaustive scan: P is a reduct when its intersection covering equals that of the
// whole family and no proper subfamily does.
inline ReductReport reduct_report(const FuzzyCoveringSystem& s, std::size_t guard = kDefaultSizeGuard) {
  const std::size_t m = s.size();
  if (m > guard)
    throw Error(Errc::size_guard, "family has " + std::to_string(m) + " coverings; exhaustive bound is " +
                                      std::to_string(guard));
  const std::size_t n = s.universe().size();
  std::uint32_t den = s.coverings().front().covering.denominator();
  for (const auto& nc : s.coverings()) den = common_denominator(den, nc.covering.denominator());

  using Vec = std::vector<std::uint32_t>;
  std::vector<std::vector<Vec>> hoods(m);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& h : neighborhoods(s.coverings()[i].covering.on_grid(den)))
      hoods[i].emplace_back(h.numerators().begin(), h.numerators().end());

  auto vectors_of = [&](std::uint64_t mask) {
    std::set<Vec> out;
    for (std::size_t x = 0; x < n; ++x) {
      Vec v(n, den);
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1)
          for (std::size_t y = 0; y < n; ++y) v[y] = std::min(v[y], hoods[i][x][y]);
      out.insert(std::move(v));
    }
    return out;
  };

  const std::uint64_t full = (std::uint64_t(1) << m) - 1;
  const std::set<Vec> whole = vectors_of(full);
  std::vector<char> sat(full + 1, 0), below(full + 1, 0);
  for (std::uint64_t mask = 1; mask <= full; ++mask) sat[mask] = vectors_of(mask) == whole;
  // below[mask]: some non-empty subset of mask, mask included, preserves the intersection.
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    below[mask] = sat[mask];
    for (std::size_t i = 0; i < m && !below[mask]; ++i)
      if (mask >> i & 1) below[mask] = below[mask & ~(std::uint64_t(1) << i)];
  }

  auto names_of = [&](std::uint64_t mask) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) out.push_back(s.coverings()[i].name);
    return out;
  };

  ReductReport r;
  std::vector<std::uint64_t> reduct_masks;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (!sat[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < m && minimal; ++i)
      if (mask >> i & 1) minimal = !below[mask & ~(std::uint64_t(1) << i)];
    if (minimal) reduct_masks.push_back(mask);
  }
  auto index_order = [](std::uint64_t a, std::uint64_t b) {
    for (std::size_t i = 0; i < 64; ++i) {
      bool x = a >> i & 1, y = b >> i & 1;
      if (x != y) return x;
    }
    return false;
  };
  std::sort(reduct_masks.begin(), reduct_masks.end(), index_order);
  std::uint64_t common = full;
  for (auto mask : reduct_masks) {
    r.reducts.push_back(names_of(mask));
    common &= mask;
  }
  if (reduct_masks.empty()) common = 0;

  std::uint64_t core = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t rest = full & ~(std::uint64_t(1) << i);
    bool superfluous = rest != 0 && sat[rest];
    if (superfluous)
      r.superfluous.push_back(s.coverings()[i].name);
    else
      core |= std::uint64_t(1) << i;
  }
  r.core = names_of(core);
  r.reduct_intersection = names_of(common);
  r.core_matches_reducts = core == common;
  return r;
}

struct SystemUpdate {
  FuzzyCoveringSystem system;
  PartitionTable table;
  CompressionResult compression;
};

// Computes partitions only for the new covering and refines the cached meets.
inline SystemUpdate add_covering(const FuzzyCoveringSystem& s, const PartitionTable& t, NamedCovering nc) {
  require_same(s.universe(), nc.covering.universe());
  if (s.find(nc.name)) throw Error(Errc::duplicate_name, "covering name already in the system", nc.name);
  PartitionTable t2 = t.with(partition_entry(nc));
  std::vector<NamedCovering> cs(s.coverings().begin(), s.coverings().end());
  cs.push_back(std::move(nc));
  FuzzyCoveringSystem s2(s.universe(), std::move(cs));
  CompressionResult r = compress_with(s2, t2);
  return {std::move(s2), std::move(t2), std::move(r)};
}

// Drops the covering's cached partitions; no partition is recomputed.
inline SystemUpdate remove_covering(const FuzzyCoveringSystem& s, const PartitionTable& t, std::string_view name) {
  if (!s.find(name)) throw Error(Errc::unknown_covering, "no covering with this name", std::string(name));
  if (s.size() == 1) throw Error(Errc::last_covering, "cannot remove the only covering", std::string(name));
  PartitionTable t2 = t.without(name);
  std::vector<NamedCovering> cs;
  for (const auto& nc : s.coverings())
    if (nc.name != name) cs.push_back(nc);
  FuzzyCoveringSystem s2(s.universe(), std::move(cs));
  CompressionResult r = compress_with(s2, t2);
  return {std::move(s2), std::move(t2), std::move(r)};
}

}  // namespace fcov
