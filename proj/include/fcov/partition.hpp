#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcov/error.hpp"
#include "fcov/universe.hpp"

namespace fcov {

// Disjoint exhaustive blocks of element indices. Blocks are sorted internally and
// ordered by their least element.
class Partition {
 public:
  // Elements with equal keys share a block.
  template <class Key>
  static Partition by_key(const Universe& u, const std::vector<Key>& keys) {
    if (keys.size() != u.size()) throw Error(Errc::length_mismatch, "one key per element required");
    std::map<Key, std::size_t> ids;
    std::vector<std::size_t> block_of(keys.size());
    for (std::size_t x = 0; x < keys.size(); ++x) block_of[x] = ids.emplace(keys[x], ids.size()).first->second;
    return Partition(u, std::move(block_of));
  }

  static Partition discrete(const Universe& u) {
    std::vector<std::size_t> ids(u.size());
    for (std::size_t x = 0; x < ids.size(); ++x) ids[x] = x;
    return Partition(u, std::move(ids));
  }

  static Partition whole(const Universe& u) { return Partition(u, std::vector<std::size_t>(u.size(), 0)); }

  // Blocks given explicitly; must be disjoint and cover the universe.
  static Partition from_blocks(const Universe& u, const std::vector<std::vector<std::size_t>>& blocks) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> ids(u.size(), unset);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t x : blocks[b]) {
        if (x >= u.size()) throw Error(Errc::unknown_element, "block element out of range");
        if (ids[x] != unset) throw Error(Errc::internal_inconsistency, "blocks overlap", u.label(x));
        ids[x] = b;
      }
    for (std::size_t x = 0; x < ids.size(); ++x)
      if (ids[x] == unset) throw Error(Errc::internal_inconsistency, "blocks miss an element", u.label(x));
    return Partition(u, std::move(ids));
  }

  const Universe& universe() const noexcept { return u_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::span<const std::vector<std::size_t>> blocks() const noexcept { return blocks_; }
  const std::vector<std::size_t>& block(std::size_t b) const { return blocks_.at(b); }
  std::size_t block_of(std::size_t x) const { return block_of_.at(x); }
  bool is_discrete() const noexcept { return blocks_.size() == u_.size(); }

  // Every block of *this sits inside a block of `coarser`.
  bool refines(const Partition& coarser) const {
    require_same(u_, coarser.u_);
    for (const auto& b : blocks_)
      for (std::size_t x : b)
        if (coarser.block_of_[x] != coarser.block_of_[b.front()]) return false;
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.u_ == b.u_ && a.blocks_ == b.blocks_; }

 private:
  Partition(Universe u, std::vector<std::size_t> raw) : u_(std::move(u)), block_of_(raw.size()) {
    // Renumber by first occurrence, which is the least element of each block.
    std::map<std::size_t, std::size_t> order;
    for (std::size_t x = 0; x < raw.size(); ++x) {
      auto [it, fresh] = order.emplace(raw[x], blocks_.size());
      if (fresh) blocks_.emplace_back();
      blocks_[it->second].push_back(x);
      block_of_[x] = it->second;
    }
  }

  Universe u_;
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<std::size_t>> blocks_;
};

// Common refinement: x and y together iff together in both.
inline Partition meet(const Partition& a, const Partition& b) {
  require_same(a.universe(), b.universe());
  std::vector<std::pair<std::size_t, std::size_t>> keys(a.universe().size());
  for (std::size_t x = 0; x < keys.size(); ++x) keys[x] = {a.block_of(x), b.block_of(x)};
  return Partition::by_key(a.universe(), keys);
}

inline std::string to_string(const Partition& p) {
  std::string s = "{";
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    if (b) s += ",";
    s += "{";
    for (std::size_t i = 0; i < p.block(b).size(); ++i) {
      if (i) s += ",";
      s += p.universe().label(p.block(b)[i]);
    }
    s += "}";
  }
  return s + "}";
}

}  // namespace fcov
