#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fcov/covering.hpp"
#include "fcov/error.hpp"
#include "fcov/fuzzy_set.hpp"
#include "fcov/partition.hpp"

namespace fcov {

enum class Surjectivity { strict, lax };

// Total map from source indices to target indices.
class PointMapping {
 public:
  PointMapping(Universe source, Universe target, std::vector<std::size_t> image, Surjectivity mode = Surjectivity::strict)
      : src_(std::move(source)), dst_(std::move(target)), image_(std::move(image)) {
    if (image_.size() != src_.size())
      throw Error(Errc::length_mismatch, "mapping needs one image per source element");
    for (std::size_t x = 0; x < image_.size(); ++x)
      if (image_[x] >= dst_.size()) throw Error(Errc::unknown_element, "image outside target", src_.label(x));
    if (mode == Surjectivity::strict && !is_surjective())
      throw Error(Errc::not_surjective, "some target element has no preimage");
  }

  // From (source label, target label) pairs; every source element must appear once.
  static PointMapping from_pairs(const Universe& source, const Universe& target,
                                 const std::vector<std::pair<std::string, std::string>>& pairs,
                                 Surjectivity mode = Surjectivity::strict) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> image(source.size(), unset);
    for (const auto& [s, t] : pairs) {
      std::size_t x = source.index_of(s);
      if (image[x] != unset) throw Error(Errc::duplicate_name, "source element mapped twice", s);
      image[x] = target.index_of(t);
    }
    for (std::size_t x = 0; x < image.size(); ++x)
      if (image[x] == unset) throw Error(Errc::unknown_element, "source element not mapped", source.label(x));
    return PointMapping(source, target, std::move(image), mode);
  }

  static PointMapping identity(const Universe& u) {
    std::vector<std::size_t> image(u.size());
    for (std::size_t x = 0; x < image.size(); ++x) image[x] = x;
    return PointMapping(u, u, std::move(image));
  }

  const Universe& source() const noexcept { return src_; }
  const Universe& target() const noexcept { return dst_; }
  std::span<const std::size_t> image() const noexcept { return image_; }
  std::size_t operator()(std::size_t x) const { return image_.at(x); }

  bool is_surjective() const {
    std::vector<bool> hit(dst_.size(), false);
    for (std::size_t y : image_) hit[y] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  friend bool operator==(const PointMapping& a, const PointMapping& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.image_ == b.image_;
  }

 private:
  Universe src_;
  Universe dst_;
  std::vector<std::size_t> image_;
};

inline Partition kernel_partition(const PointMapping& f) {
  std::vector<std::size_t> keys(f.image().begin(), f.image().end());
  return Partition::by_key(f.source(), keys);
}

// Every member is constant on every kernel block.
inline bool is_consistent(const PointMapping& f, const FuzzyCovering& c) {
  require_same(f.source(), c.universe());
  Partition k = kernel_partition(f);
  for (const auto& m : c.members())
    for (const auto& b : k.blocks())
      for (std::size_t x : b)
        if (m.set.numerator(x) != m.set.numerator(b.front())) return false;
  return true;
}

// Max over each preimage; 0 where the preimage is empty.
inline FuzzySet image_set(const PointMapping& f, const FuzzySet& a) {
  require_same(f.source(), a.universe());
  std::vector<std::uint32_t> out(f.target().size(), 0);
  for (std::size_t x = 0; x < a.size(); ++x) out[f(x)] = std::max(out[f(x)], a.numerator(x));
  return FuzzySet(f.target(), a.denominator(), std::move(out));
}

inline FuzzySet preimage_set(const PointMapping& f, const FuzzySet& t) {
  require_same(f.target(), t.universe());
  std::vector<std::uint32_t> out(f.source().size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = t.numerator(f(x));
  return FuzzySet(f.source(), t.denominator(), std::move(out));
}

// Member names are kept; a repeated image keeps the first name.
inline FuzzyCovering image_covering(const PointMapping& f, const FuzzyCovering& c) {
  require_same(f.source(), c.universe());
  if (!f.is_surjective()) throw Error(Errc::not_surjective, "image covering needs a surjective mapping");
  std::vector<Member> ms;
  for (const auto& m : c.members()) ms.push_back({m.name, image_set(f, m.set)});
  return FuzzyCovering::build(f.target(), std::move(ms), false);
}

inline FuzzyCovering preimage_covering(const PointMapping& f, const FuzzyCovering& c2) {
  require_same(f.target(), c2.universe());
  std::vector<Member> ms;
  for (const auto& m : c2.members()) ms.push_back({m.name, preimage_set(f, m.set)});
  return FuzzyCovering::build(f.source(), std::move(ms), false);
}

}  // namespace fcov
