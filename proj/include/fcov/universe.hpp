#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fcov/error.hpp"

namespace fcov {

// Ordered finite universe of uniquely labelled elements. Copies share storage.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels) {
    if (labels.empty()) throw Error(Errc::invalid_universe, "universe must have at least one element");
    auto d = std::make_shared<Data>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].empty()) throw Error(Errc::invalid_universe, "empty element label", "#" + std::to_string(i));
      if (!d->index.emplace(labels[i], i).second)
        throw Error(Errc::invalid_universe, "duplicate element label", labels[i]);
    }
    d->labels = std::move(labels);
    d_ = std::move(d);
  }

  // prefix1 .. prefixN
  static Universe indexed(std::size_t n, std::string_view prefix = "x") {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
    return Universe(std::move(labels));
  }

  std::size_t size() const noexcept { return d_->labels.size(); }
  const std::string& label(std::size_t i) const { return d_->labels.at(i); }
  std::span<const std::string> labels() const noexcept { return d_->labels; }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = d_->index.find(std::string(label));
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(Errc::unknown_element, "unknown element", std::string(label));
  }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.d_ == b.d_ || a.d_->labels == b.d_->labels;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> d_;
};

inline void require_same(const Universe& a, const Universe& b) {
  if (!(a == b)) throw Error(Errc::universe_mismatch, "operands live on different universes");
}

}  // namespace fcov
