#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcov/covering.hpp"
#include "fcov/fuzzy_set.hpp"
#include "fcov/infosys.hpp"
#include "fcov/mapping.hpp"

namespace fcov::verify::sample {

inline const Universe& u4() {
  static const Universe u = Universe::indexed(4);
  return u;
}

inline const Universe& u8() {
  static const Universe u = Universe::indexed(8);
  return u;
}

inline FuzzySet set(const Universe& u, std::initializer_list<std::string_view> v) { return make_fuzzy_set(u, v); }
inline FuzzySet set4(std::initializer_list<std::string_view> v) { return set(u4(), v); }
inline FuzzySet set8(std::initializer_list<std::string_view> v) { return set(u8(), v); }

// Named members C17.. used across several examples.
inline FuzzySet member(int id) {
  switch (id) {
    case 13: return set4({"0.3", "0", "0", "0"});
    case 14: return set4({"0", "0", "0.5", "0.5"});
    case 15: return set4({"0.3", "0", "0", "0.4"});
    case 16: return set4({"0", "0.4", "0.5", "0"});
    case 17: return set4({"0.2", "0.1", "0.1", "0.1"});
    case 18: return set4({"0.1", "0.2", "0.1", "0.1"});
    case 19: return set4({"0.1", "0.1", "0.2", "0.1"});
    case 20: return set4({"0.1", "0.1", "0.1", "0.2"});
    case 21: return set4({"0.2", "0.4", "0.5", "0"});
    case 22: return set4({"0.1", "0.1", "0.2", "0"});
    case 23: return set4({"0.1", "0", "0.4", "0.5"});
    case 24: return set4({"0.2", "0.1", "0.2", "0.1"});
    case 25: return set4({"0.1", "0.2", "0.1", "0.2"});
    case 26: return set4({"0.1", "0.1", "0.2", "0.1"});
    case 27: return set4({"0.2", "0.2", "0.1", "0.1"});
    case 28: return set4({"0.2", "0.1", "0.2", "0.1"});
    case 29: return set4({"0.1", "0.1", "0.2", "0.2"});
    case 30: return set4({"0.1", "0.2", "0.1", "0.2"});
    case 31: return set4({"0.1", "0.1", "0.1", "0.1"});
    case 32: return set4({"0.1", "0", "0", "0"});
    case 33: return set4({"0", "0.1", "0", "0"});
    case 34: return set4({"0.1", "0.2", "0", "0"});
    case 35: return set4({"0.1", "0", "0.1", "0"});
    case 36: return set4({"0.4", "0.2", "0.1", "0"});
    case 37: return set4({"0.1", "0.2", "0", "0.1"});
    case 38: return set4({"0.1", "0", "0.1", "0.5"});
    case 39: return set4({"0", "0.1", "0.4", "0.4"});
    case 40: return set4({"0.2", "0.4", "0.5", "0"});
    case 41: return set4({"0.3", "0", "0.6", "0.5"});
    default: throw Error(Errc::unknown_name, "no such sample member", std::to_string(id));
  }
}

inline FuzzyCovering members(std::initializer_list<int> ids) {
  std::vector<Member> ms;
  for (int id : ids) ms.push_back({"C" + std::to_string(id), member(id)});
  return make_covering(u4(), std::move(ms));
}

inline FuzzyCovering covering(const Universe& u, std::vector<std::pair<std::string, FuzzySet>> sets) {
  std::vector<Member> ms;
  for (auto& [n, s] : sets) ms.push_back({n, std::move(s)});
  return make_covering(u, std::move(ms));
}

// Primed members C'1..C'3.
inline FuzzyCovering primed_covering() {
  return covering(u4(), {{"C'1", set4({"1", "0.5", "1", "0.5"})},
                         {"C'2", set4({"0.5", "0.6", "0.5", "0.6"})},
                         {"C'3", set4({"0", "0.5", "0", "0.5"})}});
}

// Three coverings of x1..x4.
inline CoveringFamily three_coverings() {
  auto c1 = covering(u4(), {{"C4", set4({"1", "1", "0.5", "0.5"})},
                            {"C5", set4({"0.5", "0.5", "0.6", "0.6"})},
                            {"C6", set4({"0", "0", "0.5", "0.5"})}});
  auto c2 = covering(u4(), {{"C7", set4({"0", "0", "1", "1"})},
                            {"C8", set4({"1", "1", "0.7", "0.7"})},
                            {"C9", set4({"0.6", "0.6", "0.5", "0.5"})}});
  auto c3 = covering(u4(), {{"C10", set4({"1", "1", "1", "1"})},
                            {"C11", set4({"0.5", "0.5", "1", "1"})},
                            {"C12", set4({"0.8", "0.8", "0.7", "0.7"})}});
  return CoveringFamily(u4(), {{"C1", c1}, {"C2", c2}, {"C3", c3}});
}

// f(x1)=f(x3)=y1, f(x2)=f(x4)=y2
inline PointMapping alternating_map() {
  return PointMapping(u4(), Universe::indexed(2, "y"), {0, 1, 0, 1});
}

// f(x1)=f(x2)=y1, f(x3)=f(x4)=y2
inline PointMapping paired_map() {
  return PointMapping(u4(), Universe::indexed(2, "y"), {0, 0, 1, 1});
}

// eight houses, price and color.
inline FuzzyCoveringSystem houses() {
  auto price = covering(u8(), {{"high", set8({"1", "0.7", "0", "1", "1", "0", "1", "0.8"})},
                               {"middle", set8({"0.6", "1", "0.4", "0.4", "0.45", "0.7", "0.5", "1"})},
                               {"low", set8({"0", "0.5", "1", "0", "0.5", "1", "0", "0.5"})}});
  auto color = covering(u8(), {{"good", set8({"1", "1", "1", "0.5", "0.6", "1", "0", "0"})},
                               {"bad", set8({"0", "0.4", "0.4", "1", "1", "0.2", "1", "1"})}});
  return FuzzyCoveringSystem(u8(), {{"price", price}, {"color", color}});
}

inline FuzzySet high_a() { return set8({"1", "0.7", "0", "1", "1", "0", "1", "0.65"}); }
inline FuzzySet high_b() { return set8({"0.9", "0.7", "0", "1", "1", "0", "1", "0.8"}); }

// eight cars, four attributes.
inline FuzzyCovering car_price() {
  return covering(u8(), {{"P1", set8({"1", "1", "0.5", "1", "0.5", "1", "1", "1"})},
                         {"P2", set8({"0.5", "0.5", "0.5", "1", "0.5", "0.5", "1", "1"})},
                         {"P3", set8({"0", "0", "1", "0.5", "1", "1", "0.5", "0.5"})}});
}
inline FuzzyCovering car_structure() {
  return covering(u8(), {{"S1", set8({"0", "0", "1", "0", "1", "0", "0", "0"})},
                         {"S2", set8({"1", "1", "0.5", "1", "0.5", "1", "1", "1"})},
                         {"S3", set8({"1", "1", "0.5", "0.5", "0.5", "0", "0.5", "0.5"})}});
}
inline FuzzyCovering car_size() {
  return covering(u8(), {{"Z1", set8({"1", "1", "1", "0", "1", "1", "0", "0"})},
                         {"Z2", set8({"0.5", "0.5", "1", "0.5", "1", "0.5", "0.5", "0.5"})},
                         {"Z3", set8({"1", "1", "1", "1", "1", "0.5", "1", "1"})}});
}
// Lists its first member twice; construction keeps one copy.
inline FuzzyCovering car_appearance() {
  return covering(u8(), {{"A1", set8({"1", "1", "0.5", "1", "0.5", "1", "1", "1"})},
                         {"A2", set8({"1", "1", "0.5", "1", "0.5", "1", "1", "1"})},
                         {"A3", set8({"1", "1", "1", "1", "1", "0.5", "1", "1"})}});
}

inline FuzzyCoveringSystem cars() {
  return FuzzyCoveringSystem(u8(), {{"price", car_price()},
                                    {"structure", car_structure()},
                                    {"size", car_size()},
                                    {"appearance", car_appearance()}});
}

}  // namespace fcov::verify::sample
