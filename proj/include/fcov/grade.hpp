#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "fcov/error.hpp"
#include "fcov/rational.hpp"

namespace fcov {

inline constexpr std::uint32_t kDefaultDenominator = 10000;
inline constexpr std::uint32_t kMaxDenominator = 1'000'000;

inline void check_denominator(std::uint64_t den) {
  if (den == 0) throw Error(Errc::grid_too_fine, "grid denominator must be positive");
  if (den > kMaxDenominator)
    throw Error(Errc::grid_too_fine, "grid denominator " + std::to_string(den) + " exceeds " +
                                         std::to_string(kMaxDenominator));
}

// Least grid holding both a and b exactly.
inline std::uint32_t common_denominator(std::uint32_t a, std::uint32_t b) {
  std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  check_denominator(l);
  return static_cast<std::uint32_t>(l);
}

// A membership value num/den in [0, 1].
struct Grade {
  std::uint32_t num = 0;
  std::uint32_t den = kDefaultDenominator;

  static constexpr Grade zero(std::uint32_t d = kDefaultDenominator) { return {0, d}; }
  static constexpr Grade one(std::uint32_t d = kDefaultDenominator) { return {d, d}; }

  Rational value() const { return Rational(num, den); }
  bool positive() const noexcept { return num > 0; }

  friend bool operator==(Grade a, Grade b) noexcept {
    return std::uint64_t(a.num) * b.den == std::uint64_t(b.num) * a.den;
  }
  friend std::strong_ordering operator<=>(Grade a, Grade b) noexcept {
    return std::uint64_t(a.num) * b.den <=> std::uint64_t(b.num) * a.den;
  }
};

// Shortest exact text: a decimal when one exists, otherwise "p/q".
inline std::string format_value(std::uint64_t num, std::uint64_t den) {
  std::uint64_t g = std::gcd(num, den);
  std::uint64_t p = num / g, q = den / g;
  std::uint64_t rest = q;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return std::to_string(p) + "/" + std::to_string(q);
  int digits = std::max(twos, fives);
  std::uint64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::uint64_t scaled = p * (scale / q);
  std::string s = std::to_string(scaled / scale);
  if (digits > 0) {
    std::string f = std::to_string(scaled % scale);
    f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
    s += "." + f;
  }
  return s;
}

inline std::string format_grade(Grade g) { return format_value(g.num, g.den); }

namespace detail {

inline bool all_digits(std::string_view s) {
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::string_view strip_zeros_left(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

}  // namespace detail

// Parses "0.25", ".5", "1", "1.000" or "1/3" onto the grid den. Never rounds.
inline Grade parse_grade(std::string_view text, std::uint32_t den = kDefaultDenominator) {
  check_denominator(den);
  const std::string shown(text);
  auto bad = [&] { return Error(Errc::parse_error, "not a membership value: '" + shown + "'"); };
  auto off = [&] {
    return Error(Errc::grade_off_grid,
                 "value '" + shown + "' is not a multiple of 1/" + std::to_string(den));
  };
  auto out_of_range = [&] { return Error(Errc::parse_error, "membership '" + shown + "' outside [0,1]"); };
  if (text.empty()) throw bad();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view p = text.substr(0, slash), q = text.substr(slash + 1);
    if (p.empty() || q.empty() || !detail::all_digits(p) || !detail::all_digits(q)) throw bad();
    p = detail::strip_zeros_left(p);
    q = detail::strip_zeros_left(q);
    if (q.size() > 12 || p.size() > 12) throw off();
    std::uint64_t pn = std::stoull(std::string(p)), qn = std::stoull(std::string(q));
    if (qn == 0) throw bad();
    if (pn > qn) throw out_of_range();
    unsigned __int128 scaled = static_cast<unsigned __int128>(pn) * den;
    if (scaled % qn != 0) throw off();
    return {static_cast<std::uint32_t>(scaled / qn), den};
  }

  std::string_view ip = text, fp;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    ip = text.substr(0, dot);
    fp = text.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw bad();
  }
  if (!detail::all_digits(ip) || !detail::all_digits(fp)) throw bad();
  while (!fp.empty() && fp.back() == '0') fp.remove_suffix(1);
  ip = ip.empty() ? std::string_view("0") : detail::strip_zeros_left(ip);
  if (ip != "0" && ip != "1") throw out_of_range();
  if (ip == "1") {
    if (!fp.empty()) throw out_of_range();
    return Grade::one(den);
  }
  if (fp.size() > 18) throw off();
  unsigned __int128 scale = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
  unsigned __int128 f = fp.empty() ? 0 : std::stoull(std::string(fp));
  unsigned __int128 scaled = f * den;
  if (scaled % scale != 0) throw off();
  return {static_cast<std::uint32_t>(scaled / scale), den};
}

}  // namespace fcov
