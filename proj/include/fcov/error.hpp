#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcov {

enum class Errc {
  grade_off_grid,
  length_mismatch,
  universe_mismatch,
  null_member,
  coverage_gap,
  unknown_element,
  empty_family,
  size_guard,
  index_out_of_range,
  not_covered,
  degenerate_cut,
  not_surjective,
  internal_inconsistency,
  empty_subset,
  duplicate_name,
  unknown_covering,
  last_covering,
  parse_error,
  grid_too_fine,
  invalid_universe,
  unknown_name,
};

// Stable machine-readable codes, used by the CLI and reports.
constexpr std::string_view code_name(Errc e) noexcept {
  switch (e) {
    case Errc::grade_off_grid: return "GRADE_OFF_GRID";
    case Errc::length_mismatch: return "LENGTH_MISMATCH";
    case Errc::universe_mismatch: return "UNIVERSE_MISMATCH";
    case Errc::null_member: return "NULL_MEMBER";
    case Errc::coverage_gap: return "COVERAGE_GAP";
    case Errc::unknown_element: return "UNKNOWN_ELEMENT";
    case Errc::empty_family: return "EMPTY_FAMILY";
    case Errc::size_guard: return "SIZE_GUARD";
    case Errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case Errc::not_covered: return "NOT_COVERED";
    case Errc::degenerate_cut: return "DEGENERATE_CUT";
    case Errc::not_surjective: return "NOT_SURJECTIVE";
    case Errc::internal_inconsistency: return "INTERNAL_INCONSISTENCY";
    case Errc::empty_subset: return "EMPTY_SUBSET";
    case Errc::duplicate_name: return "DUPLICATE_NAME";
    case Errc::unknown_covering: return "UNKNOWN_COVERING";
    case Errc::last_covering: return "LAST_COVERING";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::grid_too_fine: return "GRID_TOO_FINE";
    case Errc::invalid_universe: return "INVALID_UNIVERSE";
    case Errc::unknown_name: return "UNKNOWN_NAME";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string location = {})
      : std::runtime_error(message), code_(code), location_(std::move(location)) {}

  Errc code() const noexcept { return code_; }
  // Where the problem was found: an element label, member name or document path.
  const std::string& location() const noexcept { return location_; }

  Error at(const std::string& outer) const {
    std::string loc = location_.empty() ? outer : outer + location_;
    return Error(code_, what(), std::move(loc));
  }

 private:
  Errc code_;
  std::string location_;
};

}  // namespace fcov
