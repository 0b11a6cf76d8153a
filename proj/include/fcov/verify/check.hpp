#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fcov::verify {

enum class Verdict { pass, fail, info };

struct Check {
  std::string id;
  std::string title;
  Verdict verdict = Verdict::pass;
  std::size_t cases = 0;
  std::string detail;

  bool ok() const noexcept { return verdict != Verdict::fail; }
};

inline bool all_ok(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (!c.ok()) return false;
  return true;
}

// Accumulates cases for one property and keeps the first counterexample.
class Property {
 public:
  Property(std::string id, std::string title) { check_.id = std::move(id); check_.title = std::move(title); }

  void count() { ++check_.cases; }

  // Records a failure; `describe` runs only for the first one.
  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    if (!ok && check_.verdict == Verdict::pass) {
      check_.verdict = Verdict::fail;
      check_.detail = "case " + std::to_string(check_.cases) + ": " + describe();
    }
    return ok;
  }

  bool expect(bool ok, const char* what) {
    return expect(ok, [&] { return std::string(what); });
  }

  bool failed() const noexcept { return check_.verdict == Verdict::fail; }
  Check result() const { return check_; }
  Check& raw() noexcept { return check_; }

 private:
  Check check_;
};

}  // namespace fcov::verify
