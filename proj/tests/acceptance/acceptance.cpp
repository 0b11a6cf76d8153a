// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fcov/document.hpp"
#include "fcov/verify/compression.hpp"
#include "fcov/verify/counterexamples.hpp"
#include "fcov/verify/golden.hpp"
#include "fcov/verify/properties.hpp"

namespace fs = std::filesystem;
using namespace fcov;
using namespace fcov::verify;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> notes;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << v;
  return s.str();
}

void absorb(Outcome& out, const std::vector<Check>& checks, std::size_t min_cases = 0) {
  for (const auto& c : checks) {
    if (!c.ok()) {
      out.ok = false;
      out.notes.push_back(c.id + " failed: " + c.detail);
    }
    if (c.verdict != Verdict::info && c.cases < min_cases) {
      out.ok = false;
      out.notes.push_back(c.id + " ran " + std::to_string(c.cases) + " cases, fewer than " + std::to_string(min_cases));
    }
  }
}

void require_ids(Outcome& out, const std::vector<Check>& checks, std::initializer_list<const char*> ids) {
  std::set<std::string> have;
  for (const auto& c : checks) have.insert(c.id);
  for (const char* id : ids)
    if (!have.count(id)) {
      out.ok = false;
      out.notes.push_back(std::string("missing check ") + id);
    }
}

Outcome golden() {
  Outcome out;
  auto t0 = Clock::now();
  auto checks = golden_checks();
  double secs = seconds_since(t0);
  absorb(out, checks);
  require_ids(out, checks, {"induced.single", "induced.family", "approx.four-member", "neighborhood.lower-vs-induced",
                            "neighborhood.union-gap", "subcover.listing", "red.shared-residue", "is.drop-one",
                            "is.eight-member", "roughness", "mapping.consistency", "cars.compression"});
  if (secs >= 1.0) {
    out.ok = false;
    out.notes.push_back("took " + fixed(secs) + " s");
  }
  out.summary = std::to_string(checks.size()) + " examples in " + fixed(secs) + " s";
  return out;
}

Outcome counterexamples() {
  Outcome out;
  auto checks = counterexample_checks();
  absorb(out, checks);
  require_ids(out, checks, {"cx.upper-universe", "cx.upper-union", "cx.upper-extensive", "cx.fixed-point-converse",
                            "cx.lower-vs-induced", "cx.bound-vs-upper", "cx.upper-vs-is", "cx.upper-union-covering",
                            "cx.upper-intersection-covering"});
  out.summary = std::to_string(checks.size()) + " non-properties witnessed";
  return out;
}

Outcome properties(const SuiteOptions& o) {
  Outcome out;
  auto t0 = Clock::now();
  auto checks = property_checks(o);
  double secs = seconds_since(t0);
  absorb(out, checks, o.cases);
  require_ids(out, checks,
              {"approx.empty", "approx.universe", "approx.lower-in-upper", "approx.upper-join", "approx.monotone",
               "approx.member-fixed", "approx.idempotent", "approx.compose", "neighborhood.monotone",
               "approx.neighborhood-union", "subcover.chain", "red.approx-invariant", "red.order-free", "is.order-free",
               "red.equivalence", "is.neighborhood-union", "lattice.meet-is-induced", "lattice.union-idempotent",
               "lattice.meet-self-finer", "lattice.union-commutes", "lattice.meet-commutes", "lattice.union-associates",
               "lattice.meet-associates", "lattice.absorb-union", "lattice.absorb-meet", "image.meet-contained",
               "image.join", "image.meet-consistent", "preimage.contains", "preimage.recovers", "consistency.meet",
               "preimage.covering", "image.covering-meet"});
  if (secs >= 60.0) {
    out.ok = false;
    out.notes.push_back("took " + fixed(secs) + " s");
  }
  out.summary = std::to_string(checks.size()) + " properties x " + std::to_string(o.cases) + " instances in " +
                fixed(secs) + " s";
  return out;
}

Outcome compression(const SuiteOptions& o) {
  Outcome out;
  auto checks = compression_checks(o);
  absorb(out, checks, o.cases);
  require_ids(out, checks, {"compress.sound", "reduct.image", "core.image"});
  out.summary = std::to_string(o.cases) + " random systems with up to 4 coverings";
  return out;
}

Outcome dynamics(SuiteOptions o) {
  o.cases = 500;
  Outcome out;
  Check c = dynamic_checks(o);
  absorb(out, {c});
  out.summary = "500 add/remove sequences, " + std::to_string(c.cases) + " steps and rejections checked";
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome exactness() {
  Outcome out;
  static const std::regex floating(R"(\b(float|double|stod|stof|strtod|atof)\b)");
  std::size_t headers = 0;
  for (const auto& e : fs::recursive_directory_iterator(fs::path(FCOV_SOURCE_DIR) / "include" / "fcov")) {
    if (!e.is_regular_file()) continue;
    ++headers;
    std::istringstream text(slurp(e.path()));
    std::string line;
    for (std::size_t n = 1; std::getline(text, line); ++n)
      if (std::regex_search(line, floating)) {
        out.ok = false;
        out.notes.push_back(e.path().filename().string() + ":" + std::to_string(n) + ": " + line);
      }
  }
  std::size_t fixtures = 0;
  for (const auto& e : fs::directory_iterator(FCOV_FIXTURE_DIR)) {
    if (e.path().extension() != ".json") continue;
    ++fixtures;
    try {
      (void)parse_document(slurp(e.path()));
    } catch (const Error& err) {
      out.ok = false;
      out.notes.push_back(e.path().filename().string() + ": " + std::string(code_name(err.code())) + " " + err.what());
    }
  }
  try {
    (void)parse_document(slurp(fs::path(FCOV_FIXTURE_DIR) / "invalid" / "off_grid.json"));
    out.ok = false;
    out.notes.push_back("off-grid fixture was accepted");
  } catch (const Error& err) {
    if (err.code() != Errc::grade_off_grid) {
      out.ok = false;
      out.notes.push_back(std::string("off-grid fixture raised ") + std::string(code_name(err.code())));
    }
  }
  out.summary = std::to_string(headers) + " headers free of floating point, " + std::to_string(fixtures) +
                " fixtures on grid";
  return out;
}

}  // namespace

int main() {
  SuiteOptions o;
  std::vector<std::pair<std::string, Outcome>> results{
      {"golden examples", golden()},
      {"counterexample suite", counterexamples()},
      {"property suites", properties(o)},
      {"compression correctness", compression(o)},
      {"dynamic-update equivalence", dynamics(o)},
      {"exactness", exactness()},
  };
  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [name, r] = results[i];
    std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << name << "): " << r.summary << "\n";
    for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    all &= r.ok;
  }
  return all ? 0 : 1;
}
