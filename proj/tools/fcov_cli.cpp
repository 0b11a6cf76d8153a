#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fcov/document.hpp"
#include "fcov/fcov.hpp"
#include "fcov/verify/compression.hpp"
#include "fcov/verify/counterexamples.hpp"
#include "fcov/verify/findings.hpp"
#include "fcov/verify/golden.hpp"
#include "fcov/verify/properties.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace fcov;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string addition;
  std::vector<std::string> coverings;
  std::string set;
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
  std::string mode = "red";
  std::string op = "union";
  std::uint64_t seed = verify::SuiteOptions{}.seed;
  std::size_t cases = 1000;
  bool on_image = true;
  std::string out;
  std::optional<std::uint32_t> denominator;
};

std::string read_file(const std::string& path) {
  std::filesystem::path p(path);
  if (!std::filesystem::exists(p) && !p.has_extension() && std::filesystem::exists(p.string() + ".json"))
    p += ".json";
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SystemDocument load(const Options& o, const std::string& path) { return parse_document(read_file(path), o.denominator); }

Json rational(const Rational& r) { return Json{{"fraction", r.fraction()}, {"decimal", r.decimal(6)}}; }

Json grades(const FuzzySet& s) {
  Json a = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) a.push_back(format_grade(s[i]));
  return a;
}

Json labels(const Universe& u) { return std::vector<std::string>(u.labels().begin(), u.labels().end()); }

Json partition(const Partition& p) {
  Json a = Json::array();
  for (const auto& b : p.blocks()) {
    Json block = Json::array();
    for (auto x : b) block.push_back(p.universe().label(x));
    a.push_back(std::move(block));
  }
  return a;
}

Json names(const std::vector<std::string>& v) { return v; }

const FuzzyCovering& pick_covering(const SystemDocument& doc, const Options& o) {
  if (!o.coverings.empty()) return doc.system.get(o.coverings.front());
  if (doc.system.size() == 1) return doc.system.coverings().front().covering;
  throw UsageError("--covering is required when the document has several coverings");
}

const FuzzySet& pick_set(const SystemDocument& doc, const Options& o) {
  if (o.set.empty()) throw UsageError("--set is required");
  return doc.set(o.set);
}

Json compression(const CompressionResult& r) {
  Json j;
  Json pairs = Json::array();
  for (std::size_t x = 0; x < r.mapping.source().size(); ++x)
    pairs.push_back({r.mapping.source().label(x), r.mapping.target().label(r.mapping(x))});
  j["objects"] = {{"before", r.mapping.source().size()}, {"after", r.mapping.target().size()}};
  j["mapping"] = std::move(pairs);
  j["blocks"] = partition(r.blocks);
  j["neighborhood_blocks"] = partition(r.neighborhood_blocks);
  Json prov = Json::array();
  for (const auto& e : r.provenance) prov.push_back({{"target", e.target}, {"sources", e.sources}});
  j["provenance"] = std::move(prov);
  j["image"] = document_json(document_of(r.image));
  return j;
}

Json table(const PartitionTable& t) {
  Json es = Json::array();
  for (const auto& e : t.entries())
    es.push_back({{"covering", e.name}, {"neighborhood", partition(e.neighborhood)}, {"kernel", partition(e.kernel)}});
  return Json{{"entries", std::move(es)},
              {"family_partition", partition(t.family_partition())},
              {"homomorphism_partition", partition(t.homomorphism_partition())}};
}

Json reducts(const ReductReport& r) {
  return Json{{"core", names(r.core)},
              {"reducts", r.reducts},
              {"superfluous", names(r.superfluous)},
              {"reduct_intersection", names(r.reduct_intersection)},
              {"core_matches_reducts", r.core_matches_reducts}};
}

Json cmd_validate(const Options& o) {
  SystemDocument doc = load(o, o.file);
  Json cs = Json::array();
  for (const auto& nc : doc.system.coverings()) cs.push_back({{"name", nc.name}, {"members", nc.covering.size()}});
  Json j{{"status", "ok"}, {"denominator", doc.denominator}, {"universe", labels(doc.universe())}, {"coverings", cs}};
  if (!doc.sets.empty()) {
    Json s = Json::array();
    for (const auto& ns : doc.sets) s.push_back(ns.name);
    j["sets"] = std::move(s);
  }
  if (!doc.mappings.empty()) {
    Json m = Json::array();
    for (const auto& nm : doc.mappings) m.push_back(nm.name);
    j["mappings"] = std::move(m);
  }
  j["warnings"] = doc.warnings;
  return j;
}

Json cmd_neighborhood(const Options& o) {
  SystemDocument doc = load(o, o.file);
  std::vector<FuzzySet> hoods;
  FuzzyCovering induced = [&] {
    if (!o.coverings.empty()) {
      std::vector<const FuzzyCovering*> cs;
      for (const auto& n : o.coverings) cs.push_back(&doc.system.get(n));
      hoods = family_neighborhoods(cs);
      return family_intersection(doc.system, o.coverings);
    }
    std::vector<const FuzzyCovering*> cs;
    for (const auto& nc : doc.system.coverings()) cs.push_back(&nc.covering);
    hoods = family_neighborhoods(cs);
    return family_intersection(doc.system);
  }();
  Json ns = Json::array();
  for (std::size_t x = 0; x < hoods.size(); ++x)
    ns.push_back({{"element", doc.universe().label(x)}, {"memberships", grades(hoods[x])}});
  return Json{{"coverings", o.coverings.empty() ? doc.system.names() : o.coverings},
              {"neighborhoods", std::move(ns)},
              {"induced_covering", covering_json(induced)}};
}

Json cmd_approx(const Options& o) {
  SystemDocument doc = load(o, o.file);
  const FuzzyCovering& c = pick_covering(doc, o);
  const FuzzySet& x = pick_set(doc, o);
  ApproxPair p = approximate(c, x);
  Json j{{"set", o.set}, {"lower", grades(p.lower)}, {"upper", grades(p.upper)},
         {"neighborhood_union", grades(neighborhood_union(c, x))}};
  try {
    j["subcovering_bound"] = grades(subcovering_bound(c, x));
  } catch (const Error& e) {
    if (e.code() != Errc::not_covered && e.code() != Errc::size_guard) throw;
    j["subcovering_bound"] = nullptr;
    j["subcovering_note"] = std::string(code_name(e.code())) + ": " + e.what();
  }
  j["roughness"] = rational(roughness(c, x));
  if (o.alpha || o.beta) {
    if (!o.alpha || !o.beta) throw UsageError("--alpha and --beta go together");
    Grade a = parse_grade(*o.alpha, doc.denominator), b = parse_grade(*o.beta, doc.denominator);
    j["alpha"] = format_grade(a);
    j["beta"] = format_grade(b);
    j["roughness_alpha_beta"] = rational(roughness_ab(c, x, a, b));
  }
  return j;
}

Json cmd_reduce(const Options& o) {
  SystemDocument doc = load(o, o.file);
  const FuzzyCovering& c = pick_covering(doc, o);
  FuzzyCovering r = o.mode == "red" ? reduce_covering(c) : reduce_intersections(c);
  std::vector<std::string> removed;
  for (const auto& m : c.members())
    if (!r.find(m.name)) removed.push_back(m.name);
  return Json{{"mode", o.mode}, {"covering", covering_json(r)}, {"removed", removed}};
}

Json cmd_lattice(const Options& o) {
  if (o.coverings.size() != 2) throw UsageError("lattice needs exactly two --covering options");
  SystemDocument doc = load(o, o.file);
  const FuzzyCovering& a = doc.system.get(o.coverings[0]);
  const FuzzyCovering& b = doc.system.get(o.coverings[1]);
  Json j{{"op", o.op}, {"left", o.coverings[0]}, {"right", o.coverings[1]}};
  if (o.op == "union") j["covering"] = covering_json(covering_union(a, b));
  else if (o.op == "intersection") j["covering"] = covering_json(covering_intersection(a, b));
  else {
    j["left_finer"] = is_coarser(a, b);
    j["right_finer"] = is_coarser(b, a);
    j["equal"] = covering_equal(a, b);
  }
  return j;
}

Json cmd_compress(const Options& o) { return compression(build_homomorphism(load(o, o.file).system)); }

Json cmd_reduct(const Options& o) {
  SystemDocument doc = load(o, o.file);
  if (!o.on_image) return Json{{"computed_on", "system"}, {"report", reducts(reduct_report(doc.system))}};
  CompressionResult r = build_homomorphism(doc.system);
  return Json{{"computed_on", "image"},
              {"objects", {{"before", doc.universe().size()}, {"after", r.image.universe().size()}}},
              {"report", reducts(reduct_report(r.image))}};
}

Json update(const SystemUpdate& u) {
  return Json{{"coverings", u.system.names()}, {"table", table(u.table)}, {"compression", compression(u.compression)}};
}

Json cmd_dyn_add(const Options& o) {
  if (o.addition.empty()) throw UsageError("dyn-add needs a second document holding the coverings to add");
  SystemDocument doc = load(o, o.file);
  SystemDocument extra = load(o, o.addition);
  FuzzyCoveringSystem s = doc.system;
  PartitionTable t = PartitionTable::build(s);
  std::optional<SystemUpdate> last;
  for (const auto& nc : extra.system.coverings()) {
    if (!o.coverings.empty() && std::find(o.coverings.begin(), o.coverings.end(), nc.name) == o.coverings.end())
      continue;
    last = add_covering(s, t, nc);
    s = last->system;
    t = last->table;
  }
  if (!last) throw Error(Errc::unknown_covering, "nothing to add", o.addition);
  return update(*last);
}

Json cmd_dyn_remove(const Options& o) {
  if (o.coverings.empty()) throw UsageError("dyn-remove needs at least one --covering");
  SystemDocument doc = load(o, o.file);
  FuzzyCoveringSystem s = doc.system;
  PartitionTable t = PartitionTable::build(s);
  std::optional<SystemUpdate> last;
  for (const auto& n : o.coverings) {
    last = remove_covering(s, t, n);
    s = last->system;
    t = last->table;
  }
  return update(*last);
}

int cmd_check(const Options& o, std::ostream& out) {
  verify::SuiteOptions so;
  so.seed = o.seed;
  so.cases = o.cases;
  verify::SuiteOptions dyn = so;
  dyn.cases = std::max<std::size_t>(1, o.cases / 2);
  std::vector<std::pair<std::string, std::vector<verify::Check>>> groups{
      {"golden", verify::golden_checks()},
      {"counterexamples", verify::counterexample_checks()},
      {"properties", verify::property_checks(so)},
      {"compression", verify::compression_checks(so)},
      {"dynamic", {verify::dynamic_checks(dyn)}},
      {"findings", verify::finding_checks(so)},
  };
  std::size_t failed = 0;
  out << "seed " << o.seed << ", " << o.cases << " cases per property\n";
  for (const auto& [name, checks] : groups) {
    out << "== " << name << "\n";
    for (const auto& c : checks) {
      const char* tag = c.verdict == verify::Verdict::pass ? "PASS" : c.verdict == verify::Verdict::fail ? "FAIL" : "INFO";
      out << tag << "  " << c.id << "  " << c.title << " (" << c.cases << ")";
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
      failed += !c.ok();
    }
  }
  out << (failed ? std::to_string(failed) + " failing checks\n" : "all checks pass\n");
  return failed ? 1 : 0;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy covering rough sets: approximations, reductions, compression and reducts"};
  app.require_subcommand(1);
  Options o;

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "system document (.json may be omitted)")->required();
    sub->add_option("--denominator", o.denominator, "grade grid denominator, overrides the document")
        ->check(CLI::Range(1u, kMaxDenominator));
    sub->add_option("--out", o.out, "write the report here instead of stdout");
  };
  auto covering_opt = [&](CLI::App* sub, const char* help) { sub->add_option("--covering", o.coverings, help); };

  auto* validate = app.add_subcommand("validate", "parse and check a system document");
  file_arg(validate);
  auto* hood = app.add_subcommand("neighborhood", "family neighborhoods and the induced covering");
  file_arg(hood);
  covering_opt(hood, "restrict to these coverings (repeatable)");
  auto* approx = app.add_subcommand("approx", "lower/upper approximations and roughness of a named set");
  file_arg(approx);
  covering_opt(approx, "covering to approximate against");
  approx->add_option("--set", o.set, "named query set")->required();
  approx->add_option("--alpha", o.alpha, "lower cut level for the alpha-beta roughness");
  approx->add_option("--beta", o.beta, "upper cut level for the alpha-beta roughness");
  auto* reduce = app.add_subcommand("reduce-covering", "irreducible (red) or non-intersectional (is) residue");
  file_arg(reduce);
  covering_opt(reduce, "covering to reduce");
  reduce->add_option("--mode", o.mode, "red or is")->check(CLI::IsMember({"red", "is"}));
  auto* lattice = app.add_subcommand("lattice", "union, intersection or coarseness of two coverings");
  file_arg(lattice);
  covering_opt(lattice, "the two coverings");
  lattice->add_option("--op", o.op, "union, intersection or coarser")
      ->check(CLI::IsMember({"union", "intersection", "coarser"}));
  auto* compress = app.add_subcommand("compress", "build the homomorphism and the compressed image system");
  file_arg(compress);
  auto* reduct = app.add_subcommand("reduct", "core, reducts and superfluous coverings");
  file_arg(reduct);
  reduct->add_option("--on-image", o.on_image, "compute on the compressed image (default true)");
  auto* dyn_add = app.add_subcommand("dyn-add", "add coverings incrementally and recompress");
  file_arg(dyn_add);
  dyn_add->add_option("addition", o.addition, "document whose coverings are added")->required();
  covering_opt(dyn_add, "only add these coverings from the second document");
  auto* dyn_remove = app.add_subcommand("dyn-remove", "remove coverings incrementally and recompress");
  file_arg(dyn_remove);
  covering_opt(dyn_remove, "coverings to remove, in order");
  auto* check = app.add_subcommand("check", "run the golden, counterexample and randomized suites");
  check->add_option("--seed", o.seed, "seed for the randomized suites");
  check->add_option("--cases", o.cases, "instances per property")->check(CLI::Range(std::size_t(1), std::size_t(1000000)));
  check->add_option("--out", o.out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      std::ostringstream ss;
      int rc = cmd_check(o, ss);
      emit(o, ss.str());
      return rc;
    }
    Json report;
    if (validate->parsed()) report = cmd_validate(o);
    else if (hood->parsed()) report = cmd_neighborhood(o);
    else if (approx->parsed()) report = cmd_approx(o);
    else if (reduce->parsed()) report = cmd_reduce(o);
    else if (lattice->parsed()) report = cmd_lattice(o);
    else if (compress->parsed()) report = cmd_compress(o);
    else if (reduct->parsed()) report = cmd_reduct(o);
    else if (dyn_add->parsed()) report = cmd_dyn_add(o);
    else if (dyn_remove->parsed()) report = cmd_dyn_remove(o);
    emit(o, report.dump(2) + "\n");
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << code_name(e.code()) << ": " << e.what();
    if (!e.location().empty()) std::cerr << " at " << e.location();
    std::cerr << "\n";
    return 1;
  }
}
