#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fcov/covering.hpp"
#include "fcov/error.hpp"
#include "fcov/fuzzy_set.hpp"
#include "fcov/infosys.hpp"
#include "fcov/mapping.hpp"

namespace fcov {

inline constexpr int kFormatVersion = 1;

struct NamedSet {
  std::string name;
  FuzzySet set;

  friend bool operator==(const NamedSet&, const NamedSet&) = default;
};

struct NamedMapping {
  std::string name;
  PointMapping mapping;

  friend bool operator==(const NamedMapping&, const NamedMapping&) = default;
};

struct SystemDocument {
  int format_version = kFormatVersion;
  std::uint32_t denominator = kDefaultDenominator;
  FuzzyCoveringSystem system;
  std::vector<NamedSet> sets;
  std::vector<NamedMapping> mappings;
  std::vector<std::string> warnings;  // not part of the object model

  const Universe& universe() const noexcept { return system.universe(); }

  const FuzzySet& set(std::string_view name) const {
    for (const auto& s : sets)
      if (s.name == name) return s.set;
    throw Error(Errc::unknown_name, "no query set with this name", std::string(name));
  }
  const PointMapping& mapping(std::string_view name) const {
    for (const auto& m : mappings)
      if (m.name == name) return m.mapping;
    throw Error(Errc::unknown_name, "no mapping with this name", std::string(name));
  }

  friend bool operator==(const SystemDocument& a, const SystemDocument& b) {
    return a.format_version == b.format_version && a.denominator == b.denominator && a.system == b.system &&
           a.sets == b.sets && a.mappings == b.mappings;
  }
};

namespace detail {

using Json = nlohmann::json;

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw Error(Errc::parse_error, "expected an object", path);
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(Errc::parse_error, std::string("missing field '") + key + "'", path);
  return *it;
}

inline const Json& array_field(const Json& obj, const char* key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_array()) throw Error(Errc::parse_error, std::string("field '") + key + "' must be an array", path + "/" + key);
  return v;
}

inline std::string string_at(const Json& v, const std::string& path) {
  if (!v.is_string()) throw Error(Errc::parse_error, "expected a string", path);
  return v.get<std::string>();
}

inline std::vector<std::string> strings_at(const Json& arr, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(string_at(arr[i], path + "/" + std::to_string(i)));
  return out;
}

inline FuzzySet set_at(const Universe& u, const Json& obj, std::uint32_t den, const std::string& path) {
  const Json& ms = array_field(obj, "memberships", path);
  std::vector<std::uint32_t> nums;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::string p = path + "/memberships/" + std::to_string(i);
    std::string text = string_at(ms[i], p);
    try {
      nums.push_back(parse_grade(text, den).num);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), p);
    }
  }
  try {
    return FuzzySet(u, den, std::move(nums));
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), path + "/memberships");
  }
}

inline Json grades_json(const FuzzySet& s) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) arr.push_back(format_grade(s[i]));
  return arr;
}

}  // namespace detail

// Parses the JSON system format. A given denominator overrides the document's own.
inline SystemDocument parse_document(std::string_view text, std::optional<std::uint32_t> denominator = std::nullopt) {
  using detail::Json;
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse_error, "malformed document", detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!root.is_object()) throw Error(Errc::parse_error, "document must be an object", "/");

  int version = kFormatVersion;
  if (auto it = root.find("format_version"); it != root.end()) {
    if (!it->is_number_integer()) throw Error(Errc::parse_error, "format_version must be an integer", "/format_version");
    version = it->get<int>();
    if (version != kFormatVersion)
      throw Error(Errc::parse_error, "unsupported format_version " + std::to_string(version), "/format_version");
  }

  std::uint32_t den = kDefaultDenominator;
  if (auto it = root.find("denominator"); it != root.end()) {
    if (!it->is_number_unsigned() || it->get<std::uint64_t>() == 0 || it->get<std::uint64_t>() > kMaxDenominator)
      throw Error(Errc::parse_error, "denominator must be an integer in [1, " + std::to_string(kMaxDenominator) + "]",
                  "/denominator");
    den = it->get<std::uint32_t>();
  }
  if (denominator) {
    check_denominator(*denominator);
    den = *denominator;
  }

  const Json& labels = detail::array_field(root, "universe", "");
  std::optional<Universe> u;
  try {
    u.emplace(detail::strings_at(labels, "/universe"));
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), "/universe" + (e.location().empty() ? "" : " " + e.location()));
  }

  const Json& cov = detail::array_field(root, "coverings", "");
  if (cov.empty()) throw Error(Errc::parse_error, "document has no coverings", "/coverings");
  std::vector<NamedCovering> family;
  std::vector<std::string> warnings;
  for (std::size_t ci = 0; ci < cov.size(); ++ci) {
    std::string cp = "/coverings/" + std::to_string(ci);
    std::string cname = detail::string_at(detail::field(cov[ci], "name", cp), cp + "/name");
    const Json& sets = detail::array_field(cov[ci], "sets", cp);
    std::vector<Member> members;
    for (std::size_t si = 0; si < sets.size(); ++si) {
      std::string sp = cp + "/sets/" + std::to_string(si);
      std::string sname = detail::string_at(detail::field(sets[si], "name", sp), sp + "/name");
      members.push_back({std::move(sname), detail::set_at(*u, sets[si], den, sp)});
    }
    try {
      FuzzyCovering c = make_covering(*u, std::move(members));
      for (const auto& mr : c.merged())
        warnings.push_back("covering '" + cname + "': member '" + mr.dropped + "' repeats '" + mr.kept + "' and was merged");
      family.push_back({std::move(cname), std::move(c)});
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), cp + (e.location().empty() ? "" : " (" + e.location() + ")"));
    }
  }

  std::optional<FuzzyCoveringSystem> system;
  try {
    system.emplace(*u, std::move(family));
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), "/coverings" + (e.location().empty() ? "" : " (" + e.location() + ")"));
  }

  SystemDocument doc{version, den, std::move(*system), {}, {}, std::move(warnings)};

  if (auto it = root.find("sets"); it != root.end()) {
    if (!it->is_array()) throw Error(Errc::parse_error, "field 'sets' must be an array", "/sets");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string sp = "/sets/" + std::to_string(i);
      std::string name = detail::string_at(detail::field((*it)[i], "name", sp), sp + "/name");
      for (const auto& s : doc.sets)
        if (s.name == name) throw Error(Errc::duplicate_name, "query set name used twice", sp + "/name");
      doc.sets.push_back({std::move(name), detail::set_at(*u, (*it)[i], den, sp)});
    }
  }

  if (auto it = root.find("mappings"); it != root.end()) {
    if (!it->is_array()) throw Error(Errc::parse_error, "field 'mappings' must be an array", "/mappings");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string mp = "/mappings/" + std::to_string(i);
      const Json& mj = (*it)[i];
      std::string name = detail::string_at(detail::field(mj, "name", mp), mp + "/name");
      bool strict = true;
      if (auto sj = mj.find("surjective"); sj != mj.end()) {
        if (!sj->is_boolean()) throw Error(Errc::parse_error, "surjective must be a boolean", mp + "/surjective");
        strict = sj->get<bool>();
      }
      try {
        Universe target(detail::strings_at(detail::array_field(mj, "target", mp), mp + "/target"));
        std::vector<std::pair<std::string, std::string>> pairs;
        const Json& pj = detail::array_field(mj, "pairs", mp);
        for (std::size_t k = 0; k < pj.size(); ++k) {
          std::string pp = mp + "/pairs/" + std::to_string(k);
          if (!pj[k].is_array() || pj[k].size() != 2)
            throw Error(Errc::parse_error, "pair must be [source, target]", pp);
          pairs.emplace_back(detail::string_at(pj[k][0], pp + "/0"), detail::string_at(pj[k][1], pp + "/1"));
        }
        doc.mappings.push_back(
            {std::move(name), PointMapping::from_pairs(*u, target, pairs, strict ? Surjectivity::strict : Surjectivity::lax)});
      } catch (const Error& e) {
        if (e.location().rfind("/", 0) == 0) throw;
        throw Error(e.code(), e.what(), mp + (e.location().empty() ? "" : " (" + e.location() + ")"));
      }
    }
  }
  return doc;
}

inline nlohmann::ordered_json covering_json(const FuzzyCovering& c) {
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (const auto& m : c.members()) {
    nlohmann::ordered_json s;
    s["name"] = m.name;
    s["memberships"] = detail::grades_json(m.set);
    sets.push_back(std::move(s));
  }
  return sets;
}

inline nlohmann::ordered_json document_json(const SystemDocument& doc) {
  nlohmann::ordered_json root;
  root["format_version"] = doc.format_version;
  root["denominator"] = doc.denominator;
  root["universe"] = std::vector<std::string>(doc.universe().labels().begin(), doc.universe().labels().end());
  nlohmann::ordered_json cov = nlohmann::ordered_json::array();
  for (const auto& nc : doc.system.coverings()) {
    nlohmann::ordered_json c;
    c["name"] = nc.name;
    c["sets"] = covering_json(nc.covering);
    cov.push_back(std::move(c));
  }
  root["coverings"] = std::move(cov);
  if (!doc.sets.empty()) {
    nlohmann::ordered_json sets = nlohmann::ordered_json::array();
    for (const auto& s : doc.sets) {
      nlohmann::ordered_json j;
      j["name"] = s.name;
      j["memberships"] = detail::grades_json(s.set);
      sets.push_back(std::move(j));
    }
    root["sets"] = std::move(sets);
  }
  if (!doc.mappings.empty()) {
    nlohmann::ordered_json ms = nlohmann::ordered_json::array();
    for (const auto& m : doc.mappings) {
      nlohmann::ordered_json j;
      j["name"] = m.name;
      j["surjective"] = m.mapping.is_surjective();
      const auto& t = m.mapping.target();
      j["target"] = std::vector<std::string>(t.labels().begin(), t.labels().end());
      nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
      for (std::size_t x = 0; x < m.mapping.source().size(); ++x)
        pairs.push_back({m.mapping.source().label(x), t.label(m.mapping(x))});
      j["pairs"] = std::move(pairs);
      ms.push_back(std::move(j));
    }
    root["mappings"] = std::move(ms);
  }
  return root;
}

inline std::string serialize_document(const SystemDocument& doc) { return document_json(doc).dump(2) + "\n"; }

// Wraps a system in a document on the least grid holding all of its grades.
inline SystemDocument document_of(const FuzzyCoveringSystem& s) {
  std::uint32_t den = s.coverings().front().covering.denominator();
  for (const auto& nc : s.coverings()) den = common_denominator(den, nc.covering.denominator());
  return SystemDocument{kFormatVersion, den, s, {}, {}, {}};
}

}  // namespace fcov
