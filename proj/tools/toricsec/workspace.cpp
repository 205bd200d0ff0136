#include "workspace.hpp"

#include <set>

#include "json.hpp"

#include "toricsec/error.hpp"

namespace toricsec::cli {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string kind_name(WorkspaceErrorKind kind) {
  switch (kind) {
    case WorkspaceErrorKind::SyntaxError: return "SyntaxError";
    case WorkspaceErrorKind::UnresolvedReference: return "UnresolvedReference";
    case WorkspaceErrorKind::ValidationError: return "ValidationError";
    case WorkspaceErrorKind::DuplicateName: return "DuplicateName";
  }
  return "WorkspaceError";
}

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw WorkspaceError(WorkspaceErrorKind::ValidationError, path.empty() ? "/" : path, what);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void expect_keys(const json& j, const std::string& path, const std::set<std::string>& required,
                 const std::set<std::string>& optional = {}) {
  if (!j.is_object()) schema(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key)) schema(child(path, key), "unknown field '" + key + "'");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) schema(path, "missing field '" + key + "'");
  }
}

Int read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    schema(path, "integer out of range");
  }
  return j.get<Int>();
}

IntVector read_int_list(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected a list of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_int(j[i], child(path, i)));
  return out;
}

std::vector<IntVector> read_int_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected a list of integer lists");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_int_list(j[i], child(path, i)));
  return out;
}

std::string read_name(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a name");
  return j.get<std::string>();
}

[[noreturn]] void unresolved(const std::string& path, const std::string& name) {
  throw WorkspaceError(WorkspaceErrorKind::UnresolvedReference, path, "unknown name \"" + name + "\"");
}

[[noreturn]] void invalid(const std::string& path, const std::exception& e) {
  throw WorkspaceError(WorkspaceErrorKind::ValidationError, path, e.what());
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

ordered_json matrix_json(const std::vector<IntVector>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

}  // namespace

WorkspaceError::WorkspaceError(WorkspaceErrorKind kind, std::string location, const std::string& message)
    : std::runtime_error(kind_name(kind) + " at " + location + ": " + message),
      kind_(kind),
      location_(std::move(location)) {}

FanPtr WorkspaceDocument::fan(const std::string& name) const {
  auto it = fans.find(name);
  if (it == fans.end()) unresolved("/fans", name);
  return it->second.fan;
}

TorusDivisor WorkspaceDocument::divisor(const std::string& name) const {
  auto it = divisors.find(name);
  if (it == divisors.end()) unresolved("/divisors", name);
  return TorusDivisor(fan(it->second.fan), it->second.coeffs);
}

Collection WorkspaceDocument::collection(const std::string& name) const {
  auto it = collections.find(name);
  if (it == collections.end()) unresolved("/collections", name);
  const FanPtr f = fan(it->second.fan);
  std::vector<TorusDivisor> bundles;
  for (const auto& ref : it->second.bundles) {
    if (const auto* n = std::get_if<std::string>(&ref)) {
      bundles.push_back(divisor(*n));
    } else {
      bundles.emplace_back(f, std::get<IntVector>(ref));
    }
  }
  return Collection(f, std::move(bundles));
}

const FibrationData& WorkspaceDocument::fibration(const std::string& name) const {
  auto it = fibrations.find(name);
  if (it == fibrations.end()) unresolved("/fibrations", name);
  return *it->second.data;
}

std::optional<std::string> WorkspaceDocument::fan_name(const FanPtr& f) const {
  for (const auto& [name, entry] : fans) {
    if (same_fan(entry.fan, f)) return name;
  }
  return std::nullopt;
}

bool operator==(const WorkspaceDocument& a, const WorkspaceDocument& b) {
  auto raw_eq = [](const RawFan& x, const RawFan& y) {
    return x.rank == y.rank && x.rays == y.rays && x.max_cones == y.max_cones;
  };
  if (a.fans.size() != b.fans.size()) return false;
  for (auto ia = a.fans.begin(), ib = b.fans.begin(); ia != a.fans.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !raw_eq(ia->second.raw, ib->second.raw)) return false;
  }
  auto div_eq = [](const auto& x, const auto& y) {
    return x.first == y.first && x.second.fan == y.second.fan && x.second.coeffs == y.second.coeffs;
  };
  auto coll_eq = [](const auto& x, const auto& y) {
    return x.first == y.first && x.second.fan == y.second.fan && x.second.bundles == y.second.bundles;
  };
  auto fib_eq = [](const auto& x, const auto& y) {
    return x.first == y.first && x.second.total == y.second.total && x.second.base == y.second.base &&
           x.second.projection == y.second.projection;
  };
  return std::equal(a.divisors.begin(), a.divisors.end(), b.divisors.begin(), b.divisors.end(), div_eq) &&
         std::equal(a.collections.begin(), a.collections.end(), b.collections.begin(),
                    b.collections.end(), coll_eq) &&
         std::equal(a.fibrations.begin(), a.fibrations.end(), b.fibrations.begin(),
                    b.fibrations.end(), fib_eq);
}

WorkspaceDocument parse_workspace(const std::string& text) {
  // Reject duplicate keys, which the JSON parser would otherwise collapse.
  std::vector<std::set<std::string>> key_stack;
  std::optional<std::string> duplicate;
  json::parser_callback_t cb = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        key_stack.emplace_back();
        break;
      case json::parse_event_t::object_end:
        key_stack.pop_back();
        break;
      case json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!key_stack.back().insert(key).second && !duplicate) duplicate = key;
        break;
      }
      default:
        break;
    }
    return true;
  };

  json root;
  try {
    root = json::parse(text, cb);
  } catch (const json::parse_error& e) {
    throw WorkspaceError(WorkspaceErrorKind::SyntaxError, line_column(text, e.byte), e.what());
  }
  if (duplicate) {
    throw WorkspaceError(WorkspaceErrorKind::DuplicateName, "/", "key \"" + *duplicate + "\" appears twice in one object");
  }
  expect_keys(root, "", {}, {"fans", "divisors", "collections", "fibrations"});

  WorkspaceDocument doc;
  if (root.contains("fans")) {
    const auto& fans = root["fans"];
    if (!fans.is_object()) schema("/fans", "expected a map of fans");
    for (const auto& [name, f] : fans.items()) {
      const std::string path = child("/fans", name);
      expect_keys(f, path, {"rank", "rays", "max_cones"});
      RawFan raw;
      const Int rank = read_int(f["rank"], child(path, "rank"));
      if (rank < 0 || rank > 64) schema(child(path, "rank"), "rank out of range");
      raw.rank = static_cast<int>(rank);
      raw.rays = read_int_matrix(f["rays"], child(path, "rays"));
      raw.max_cones = read_int_matrix(f["max_cones"], child(path, "max_cones"));
      FanPtr fan;
      try {
        fan = validate_fan(raw);
      } catch (const ToricError& e) {
        invalid(path, e);
      }
      doc.fans.emplace(name, FanEntry{std::move(raw), std::move(fan)});
    }
  }
  if (root.contains("divisors")) {
    const auto& divs = root["divisors"];
    if (!divs.is_object()) schema("/divisors", "expected a map of divisors");
    for (const auto& [name, d] : divs.items()) {
      const std::string path = child("/divisors", name);
      expect_keys(d, path, {"fan", "coeffs"});
      DivisorEntry entry{read_name(d["fan"], child(path, "fan")), read_int_list(d["coeffs"], child(path, "coeffs"))};
      if (!doc.fans.count(entry.fan)) unresolved(child(path, "fan"), entry.fan);
      try {
        TorusDivisor(doc.fan(entry.fan), entry.coeffs);
      } catch (const ToricError& e) {
        invalid(path, e);
      }
      doc.divisors.emplace(name, std::move(entry));
    }
  }
  if (root.contains("collections")) {
    const auto& colls = root["collections"];
    if (!colls.is_object()) schema("/collections", "expected a map of collections");
    for (const auto& [name, c] : colls.items()) {
      const std::string path = child("/collections", name);
      expect_keys(c, path, {"fan", "bundles"});
      CollectionEntry entry{read_name(c["fan"], child(path, "fan")), {}};
      if (!doc.fans.count(entry.fan)) unresolved(child(path, "fan"), entry.fan);
      const auto& bundles = c["bundles"];
      if (!bundles.is_array()) schema(child(path, "bundles"), "expected a list of bundles");
      for (std::size_t i = 0; i < bundles.size(); ++i) {
        const std::string bpath = child(child(path, "bundles"), i);
        if (bundles[i].is_string()) {
          const auto ref = bundles[i].get<std::string>();
          auto it = doc.divisors.find(ref);
          if (it == doc.divisors.end()) unresolved(bpath, ref);
          if (it->second.fan != entry.fan) {
            throw WorkspaceError(WorkspaceErrorKind::ValidationError, bpath,
                                 "divisor \"" + ref + "\" is on fan \"" + it->second.fan + "\", not \"" +
                                     entry.fan + "\"");
          }
          entry.bundles.emplace_back(ref);
        } else {
          entry.bundles.emplace_back(read_int_list(bundles[i], bpath));
        }
      }
      doc.collections.emplace(name, std::move(entry));
      try {
        doc.collection(name);
      } catch (const ToricError& e) {
        invalid(path, e);
      }
    }
  }
  if (root.contains("fibrations")) {
    const auto& fibs = root["fibrations"];
    if (!fibs.is_object()) schema("/fibrations", "expected a map of fibrations");
    for (const auto& [name, f] : fibs.items()) {
      const std::string path = child("/fibrations", name);
      expect_keys(f, path, {"total", "base", "projection"});
      FibrationEntry entry{read_name(f["total"], child(path, "total")), read_name(f["base"], child(path, "base")),
                           read_int_matrix(f["projection"], child(path, "projection")), nullptr};
      if (!doc.fans.count(entry.total)) unresolved(child(path, "total"), entry.total);
      if (!doc.fans.count(entry.base)) unresolved(child(path, "base"), entry.base);
      const FanPtr total = doc.fan(entry.total);
      const FanPtr base = doc.fan(entry.base);
      const auto cols = static_cast<std::size_t>(total->rank());
      try {
        IntMatrix m(entry.projection.size(), cols);
        for (std::size_t r = 0; r < entry.projection.size(); ++r) {
          if (entry.projection[r].size() != cols) {
            throw ToricError(ErrorCode::MalformedMorphism,
                             "projection row " + std::to_string(r) + " has the wrong length");
          }
          for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry.projection[r][c];
        }
        entry.data = std::make_shared<const FibrationData>(validate_fibration(total, base, m));
      } catch (const ToricError& e) {
        invalid(path, e);
      }
      doc.fibrations.emplace(name, std::move(entry));
    }
  }
  return doc;
}

std::string serialize_workspace(const WorkspaceDocument& doc) {
  ordered_json root = ordered_json::object();
  if (!doc.fans.empty()) {
    ordered_json fans = ordered_json::object();
    for (const auto& [name, e] : doc.fans) {
      ordered_json f = ordered_json::object();
      f["rank"] = e.raw.rank;
      f["rays"] = matrix_json(e.raw.rays);
      f["max_cones"] = matrix_json(e.raw.max_cones);
      fans[name] = std::move(f);
    }
    root["fans"] = std::move(fans);
  }
  if (!doc.divisors.empty()) {
    ordered_json divs = ordered_json::object();
    for (const auto& [name, e] : doc.divisors) {
      ordered_json d = ordered_json::object();
      d["fan"] = e.fan;
      d["coeffs"] = e.coeffs;
      divs[name] = std::move(d);
    }
    root["divisors"] = std::move(divs);
  }
  if (!doc.collections.empty()) {
    ordered_json colls = ordered_json::object();
    for (const auto& [name, e] : doc.collections) {
      ordered_json c = ordered_json::object();
      c["fan"] = e.fan;
      ordered_json bundles = ordered_json::array();
      for (const auto& ref : e.bundles) {
        if (const auto* n = std::get_if<std::string>(&ref)) bundles.push_back(*n);
        else bundles.push_back(std::get<IntVector>(ref));
      }
      c["bundles"] = std::move(bundles);
      colls[name] = std::move(c);
    }
    root["collections"] = std::move(colls);
  }
  if (!doc.fibrations.empty()) {
    ordered_json fibs = ordered_json::object();
    for (const auto& [name, e] : doc.fibrations) {
      ordered_json f = ordered_json::object();
      f["total"] = e.total;
      f["base"] = e.base;
      f["projection"] = matrix_json(e.projection);
      fibs[name] = std::move(f);
    }
    root["fibrations"] = std::move(fibs);
  }
  return root.dump(2) + "\n";
}

void add_fan(WorkspaceDocument& doc, const std::string& name, const FanPtr& fan) {
  doc.fans[name] = FanEntry{fan->raw(), fan};
}

void add_collection(WorkspaceDocument& doc, const std::string& name, const std::string& fan_name,
                    const Collection& collection) {
  CollectionEntry entry{fan_name, {}};
  for (const auto& b : collection.bundles()) entry.bundles.emplace_back(b.coeffs());
  doc.collections[name] = std::move(entry);
}

}  // namespace toricsec::cli
