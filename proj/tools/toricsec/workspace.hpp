#pragma once

// Workspace documents: named fans, divisors, collections and fibrations in a
// single JSON file.
//
//   {
//     "fans":        { "<name>": { "rank": 2, "rays": [[1,0], ...], "max_cones": [[0,1], ...] } },
//     "divisors":    { "<name>": { "fan": "<fan>", "coeffs": [1,0,0] } },
//     "collections": { "<name>": { "fan": "<fan>", "bundles": ["<divisor>", [0,0,0], ...] } },
//     "fibrations":  { "<name>": { "total": "<fan>", "base": "<fan>", "projection": [[1,0]] } }
//   }
//
// All four top-level maps are optional. Indices are 0-based.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "toricsec/collection.hpp"
#include "toricsec/fan.hpp"
#include "toricsec/fibration.hpp"

namespace toricsec::cli {

enum class WorkspaceErrorKind { SyntaxError, UnresolvedReference, ValidationError, DuplicateName };

class WorkspaceError : public std::runtime_error {
 public:
  WorkspaceError(WorkspaceErrorKind kind, std::string location, const std::string& message);
  WorkspaceErrorKind kind() const noexcept { return kind_; }
  /// "line L, column C" for syntax errors, a JSON pointer otherwise.
  const std::string& location() const noexcept { return location_; }

 private:
  WorkspaceErrorKind kind_;
  std::string location_;
};

struct FanEntry {
  RawFan raw;
  FanPtr fan;
};

struct DivisorEntry {
  std::string fan;
  IntVector coeffs;
};

/// A collection member: a divisor name or inline coefficients.
using BundleRef = std::variant<std::string, IntVector>;

struct CollectionEntry {
  std::string fan;
  std::vector<BundleRef> bundles;
};

struct FibrationEntry {
  std::string total;
  std::string base;
  std::vector<IntVector> projection;
  std::shared_ptr<const FibrationData> data;
};

class WorkspaceDocument {
 public:
  std::map<std::string, FanEntry> fans;
  std::map<std::string, DivisorEntry> divisors;
  std::map<std::string, CollectionEntry> collections;
  std::map<std::string, FibrationEntry> fibrations;

  /// Lookups throw WorkspaceError(UnresolvedReference) for unknown names.
  FanPtr fan(const std::string& name) const;
  TorusDivisor divisor(const std::string& name) const;
  Collection collection(const std::string& name) const;
  const FibrationData& fibration(const std::string& name) const;

  /// Name of a fan in this document equal to `fan`, if any.
  std::optional<std::string> fan_name(const FanPtr& fan) const;

  /// Compares the declared content; resolved objects follow from it.
  friend bool operator==(const WorkspaceDocument& a, const WorkspaceDocument& b);
};

/// Parses and fully validates a workspace. Throws WorkspaceError.
WorkspaceDocument parse_workspace(const std::string& text);

/// Canonical JSON text; parse_workspace(serialize_workspace(d)) == d.
std::string serialize_workspace(const WorkspaceDocument& doc);

/// Adds a fan (validated) to a document under `name`.
void add_fan(WorkspaceDocument& doc, const std::string& name, const FanPtr& fan);
/// Adds a collection with inline coefficient bundles.
void add_collection(WorkspaceDocument& doc, const std::string& name, const std::string& fan_name,
                    const Collection& collection);

}  // namespace toricsec::cli
