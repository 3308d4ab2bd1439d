#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace ainf {

using Json = nlohmann::json;

/// One failed identity instance, with a machine-readable location that is
/// enough to replay the instance through the library.
struct Violation {
  std::string clause;
  Json location;
  std::string detail;
};

/// Result of a checker: the number of identity instances evaluated, the
/// violations found (at most one per location class), notes, and any computed
/// data. JSON output uses sorted keys, so serialization is deterministic.
struct Report {
  std::string check;
  std::size_t instances = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  Json data = Json::object();

  bool passed() const { return violations.empty(); }
  void add_violation(std::string clause, Json location, std::string detail) {
    violations.push_back({std::move(clause), std::move(location), std::move(detail)});
  }
  /// Appends another report's instances, violations and notes; violations and
  /// notes keep their clause names prefixed by `prefix` when it is non-empty.
  void absorb(const Report& other, const std::string& prefix = {});
  Json to_json() const;
  /// Short human-readable summary: PASS/FAIL line and the first violation.
  std::string summary() const;
};

}  // namespace ainf
