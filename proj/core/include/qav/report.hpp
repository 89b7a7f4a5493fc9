#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qav {

enum class Status { pass, fail, skipped };
const char* status_name(Status s);

struct Check {
  std::string id;       // stable, sortable identifier, e.g. "ybe.n2"
  Status status = Status::fail;
  std::string detail;   // what was verified / why skipped
  std::optional<std::string> counterexample;
};

struct Report {
  std::string suite;
  std::map<std::string, std::string> params;  // ordered => deterministic output
  std::vector<Check> checks;
  long wall_time_ms = 0;

  void add(Check c) { checks.push_back(std::move(c)); }
  void pass(const std::string& id, const std::string& detail);
  void fail(const std::string& id, const std::string& detail,
            const std::string& counterexample);
  void skip(const std::string& id, const std::string& reason);
  void merge(const Report& other);  // absorb checks of a sub-report
  void sort_checks();               // by id (stable)
  bool all_passed() const;          // no Status::fail present
  size_t failures() const;

  // Deterministic JSON rendering (sorted keys, no timestamps beyond
  // wall_time_ms which callers may zero for byte-stable output).
  std::string to_json(bool include_time = true) const;
};

}  // namespace qav
