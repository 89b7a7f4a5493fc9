#include "qav/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace qav {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

void Report::pass(const std::string& id, const std::string& detail) {
  add({id, Status::pass, detail, std::nullopt});
}

void Report::fail(const std::string& id, const std::string& detail,
                  const std::string& counterexample) {
  add({id, Status::fail, detail, counterexample});
}

void Report::skip(const std::string& id, const std::string& reason) {
  add({id, Status::skipped, reason, std::nullopt});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) checks.push_back(c);
  wall_time_ms += other.wall_time_ms;
}

void Report::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.id < b.id; });
}

bool Report::all_passed() const { return failures() == 0; }

size_t Report::failures() const {
  size_t k = 0;
  for (const auto& c : checks)
    if (c.status == Status::fail) ++k;
  return k;
}

std::string Report::to_json(bool include_time) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["status"] = status_name(c.status);
    cj["detail"] = c.detail;
    if (c.counterexample) cj["counterexample"] = *c.counterexample;
    cs.push_back(cj);
  }
  j["checks"] = cs;
  if (include_time) j["wall_time_ms"] = wall_time_ms;
  return j.dump(2);
}

}  // namespace qav
