#pragma once

// Structured results of axiom checks. A check either passes, fails with the
// lexicographically first violating basis tuple, or is blocked because a
// prerequisite check failed.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace h3l {

enum class Status { Pass, Fail, Blocked };

std::string to_string(Status s);

struct Witness {
  std::vector<std::string> tuple;  // "x1=e3"-style bindings
  std::string detail;              // e.g. "lhs = ..., rhs = ..."
};

struct CheckReport {
  std::string name;
  Status status = Status::Pass;
  std::uint64_t checked = 0;     // tuples fully evaluated
  std::uint64_t violations = 0;  // tuples where the identity failed
  std::uint64_t skipped = 0;     // tuples leaving the truncation window
  std::optional<Witness> witness;
  std::string note;

  bool passed() const { return status == Status::Pass; }
  static CheckReport blocked(std::string name, std::string note);
  static CheckReport verdict(std::string name, bool ok, std::string note = {});
};

struct SuiteReport {
  std::string name;
  std::vector<CheckReport> checks;

  bool passed() const;
  const CheckReport* find(const std::string& check) const;
  void add(CheckReport r) { checks.push_back(std::move(r)); }
  void append(const SuiteReport& other);
};

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace h3l
