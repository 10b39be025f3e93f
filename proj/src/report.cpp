#include "h3l/report.hpp"

#include <algorithm>
#include <sstream>

namespace h3l {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "FAIL";
    case Status::Blocked: return "blocked";
  }
  return "?";
}

CheckReport CheckReport::blocked(std::string name, std::string note) {
  CheckReport r;
  r.name = std::move(name);
  r.status = Status::Blocked;
  r.note = std::move(note);
  return r;
}

CheckReport CheckReport::verdict(std::string name, bool ok, std::string note) {
  CheckReport r;
  r.name = std::move(name);
  r.status = ok ? Status::Pass : Status::Fail;
  r.checked = 1;
  r.violations = ok ? 0 : 1;
  r.note = std::move(note);
  return r;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

const CheckReport* SuiteReport::find(const std::string& check) const {
  for (const auto& c : checks)
    if (c.name == check) return &c;
  return nullptr;
}

void SuiteReport::append(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j = {{"name", r.name},
                      {"status", to_string(r.status)},
                      {"checked", r.checked},
                      {"violations", r.violations},
                      {"skipped", r.skipped}};
  if (r.witness) j["witness"] = {{"tuple", r.witness->tuple}, {"detail", r.witness->detail}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"suite", r.name}, {"passed", r.passed()}, {"checks", checks}};
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "== " << r.name << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << to_string(c.status) << "] " << c.name << "  checked=" << c.checked
        << " skipped=" << c.skipped;
    if (c.violations) out << " violations=" << c.violations;
    out << "\n";
    if (c.witness) {
      out << "      witness:";
      for (const auto& t : c.witness->tuple) out << " " << t;
      out << "\n";
      if (!c.witness->detail.empty()) out << "      " << c.witness->detail << "\n";
    }
    if (!c.note.empty()) out << "      note: " << c.note << "\n";
  }
  return out.str();
}

}  // namespace h3l
