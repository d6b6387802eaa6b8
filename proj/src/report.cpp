#include "qhopf/report.hpp"

namespace qhopf {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Note: return "note";
  }
  return "?";
}

void Report::add(std::string name, CheckStatus status, uint64_t cases, std::string witness) {
  checks.push_back(CheckResult{std::move(name), status, std::move(witness), cases});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks) {
    CheckResult r = c;
    r.name = other.subject + "." + r.name;
    checks.push_back(std::move(r));
  }
  for (const auto& [k, v] : other.info) info[other.subject + "." + k] = v;
}

bool Report::all_passed() const { return failures() == 0; }

size_t Report::failures() const {
  size_t n = 0;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) ++n;
  return n;
}

std::string Report::summary() const {
  std::string s = subject + ":\n";
  for (const auto& c : checks) {
    s += "  [" + to_string(c.status) + "] " + c.name + " (" + std::to_string(c.cases) + " cases)";
    if (!c.witness.empty()) s += " -- " + c.witness;
    s += "\n";
  }
  return s;
}

}  // namespace qhopf
