#pragma once

// Machine-check reports: every verifier returns one CheckResult per axiom
// family, carrying a witness string when something fails and the number of
// cases actually exercised. Checks that a truncation budget cannot cover are
// reported Skipped, never silently dropped.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qhopf {

enum class CheckStatus { Pass, Fail, Skipped, Note };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // first counterexample, or a remark for Skipped/Note
  uint64_t cases = 0;   // instances exercised
};

struct Report {
  std::string subject;
  std::vector<CheckResult> checks;
  std::map<std::string, std::string> info;  // dimensions, variants, timings

  void add(std::string name, CheckStatus status, uint64_t cases, std::string witness = "");
  void merge(const Report& other);  // prefixes other's check names with its subject
  bool all_passed() const;          // no Fail (Skipped and Note are allowed)
  size_t failures() const;
  std::string summary() const;  // one line per check, plain text
};

// Sweep accumulator: counts cases, keeps the first counterexample only.
struct CaseCounter {
  uint64_t cases = 0;
  std::optional<std::string> witness;
  void fail(std::string w) {
    if (!witness) witness = std::move(w);
  }
  void commit(Report& rep, const std::string& name) const {
    rep.add(name, witness ? CheckStatus::Fail : CheckStatus::Pass, cases,
            witness ? *witness : "");
  }
};

}  // namespace qhopf
