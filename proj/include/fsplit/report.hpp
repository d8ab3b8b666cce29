#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fsplit::report {

// Verdict of one named check.  "Probabilistic" marks verdicts based on
// random sampling; they are reported distinctly and never silently upgraded
// to plain passes.
enum class Status { Pass, Fail, Skipped, Probabilistic };

std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Skipped;
  std::string witness;  // failure witness or a note on what was verified
  std::int64_t duration_ms = 0;
};

struct VerificationReport {
  std::uint16_t n = 0;
  std::uint32_t p = 0;  // 0 when the report spans several characteristics
  std::vector<CheckResult> checks;

  bool overall_pass() const;       // no check failed
  bool has_probabilistic() const;  // at least one sampled verdict
};

// Deterministic renderings; checks are listed sorted by name.
std::string to_text(const VerificationReport& r);
std::string to_json(const VerificationReport& r);

// Writes the chosen rendering ("text" or "json") to the path, or to stdout
// when the path is empty or "-".  Returns the process exit code: 0 for an
// overall pass, 1 for a failed report or an I/O error (diagnostic on
// stderr).  An unknown format throws std::invalid_argument.
int emit_report(const VerificationReport& r, const std::string& format,
                const std::string& path);

}  // namespace fsplit::report
