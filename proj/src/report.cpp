#include "fsplit/report.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace fsplit::report {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
    case Status::Probabilistic:
      return "probabilistic";
  }
  return "unknown";
}

bool VerificationReport::overall_pass() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == Status::Fail; });
}

bool VerificationReport::has_probabilistic() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == Status::Probabilistic; });
}

namespace {

std::vector<CheckResult> sorted_checks(const VerificationReport& r) {
  std::vector<CheckResult> cs = r.checks;
  std::stable_sort(cs.begin(), cs.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return cs;
}

}  // namespace

std::string to_text(const VerificationReport& r) {
  std::string out = "verification report";
  if (r.n) out += "  n=" + std::to_string(r.n);
  if (r.p) out += "  p=" + std::to_string(r.p);
  out += "\n";
  for (const CheckResult& c : sorted_checks(r)) {
    std::string tag = to_string(c.status);
    tag.resize(13, ' ');
    out += "  [" + tag + "] " + c.name + " (" + std::to_string(c.duration_ms) + " ms)";
    if (!c.witness.empty()) out += " -- " + c.witness;
    out += "\n";
  }
  out += "overall: ";
  out += r.overall_pass() ? "pass" : "fail";
  if (r.has_probabilistic()) out += " (includes probabilistic verdicts)";
  out += "\n";
  return out;
}

std::string to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["overall"] = r.overall_pass() ? "pass" : "fail";
  j["probabilistic"] = r.has_probabilistic();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : sorted_checks(r)) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    e["duration_ms"] = c.duration_ms;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

int emit_report(const VerificationReport& r, const std::string& format,
                const std::string& path) {
  std::string body;
  if (format == "text")
    body = to_text(r);
  else if (format == "json")
    body = to_json(r);
  else
    throw std::invalid_argument("unknown report format: " + format);

  if (path.empty() || path == "-") {
    std::cout << body;
  } else {
    std::ofstream f(path);
    f << body;
    f.flush();
    if (!f) {
      std::cerr << "error: could not write report to " << path << "\n";
      return 1;
    }
  }
  return r.overall_pass() ? 0 : 1;
}

}  // namespace fsplit::report
