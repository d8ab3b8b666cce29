// Command-line front end: theorem verification, the graded suite, and ad-hoc
// application of a splitting operator to a polynomial expression.
//
//   fsplit verify --n 3 --p 2 [--checks all|rnc|split|kempf|delta]
//                 [--seed S] [--report PATH] [--format text|json]
//                 [--force] [--all-kempf]
//   fsplit graded --nmax 4 [--primes 2,3,5,7] [--dmax D]
//                 [--report PATH] [--format text|json]
//   fsplit eval --expr "x[2][1]^2*y[2][1]" --op section.json
//
// Exit codes: 0 pass, 1 fail, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fsplit/pipeline.hpp"
#include "fsplit/report.hpp"
#include "fsplit/splitting.hpp"
#include "fsplit/text_io.hpp"

namespace {

std::vector<std::uint32_t> parse_primes(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run_eval(const std::string& expr, const std::string& op_path) {
  std::ifstream in(op_path);
  if (!in.good()) {
    std::cerr << "error: cannot open operator file " << op_path << "\n";
    return 2;
  }
  nlohmann::json j;
  in >> j;
  if (!j.contains("p") || !j.contains("section")) {
    std::cerr << "error: operator file must carry {\"p\": ..., \"section\": ...}\n";
    return 2;
  }
  const std::uint32_t p = j["p"].get<std::uint32_t>();
  const std::string section_text = j["section"].get<std::string>();
  const fsplit::algebra::Ring ring = fsplit::algebra::inferred_ring(
      {std::string_view(section_text), std::string_view(expr)},
      fsplit::algebra::Characteristic(p));
  const fsplit::splitting::SplittingOperator op(
      fsplit::algebra::parse_polynomial(section_text, ring));
  const fsplit::algebra::Polynomial g = fsplit::algebra::parse_polynomial(expr, ring);
  std::cout << fsplit::algebra::to_string(op.apply(g)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagonal Frobenius-splitting verifier"};
  app.require_subcommand(1);

  // verify
  std::uint16_t n = 0;
  std::uint32_t p = 0;
  fsplit::pipeline::VerifyOptions opts;
  std::string report_path;
  std::string format = "text";
  CLI::App* verify = app.add_subcommand("verify", "run the theorem checks for one (n, p)");
  verify->add_option("--n", n, "rank of the flag variety factor")->required();
  verify->add_option("--p", p, "prime characteristic")->required();
  verify->add_option("--checks", opts.checks, "check group")
      ->check(CLI::IsMember({"all", "rnc", "split", "kempf", "delta"}));
  verify->add_option("--seed", opts.seed, "seed for randomized subchecks");
  verify->add_option("--report", report_path, "write the report to this path");
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--force", opts.force, "run past the resource guard");
  verify->add_flag("--all-kempf", opts.all_kempf, "verify every Kempf vector");

  // graded
  std::uint16_t nmax = 0;
  std::string primes = "2,3,5";
  std::uint32_t dmax = 0;
  std::string graded_report_path;
  std::string graded_format = "text";
  CLI::App* graded = app.add_subcommand("graded", "run the rank/Rees suite");
  graded->add_option("--nmax", nmax, "largest projective-space dimension")->required();
  graded->add_option("--primes", primes, "comma-separated primes");
  graded->add_option("--dmax", dmax, "identity degree bound (0 = 2n+3 per n)");
  graded->add_option("--report", graded_report_path, "write the report to this path");
  graded->add_option("--format", graded_format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  // eval
  std::string expr;
  std::string op_path;
  CLI::App* eval = app.add_subcommand("eval", "apply an operator to an expression");
  eval->add_option("--expr", expr, "polynomial expression")->required();
  eval->add_option("--op", op_path, "JSON file {\"p\": ..., \"section\": ...}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits 0; every parse problem is usage
  }

  try {
    if (verify->parsed()) {
      const auto rep = fsplit::pipeline::verify_theorem(n, p, opts);
      return fsplit::report::emit_report(rep, format, report_path);
    }
    if (graded->parsed()) {
      const auto rep = fsplit::pipeline::verify_graded(nmax, parse_primes(primes), dmax);
      return fsplit::report::emit_report(rep, graded_format, graded_report_path);
    }
    if (eval->parsed()) return run_eval(expr, op_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
