#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nonarch/document.hpp"
#include "nonarch/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string document = "-";
  std::string csv;
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::optional<long> precision;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw nonarch::DocumentError(nonarch::ErrorCode::ParseError, path, "cannot read file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::optional<std::string>& op, const Options& opt) {
  nonarch::RunOutput out =
      nonarch::run_document(nonarch::parse_document(read_input(opt.document)), op, opt.precision);
  if (!opt.csv.empty()) {
    std::ofstream csv(opt.csv);
    if (!csv) {
      std::cerr << "cannot write " << opt.csv << '\n';
      return kInputError;
    }
    csv << out.csv;
  }
  std::cout << out.report.dump(2) << '\n';
  return kOk;
}

int verify(const Options& opt) {
  auto results = nonarch::verify(opt.suite, opt.seed);
  nlohmann::ordered_json report;
  report["schema"] = "1";
  report["seed"] = opt.seed;
  bool ok = true;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    ok = ok && r.ok();
    suites.push_back({{"suite", r.suite},
                      {"instances", r.instances},
                      {"passed", r.passed},
                      {"status", r.ok() ? "pass" : "fail"},
                      {"failures", r.failures}});
  }
  report["suites"] = suites;
  report["status"] = ok ? "pass" : "fail";
  std::cout << report.dump(2) << '\n';
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-adic function theory: polygons, Weierstrass division, value distribution, residues"};
  app.require_subcommand(1);
  Options opt;
  bool json_flag = true;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json_flag, "JSON report on stdout (default)");
    cmd->add_option("--csv", opt.csv, "write piecewise-linear breakpoints as CSV");
    cmd->add_option("--seed", opt.seed, "seed for randomized suites");
    cmd->add_option("--precision", opt.precision, "default precision k")->check(CLI::PositiveNumber);
  };

  const char* ops[][2] = {
      {"polygon", "valuation polygon, critical radii and sup-norms"},
      {"zeros", "count zeros in a closed annulus"},
      {"factor", "Weierstrass preparation f = P u"},
      {"divide", "division by a dominant polynomial"},
      {"nevanlinna", "m, N, T, defects and ramification"},
      {"smt", "second main theorem slack"},
      {"abc", "abc inequality for f + g = h"},
      {"residue", "partial fractions and residues on a circle"},
      {"schnirelman", "root-of-unity averages"},
      {"build", "Weierstrass product from prescribed zeros"},
  };
  std::optional<std::string> chosen;
  for (const auto& [name, help] : ops) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("document", opt.document, "analysis document, - for stdin");
    add_common(cmd);
    cmd->callback([&chosen, n = std::string(name)] { chosen = n; });
  }
  CLI::App* run_cmd = app.add_subcommand("run", "run a document whose requests name their op");
  run_cmd->add_option("document", opt.document, "analysis document, - for stdin");
  add_common(run_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("suite", opt.suite, "polygon, division, preparation, hasse, nevanlinna, schnirelman or all");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (verify_cmd->parsed()) return verify(opt);
    return run(chosen, opt);
  } catch (const nonarch::Error& e) {
    std::cerr << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "ValidationError: " << e.what() << '\n';
    return kInputError;
  }
}
