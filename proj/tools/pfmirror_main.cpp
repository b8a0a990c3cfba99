// pfmirror: Picard-Fuchs discovery, instanton tables, line counts and the
// orbifold Euler characteristic check from the command line.
//
//   pfmirror pf [--primes p1,p2] [--lambda-count 4] [--seed 1]
//   pfmirror yukawa --family 3,3 [--d-max 10] [--format json|csv]
//   pfmirror lines --family 2,4 [--ambient 5]
//   pfmirror euler
//
// Reports go to stdout or to --out PATH.  A relative PATH is resolved
// against $PFMIRROR_OUT_DIR when that variable is set.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>

#include <CLI11.hpp>

#include "pfmirror/report.hpp"

namespace {

struct Options {
  std::string family;
  int d_max = 10;
  std::string primes = "2147483647,2147483629";
  int lambda_count = 4;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  int ambient = -1;
  bool timing = false;
};

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("PFMIRROR_OUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

int emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return 0;
  }
  const auto path = output_path(opt.out);
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << pfm::error_report("", "io_error", "cannot write " + path.string()).dump(2) << "\n";
    return 3;
  }
  f << text;
  return 0;
}

pfm::Json run(const std::string& cmd, const Options& opt) {
  if (cmd == "pf") {
    const auto primes = pfm::parse_primes(opt.primes);
    return pfm::cmd_pf(primes, opt.lambda_count, opt.seed);
  }
  if (cmd == "yukawa") {
    if (opt.family.empty()) throw pfm::InvalidInput("--family is required");
    return pfm::cmd_yukawa(pfm::parse_family(opt.family), opt.d_max);
  }
  if (cmd == "lines") {
    if (opt.family.empty()) throw pfm::InvalidInput("--family is required");
    std::vector<int> degrees;
    for (const auto& part : CLI::detail::split(opt.family, ',')) degrees.push_back(std::stoi(part));
    int n = opt.ambient;
    if (n < 0) n = std::accumulate(degrees.begin(), degrees.end(), 0) - 1;
    return pfm::cmd_lines(degrees, n);
  }
  return pfm::cmd_euler();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard-Fuchs operators and mirror predictions for Calabi-Yau complete intersections"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", opt.out, "Write the report to PATH");
    sub->add_flag("--timing", opt.timing, "Include wall-clock timing in the report");
  };

  auto* pf = app.add_subcommand("pf", "Recover the Picard-Fuchs relation by multi-modular reduction");
  pf->add_option("--primes", opt.primes, "Comma-separated primes (at least two)");
  pf->add_option("--lambda-count", opt.lambda_count, "Accepted lambda samples per prime");
  pf->add_option("--seed", opt.seed, "Seed for lambda sampling");
  common(pf);

  auto* yk = app.add_subcommand("yukawa", "Yukawa coupling and instanton numbers");
  yk->add_option("--family", opt.family, "Degrees, e.g. 3,3 or 2,2,2,2")->required();
  yk->add_option("--d-max", opt.d_max, "Largest degree")->check(CLI::PositiveNumber);
  common(yk);

  auto* ln = app.add_subcommand("lines", "Count lines by Schubert calculus");
  ln->add_option("--family", opt.family, "Degrees, e.g. 2,4")->required();
  ln->add_option("--ambient", opt.ambient, "n of P^n (default: sum of degrees - 1)");
  common(ln);

  auto* eu = app.add_subcommand("euler", "Orbifold Euler characteristic of the two-cubic quotient");
  common(eu);

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  if (opt.format == "csv" && cmd != "yukawa") {
    std::cerr << pfm::error_report(cmd, "invalid_input", "csv output is only available for yukawa").dump(2) << "\n";
    return 2;
  }

  pfm::Json report;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    report = run(cmd, opt);
  } catch (const pfm::Error& e) {
    std::cerr << pfm::error_report(cmd, e.kind(), e.what()).dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << pfm::error_report(cmd, "invalid_input", e.what()).dump(2) << "\n";
    return 2;
  }
  if (opt.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    report["timing"] = {{"seconds", dt.count()}};
  }

  if (opt.format == "csv") return emit(opt, pfm::instantons_csv(report));
  return emit(opt, report.dump(2) + "\n");
}
