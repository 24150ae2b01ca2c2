#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "lambek/harness.hpp"

#ifndef LAMBEK_DATA_DIR
#define LAMBEK_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks, one PASS/FAIL line per criterion"};
  lambek::HarnessOptions opt;
  opt.data_dir = LAMBEK_DATA_DIR;
  opt.out_dir = "acceptance-report";
  std::vector<int> only;
  app.add_option("--out", opt.out_dir, "report directory");
  app.add_option("--data", opt.data_dir, "grammar directory");
  app.add_option("--seed", opt.seed, "seed for the random trials");
  app.add_option("--timeout-ms", opt.timeout_ms, "per-query prover timeout");
  app.add_option("--only", only, "criteria to run (default all)");
  CLI11_PARSE(app, argc, argv);
  if (opt.cache_dir.empty()) opt.cache_dir = (std::filesystem::path(opt.out_dir) / "cache").string();

  bool all = true;
  auto reports = lambek::run_harness(opt, std::set<int>(only.begin(), only.end()), [&](const lambek::Report& r) {
    all &= r.pass;
    std::cout << lambek::report_line(r) << std::endl;
    for (const auto& f : r.failures) std::cout << "    " << f << '\n';
  });
  lambek::write_reports(reports, opt.out_dir);
  std::cout << (all ? "all criteria pass" : "some criteria fail") << ", report in " << opt.out_dir << '\n';
  return all ? 0 : 1;
}
