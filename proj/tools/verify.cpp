#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "smoothdiv/claims.hpp"
#include "smoothdiv/range.hpp"
#include "smoothdiv/rational.hpp"
#include "smoothdiv/record.hpp"

int main(int argc, char** argv) {
  using namespace smoothdiv;

  CLI::App app{"verify: per-point certificates for one claim over a sample range"};
  std::string claim;
  std::string x_min = "1", x_max = "1000000";
  std::string mode = "all-integers";
  uint64_t count = 512, max_denominator = 100, seed = 1;
  long precision_bits = 128;
  std::string out_path, format = "csv";

  app.add_option("claim", claim, "claim id to verify")->required();
  app.add_option("--x-min", x_min, "lower end of the range (rational)");
  app.add_option("--x-max", x_max, "upper end of the range (rational)");
  app.add_option("--mode", mode, "all-integers | geometric | random-rational");
  app.add_option("--count", count, "sample count for geometric / random-rational");
  app.add_option("--max-denominator", max_denominator,
                 "denominator cap for random-rational samples");
  app.add_option("--seed", seed, "seed for random-rational samples");
  app.add_option("--precision-bits", precision_bits, "working ball precision")
      ->check(CLI::Range(long(8), long(1) << 20));
  app.add_option("--out", out_path, "report file (default: stdout)");
  app.add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    RangeSpec spec;
    spec.x_min = parse_rational(x_min);
    spec.x_max = parse_rational(x_max);
    spec.mode = parse_mode(mode);
    spec.count = count;
    spec.max_denominator = max_denominator;
    spec.seed = seed;
    PrecisionPolicy pol;
    pol.working_bits = precision_bits;

    ClaimRun run = run_claim(claim, spec, pol);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw domain_error("cannot open --out file " + out_path);
      os = &file;
    }
    if (format == "json")
      write_json(*os, run);
    else
      write_csv(*os, run);
    os->flush();

    Status overall = run.overall();
    const char* word = overall == Status::Pass          ? "PASS"
                       : overall == Status::Fail        ? "FAIL"
                                                        : "INCONCLUSIVE";
    std::cerr << run.claim_id << ": " << run.records.size()
              << " records, overall " << word << "\n";
    for (const std::string& n : run.notes) std::cerr << "note: " << n << "\n";
    return exit_code_for(overall);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
