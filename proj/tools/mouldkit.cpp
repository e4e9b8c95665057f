// mouldkit: exact checks of mould identities, double shuffle and
// Kashiwara-Vergne conditions.
#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mouldkit/app/cache.hpp"
#include "mouldkit/app/commands.hpp"
#include "mouldkit/app/pool.hpp"
#include "mouldkit/app/suite.hpp"
#include "mouldkit/errors.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace mouldkit;
  CLI::App app{"Exact verification of mould symmetries, dmr and krv"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string cache_dir;
  unsigned threads = app::default_threads();
  bool timings = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", cache_dir, "Basis cache directory (default: $MOULDKIT_CACHE)");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--timings", timings, "Include wall-clock timings (output is then not reproducible)");

  int weight = 3, rmax = 3, max_weight = app::kSuiteFullWeight;
  std::string source = "dmr-basis", input, algebra, property;

  auto* verify = app.add_subcommand("verify-senary", "Senary relation on dmr images or moulds from a file");
  verify->add_option("--weight", weight, "Weight of the dmr basis");
  verify->add_option("--rmax", rmax, "Largest depth r checked (r > 3 is reported as conjectural)");
  verify->add_option("--source", source, "dmr-basis or file")->check(CLI::IsMember({"dmr-basis", "file"}));
  verify->add_option("--input", input, "JSON input for --source file");

  auto* basis = app.add_subcommand("basis", "Graded basis of dmr or krv");
  basis->add_option("--algebra", algebra, "dmr or krv")->required()->check(CLI::IsMember({"dmr", "krv"}));
  basis->add_option("--weight", weight, "Weight")->required();

  auto* check = app.add_subcommand("check", "Test one property of a polynomial or mould");
  check->add_option("--property", property, "Property")
      ->required()
      ->check(CLI::IsMember({"alternal", "alternil", "pusnu", "senary", "kv1", "kv2", "dmr", "krv"}));
  check->add_option("--input", input, "JSON input")->required();

  auto* suite = app.add_subcommand("paper-suite", "Run every identity check up to a weight");
  suite->add_option("--max-weight", max_weight, "Weight cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  app::CommandOptions opt;
  opt.cache_dir = app::resolve_cache_dir(cache_dir);
  opt.threads = threads;

  try {
    const auto t0 = std::chrono::steady_clock::now();
    app::Report rep;
    if (*verify) rep = app::cmd_verify_senary(weight, rmax, source, input, opt);
    else if (*basis) rep = app::cmd_basis(algebra, weight, opt);
    else if (*check) rep = app::cmd_check(property, input, opt);
    else rep = app::cmd_paper_suite(max_weight, opt);
    rep.timings["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (format == "json")
      std::cout << rep.to_json(timings).dump(2) << "\n";
    else
      std::cout << rep.to_text(timings);
    return rep.passed() ? kExitPass : kExitMathFailure;
  } catch (const ParseError& e) {
    std::cerr << "mouldkit: parse error: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "mouldkit: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "mouldkit: " << e.what() << "\n";
  }
  return kExitUsage;
}
