#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sclab/errors.hpp"
#include "sclab/verifier.hpp"

namespace {

int run_verify(const sclab::VerificationPlan& plan, const std::string& report_path,
               sclab::ReportFormat format) {
  const sclab::Report report = sclab::run(plan);
  if (report_path.empty() || report_path == "-") {
    std::cout << sclab::emit_report(report, format);
  } else {
    sclab::write_report(report, format, report_path);
  }
  const int code = sclab::exit_code(report, plan.strict);
  if (code == sclab::exit_codes::kMismatch) std::cerr << "sclab: mismatch found\n";
  if (code == sclab::exit_codes::kInconclusive) std::cerr << "sclab: inconclusive edges under --strict\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  namespace ec = sclab::exit_codes;
  CLI::App app{"sclab: collections of p-subgroups and their homotopy equivalences"};
  app.require_subcommand(1);

  sclab::VerificationPlan plan;
  if (const char* env = std::getenv("SCLAB_CACHE")) plan.cache_dir = env;
  std::string suite = "all", format = "json", report_path;

  auto* verify = app.add_subcommand("verify", "run a verification suite on one group and prime");
  verify->add_option("--group", plan.group_source, "group file or builtin:NAME")->required();
  verify->add_option("--prime", plan.prime, "prime dividing the group order")->required();
  verify->add_option("--suite", suite, "table31|table44|counterexamples|inclusions|conditions|all")
      ->check(CLI::IsMember({"table31", "table44", "counterexamples", "inclusions", "conditions", "all"}));
  verify->add_option("--report", report_path, "write the report here instead of stdout");
  verify->add_option("--format", format, "json|markdown")->check(CLI::IsMember({"json", "markdown"}));
  verify->add_option("--max-order", plan.limits.max_order, "largest group order accepted");
  verify->add_option("--max-simplices", plan.max_simplices, "simplex bound for order complexes");
  verify->add_option("--cache", plan.cache_dir, "lattice cache directory (default $SCLAB_CACHE)");
  verify->add_option("--jobs", plan.jobs, "worker threads for edge checks (0: all cores)");
  verify->add_flag("--strict", plan.strict, "exit 2 when an edge stays inconclusive");

  auto* builtins = app.add_subcommand("builtins", "list builtin group names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ec::kUsage;
  }

  if (*builtins) {
    for (const auto& n : sclab::builtin_names()) std::cout << n << "\n";
    return 0;
  }

  plan.suite = *sclab::parse_suite(suite);
  const auto fmt = format == "markdown" ? sclab::ReportFormat::Markdown : sclab::ReportFormat::Json;
  try {
    return run_verify(plan, report_path, fmt);
  } catch (const sclab::ParseError& e) {
    std::cerr << "sclab: parse error: " << e.what() << "\n";
    return ec::kParse;
  } catch (const sclab::UnknownBuiltin& e) {
    std::cerr << "sclab: " << e.what() << "\n";
    return ec::kUnknownBuiltin;
  } catch (const sclab::CapExceeded& e) {
    std::cerr << "sclab: " << e.what() << "\n";
    return ec::kCap;
  } catch (const sclab::SizeCap& e) {
    std::cerr << "sclab: " << e.what() << "\n";
    return ec::kCap;
  } catch (const sclab::PrimeDoesNotDivide& e) {
    std::cerr << "sclab: " << e.what() << "\n";
    return ec::kPrime;
  } catch (const sclab::IOError& e) {
    std::cerr << "sclab: " << e.what() << "\n";
    return ec::kIO;
  } catch (const std::exception& e) {
    std::cerr << "sclab: internal error: " << e.what() << "\n";
    return ec::kInternal;
  }
}
