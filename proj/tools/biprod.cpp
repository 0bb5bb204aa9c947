#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "biprod/show.hpp"
#include "biprod/suite.hpp"

namespace {

constexpr int kUsageError = 2;

int report_error(const biprod::Error& e) {
  std::cerr << "error: " << e.describe() << "\n";
  const bool usage = e.kind == biprod::ErrorKind::UnknownInstance ||
                     e.kind == biprod::ErrorKind::InvalidBounds ||
                     e.kind == biprod::ErrorKind::ParseError;
  return usage ? kUsageError : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds biproduct structure from distributive (co)products and verifies it"};
  app.require_subcommand(1);

  biprod::cli::SuiteConfig config;
  std::string format = "text";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run every verification suite on an instance");
  verify->add_option("--instance", config.instance,
                     "finrel, mat-nat, mat-bool, mat-rat, z-chain or product:<a>+<b>")
      ->required();
  verify->add_option("--max-size", config.max_size,
                     "Size/dimension bound of the object universe (z-chain: [-N, N])")
      ->capture_default_str();
  verify->add_option("--samples", config.samples, "Random samples for morphism-level laws")
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "Seed for the sampled laws")->capture_default_str();
  verify->add_option("--report", format, "Report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", timing, "Append the wall-clock duration to the report");

  std::string show_instance;
  std::int64_t show_bound = 3;
  std::string expression;
  auto* show = app.add_subcommand("show", "Print a constructed map, e.g. \"t(1,1)\"");
  show->add_option("--instance", show_instance, "Instance selector")->required();
  show->add_option("expression", expression,
                   "t(A,B), c(A,B), e(A,B), e'(A,B), star(A1,A2,B1,B2) or zero(A,B)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (*verify) {
    config.format = format == "json" ? biprod::cli::ReportFormat::Json
                                     : biprod::cli::ReportFormat::Text;
    auto report = biprod::cli::run_suite(config);
    if (!report) return report_error(report.error());
    std::cout << (config.format == biprod::cli::ReportFormat::Json
                      ? biprod::cli::render_json(*report, timing)
                      : biprod::cli::render_text(*report, timing));
    return biprod::cli::exit_code(*report);
  }

  auto inst = biprod::make_instance(show_instance, static_cast<std::size_t>(show_bound));
  if (!inst) return report_error(inst.error());
  auto text = biprod::cli::show(**inst, expression);
  if (!text) return report_error(text.error());
  std::cout << *text;
  return 0;
}
