// translie <command> --config <file> [--seed N] [--out report.json] [--quiet] [--timing]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "translie/cli.hpp"

namespace tc = translie::cli;

namespace {

void print_summary(std::ostream& os, const tc::RunReport& report, const std::string& command) {
  if (report.error) {
    os << command << ": error: " << *report.error << "\n";
    return;
  }
  for (const auto& e : report.entries)
    os << (e.passed ? "PASS " : "FAIL ") << e.law << " (" << e.anchor << ") cases=" << e.cases_run
       << " violations=" << e.violations.size() << "\n";
  os << command << ": " << (report.passed() ? "pass" : "fail") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks identities and classifies operators on 3-Lie and transposed Poisson 3-Lie algebras"};
  std::string command;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  bool quiet = false;
  bool timing = false;
  app.add_option("command", command, "check-laws | solve-derivations | tp-triviality | build-tp | verify-tp | generators")
      ->required();
  app.add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "overrides the config seed");
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  app.add_flag("--quiet", quiet, "suppress the human-readable summary");
  app.add_flag("--timing", timing, "record wall time in the report (breaks byte-identical reports)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::ifstream in(config_path);
  std::stringstream buf;
  buf << in.rdbuf();

  tc::RunReport report;
  try {
    std::string text = buf.str();
    // A config may leave the command to the command line.
    if (auto doc = tc::Json::parse(text, nullptr, false); doc.is_object() && !doc.contains("command")) {
      doc["command"] = command;
      text = doc.dump();
    }
    auto cfg = tc::parse_config(text);
    if (tc::to_string(cfg.command) != command)
      throw translie::SchemaError("command: config names '" + tc::to_string(cfg.command) + "' but '" + command +
                                  "' was requested");
    if (seed) cfg.seed = *seed;
    report = tc::run(cfg, timing);
  } catch (const translie::Error& e) {
    report.config = nullptr;
    report.error = e.what();
  }

  const std::string json = tc::to_json(report).dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream(out_path) << json;
    if (!quiet) print_summary(std::cout, report, command);
  } else {
    std::cout << json;
    if (!quiet) print_summary(std::cerr, report, command);
  }
  return report.exit_code();
}
