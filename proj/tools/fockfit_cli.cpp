// Command-line front end: dataset ingestion, batch analysis and report
// emission. Exit codes: 0 success, 1 I/O or parse failure, 2 invalid
// configuration. Analysis-level infeasibilities (unfittable records,
// non-classical data) are results, not errors, and never change the exit
// code.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fockfit/analysis.hpp"
#include "fockfit/oracles.hpp"

#ifndef FOCKFIT_BUNDLED_DATA_DIR
#define FOCKFIT_BUNDLED_DATA_DIR ""
#endif

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string file;
  std::string format = "json";
  std::string strategy = "max-sector1";
  double tolerance = fockfit::tol::kClassicalityDefault;
  std::uint64_t seed = fockfit::AnalysisConfig{}.seed;
  bool verify = false;
};

// A bare filename falls back to FOCKFIT_DATA_DIR, then the bundled data
// directory, so `fockfit analyze paper_items.csv` works out of the box.
std::string resolve_input(const std::string& path) {
  if (fs::exists(path)) return path;
  if (const char* env = std::getenv("FOCKFIT_DATA_DIR")) {
    const fs::path candidate = fs::path(env) / path;
    if (fs::exists(candidate)) return candidate.string();
  }
  const std::string bundled = FOCKFIT_BUNDLED_DATA_DIR;
  if (!bundled.empty()) {
    const fs::path candidate = fs::path(bundled) / path;
    if (fs::exists(candidate)) return candidate.string();
  }
  return path;  // let the loader report the failure
}

fockfit::DataFormat detect_input_format(const std::string& path) {
  const std::string ext = fs::path(path).extension().string();
  return ext == ".json" ? fockfit::DataFormat::Json : fockfit::DataFormat::Csv;
}

int run(const Options& opts, fockfit::AnalysisMode mode) {
  fockfit::AnalysisConfig config;
  config.mode = mode;
  config.classicality_tolerance = opts.tolerance;
  config.seed = opts.seed;
  if (opts.tolerance <= 0.0) {
    std::cerr << "error: --tolerance must be positive\n";
    return 2;
  }
  if (const auto strategy = fockfit::parse_strategy(opts.strategy)) {
    config.strategy = *strategy;
  } else {
    std::cerr << "error: unknown strategy '" << opts.strategy
              << "' (expected fix-m2=<v>, max-sector1 or min-interference)\n";
    return 2;
  }
  fockfit::ReportFormat format;
  if (opts.format == "json") {
    format = fockfit::ReportFormat::Json;
  } else if (opts.format == "csv") {
    format = fockfit::ReportFormat::Csv;
  } else if (opts.format == "plotdata") {
    format = fockfit::ReportFormat::Plotdata;
  } else {
    std::cerr << "error: unknown format '" << opts.format << "'\n";
    return 2;
  }

  fockfit::Dataset dataset;
  const std::string path = resolve_input(opts.file);
  try {
    dataset = fockfit::load_dataset(path, detect_input_format(path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  for (const fockfit::RowIssue& issue : dataset.issues) {
    std::cerr << "warning: " << path << ":" << issue.line << ": "
              << issue.message << " (row skipped)\n";
  }
  if (dataset.records.empty()) {
    std::cerr << "warning: dataset '" << path << "' contains no records\n";
  }

  fockfit::AnalysisReport report = fockfit::run_analysis(dataset, config);
  if (opts.verify) {
    const std::size_t failures = fockfit::oracle::annotate_report(report);
    if (failures == 0) {
      std::cerr << "verify: all oracle cross-checks passed\n";
    } else {
      std::cerr << "verify: " << failures << " oracle cross-check(s) failed\n";
    }
  }
  std::cout << fockfit::emit_report(report, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-sector Fock-space analysis of concept-combination "
               "membership data"};
  app.require_subcommand(1);

  Options opts;
  fockfit::AnalysisMode mode = fockfit::AnalysisMode::Analyze;

  const auto add_common = [&](CLI::App* cmd, bool with_strategy) {
    cmd->add_option("file", opts.file, "Dataset file (.csv or .json)")
        ->required();
    cmd->add_option("--format", opts.format,
                    "Report format: json, csv or plotdata");
    cmd->add_option("--tolerance", opts.tolerance,
                    "Classicality tolerance (default 1e-6)");
    cmd->add_option("--seed", opts.seed, "Seed for the fit start schedule");
    if (with_strategy) {
      cmd->add_option(
          "--strategy", opts.strategy,
          "Pair-fit strategy: fix-m2=<v>, max-sector1 or min-interference");
    }
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Full analysis: deviations, fits, classicality, constructions");
  add_common(analyze, true);
  analyze->add_flag("--verify", opts.verify,
                    "Run oracle cross-checks (bisection, grid scan, Born readback)");
  analyze->callback([&] { mode = fockfit::AnalysisMode::Analyze; });

  CLI::App* fit = app.add_subcommand("fit", "Fit Fock parameters only");
  add_common(fit, true);
  fit->callback([&] { mode = fockfit::AnalysisMode::FitOnly; });

  CLI::App* check = app.add_subcommand("check", "Classicality conditions only");
  add_common(check, false);
  check->callback([&] { mode = fockfit::AnalysisMode::CheckOnly; });

  CLI::App* construct = app.add_subcommand(
      "construct", "Entangled realizations for classical records");
  add_common(construct, false);
  construct->callback([&] { mode = fockfit::AnalysisMode::ConstructOnly; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(opts, mode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
