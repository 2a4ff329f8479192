#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fockfit/dataset.hpp"

// Batch analysis pipeline over a dataset: deviation classification,
// pair-model fits, classicality checks, Kolmogorovian verdicts, negation
// fits and entangled constructions, plus report emission. run_analysis is a
// pure function of (dataset, config): repeated runs emit byte-identical
// reports. Per-record failures are isolated into that record's error list
// and never abort the batch.

namespace fockfit {

enum class ReportFormat { Json, Csv, Plotdata };
enum class AnalysisMode { Analyze, FitOnly, CheckOnly, ConstructOnly };

struct AnalysisConfig {
  AnalysisMode mode = AnalysisMode::Analyze;
  FitStrategy strategy = FitStrategy::max_sector1();
  double classicality_tolerance = tol::kClassicalityDefault;
  std::uint64_t seed = 20140213;  // negation-fit start schedule
};

// Oracle cross-check outcomes; filled by the verification pass in the
// oracle library, never by run_analysis itself.
struct PairVerify {
  bool theta_agrees = false;
  double theta_diff_deg = 0.0;
};
struct NegationVerify {
  bool grid_ok = false;
  std::optional<double> readback_max_error;  // when a construction exists
};

struct PairAnalysis {
  PairWeights weights;
  DeviationClass deviation;
  std::optional<PairFitResult> fit;
  std::optional<PairVerify> verify;
};

struct EntangledSummary {
  std::array<double, 4> amplitudes{};  // |C> on the product basis
  double readback_max_error = 0.0;     // vs the source record
  std::array<double, 4> marginal_residuals{};
};

struct NegationAnalysis {
  ClassicalityReport classicality;
  std::optional<bool> kolmogorov;
  std::optional<NegationFit> fit;
  bool construction_attempted = false;
  std::optional<EntangledSummary> entangled;
  std::optional<NegationVerify> verify;
};

struct RecordAnalysis {
  MembershipRecord record;
  std::optional<PairAnalysis> conjunction;
  std::optional<PairAnalysis> disjunction;
  std::optional<NegationAnalysis> negation;
  std::vector<std::string> errors;
};

struct AnalysisSummary {
  std::size_t record_count = 0;
  std::size_t negation_count = 0;
  std::size_t classical_count = 0;
  std::size_t nonclassical_count = 0;
  std::size_t infeasible_pair_fits = 0;
  // Sector-1 participation across all fitted parameters, in record order
  // (pair fits first, then the four quadrants of each negation fit).
  std::vector<double> n_sq_values;
  double n_sq_mean = 0.0;
  double sector1_dominant_fraction = 0.0;  // share with n^2 >= 0.5
};

struct AnalysisReport {
  std::vector<RecordAnalysis> records;
  AnalysisSummary summary;
  AnalysisConfig config;
  std::string provenance;
  std::vector<RowIssue> issues;
};

AnalysisReport run_analysis(const Dataset& dataset, const AnalysisConfig& config = {});

// JSON carries the full structure under schema_version 1; CSV flattens one
// row per analysed facet; plotdata is TSV (item, n_sq, angle_deg, margin)
// for external plotting.
std::string emit_report(const AnalysisReport& report, ReportFormat format);

const char* to_string(ReportFormat format);
const char* to_string(AnalysisMode mode);
std::string to_string(const FitStrategy& strategy);

// Accepts "max-sector1", "min-interference", "fix-m2=<value>".
std::optional<FitStrategy> parse_strategy(const std::string& text);

}  // namespace fockfit
