#include "fockfit/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fockfit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void analyze_pair(PairAnalysis& out, const PairWeights& weights,
                  const AnalysisConfig& config) {
  out.weights = weights;
  out.deviation = classify_deviation(weights);
  if (config.mode != AnalysisMode::CheckOnly &&
      config.mode != AnalysisMode::ConstructOnly) {
    out.fit = fit_pair(weights, config.strategy);
  }
}

void analyze_negation(NegationAnalysis& out, const NegationRecord& record,
                      const AnalysisConfig& config) {
  out.classicality = classicality_conditions(record, config.classicality_tolerance);
  if (config.mode == AnalysisMode::Analyze ||
      config.mode == AnalysisMode::CheckOnly) {
    out.kolmogorov = kolmogorov_oracle(record);
  }
  if (config.mode == AnalysisMode::Analyze ||
      config.mode == AnalysisMode::FitOnly) {
    NegationFitConfig fit_config;
    fit_config.seed = config.seed;
    out.fit = fit_negation_model(record, fit_config);
  }
  if (config.mode == AnalysisMode::Analyze ||
      config.mode == AnalysisMode::ConstructOnly) {
    out.construction_attempted = true;
    const EntangledConstruction built = construct_entangled(record);
    if (built.constructed()) {
      EntangledSummary summary;
      for (std::size_t i = 0; i < 4; ++i) {
        summary.amplitudes[i] = std::real(built.realization->state_c[i]);
      }
      const EntangledReadback rb = read_back(*built.realization);
      const double diffs[] = {
          rb.mu_a - record.mu_a,           rb.mu_b - record.mu_b,
          rb.mu_a_neg - record.mu_a_neg,   rb.mu_b_neg - record.mu_b_neg,
          rb.mu_ab - record.mu_ab,         rb.mu_ab_neg - record.mu_ab_neg,
          rb.mu_aneg_b - record.mu_aneg_b, rb.mu_aneg_bneg - record.mu_aneg_bneg};
      for (double d : diffs) {
        summary.readback_max_error = std::max(summary.readback_max_error, std::abs(d));
      }
      summary.marginal_residuals = sector2_marginal_check(*built.realization);
      out.entangled = summary;
    }
  }
}

void summarize(AnalysisReport& report) {
  AnalysisSummary& s = report.summary;
  s.record_count = report.records.size();
  for (const RecordAnalysis& rec : report.records) {
    for (const auto* pair : {&rec.conjunction, &rec.disjunction}) {
      if (!pair->has_value() || !(*pair)->fit) continue;
      const PairFitResult& fit = *(*pair)->fit;
      if (fit.feasible()) {
        s.n_sq_values.push_back(fit.params->n_sq);
      } else {
        ++s.infeasible_pair_fits;
      }
    }
    if (rec.negation) {
      ++s.negation_count;
      if (rec.negation->classicality.classical) {
        ++s.classical_count;
      } else {
        ++s.nonclassical_count;
      }
      if (rec.negation->fit) {
        for (const Quadrant q : kQuadrants) {
          const QuadrantParams& p = rec.negation->fit->params[q];
          s.n_sq_values.push_back(p.n * p.n);
        }
      }
    }
  }
  if (!s.n_sq_values.empty()) {
    double total = 0.0;
    std::size_t dominant = 0;
    for (double v : s.n_sq_values) {
      total += v;
      if (v >= 0.5) ++dominant;
    }
    s.n_sq_mean = total / static_cast<double>(s.n_sq_values.size());
    s.sector1_dominant_fraction =
        static_cast<double>(dominant) / static_cast<double>(s.n_sq_values.size());
  }
}

}  // namespace

AnalysisReport run_analysis(const Dataset& dataset, const AnalysisConfig& config) {
  AnalysisReport report;
  report.config = config;
  report.provenance = dataset.provenance;
  report.issues = dataset.issues;
  report.records.reserve(dataset.records.size());
  for (const MembershipRecord& record : dataset.records) {
    RecordAnalysis entry;
    entry.record = record;
    try {
      const bool pairs_wanted = config.mode != AnalysisMode::CheckOnly &&
                                config.mode != AnalysisMode::ConstructOnly;
      if (pairs_wanted && record.has_and_pair()) {
        entry.conjunction.emplace();
        analyze_pair(*entry.conjunction, record.and_pair(), config);
      }
      if (pairs_wanted && record.has_or_pair()) {
        entry.disjunction.emplace();
        analyze_pair(*entry.disjunction, record.or_pair(), config);
      }
      if (record.has_negation()) {
        entry.negation.emplace();
        analyze_negation(*entry.negation, record.negation(), config);
      }
    } catch (const std::exception& e) {
      entry.errors.push_back(e.what());
    }
    report.records.push_back(std::move(entry));
  }
  summarize(report);
  return report;
}

namespace {

ordered_json pair_to_json(const PairAnalysis& pair) {
  ordered_json j;
  j["mu_a"] = pair.weights.mu_a;
  j["mu_b"] = pair.weights.mu_b;
  j["mu_combined"] = pair.weights.mu_combined;
  j["deviation"] = to_string(pair.deviation.kind);
  j["margin"] = pair.deviation.margin;
  if (pair.fit) {
    ordered_json f;
    f["feasible"] = pair.fit->feasible();
    f["feasibility_lo"] = pair.fit->feasibility.lo;
    f["feasibility_hi"] = pair.fit->feasibility.hi;
    if (pair.fit->feasible()) {
      f["m_sq"] = pair.fit->params->m_sq;
      f["n_sq"] = pair.fit->params->n_sq;
      f["theta_deg"] = pair.fit->params->theta_deg;
      f["residual"] = pair.fit->residual;
    } else {
      f["distance_to_hull"] = pair.fit->residual;
    }
    j["fit"] = std::move(f);
  }
  if (pair.verify) {
    ordered_json v;
    v["theta_agrees"] = pair.verify->theta_agrees;
    v["theta_diff_deg"] = pair.verify->theta_diff_deg;
    j["verify"] = std::move(v);
  }
  return j;
}

ordered_json negation_to_json(const NegationAnalysis& neg) {
  ordered_json j;
  ordered_json cls;
  cls["residuals"] = neg.classicality.residuals;
  cls["classical"] = neg.classicality.classical;
  cls["tolerance"] = neg.classicality.tolerance;
  j["classicality"] = std::move(cls);
  if (neg.kolmogorov) j["kolmogorov"] = *neg.kolmogorov;
  if (neg.fit) {
    ordered_json fit;
    for (const Quadrant q : kQuadrants) {
      const QuadrantParams& p = neg.fit->params[q];
      ordered_json pj;
      pj["m"] = p.m;
      pj["n"] = p.n;
      pj["phi_deg"] = p.phi_deg;
      pj["alpha"] = p.alpha;
      pj["beta"] = p.beta;
      pj["residual"] = neg.fit->residuals[static_cast<int>(q)];
      fit[to_string(q)] = std::move(pj);
    }
    j["fit"] = std::move(fit);
  }
  if (neg.construction_attempted) {
    ordered_json ent;
    ent["constructed"] = neg.entangled.has_value();
    if (neg.entangled) {
      ent["amplitudes"] = neg.entangled->amplitudes;
      ent["readback_max_error"] = neg.entangled->readback_max_error;
      ent["marginal_residuals"] = neg.entangled->marginal_residuals;
    }
    j["entangled"] = std::move(ent);
  }
  if (neg.verify) {
    ordered_json v;
    v["grid_ok"] = neg.verify->grid_ok;
    if (neg.verify->readback_max_error) {
      v["readback_max_error"] = *neg.verify->readback_max_error;
    }
    j["verify"] = std::move(v);
  }
  return j;
}

std::string emit_json(const AnalysisReport& report) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["provenance"] = report.provenance;
  ordered_json cfg;
  cfg["mode"] = to_string(report.config.mode);
  cfg["strategy"] = to_string(report.config.strategy);
  cfg["classicality_tolerance"] = report.config.classicality_tolerance;
  cfg["seed"] = report.config.seed;
  doc["config"] = std::move(cfg);
  if (!report.issues.empty()) {
    ordered_json issues = ordered_json::array();
    for (const RowIssue& issue : report.issues) {
      issues.push_back({{"line", issue.line}, {"message", issue.message}});
    }
    doc["issues"] = std::move(issues);
  }
  doc["records"] = ordered_json::array();
  for (const RecordAnalysis& rec : report.records) {
    ordered_json rj;
    rj["item"] = rec.record.item;
    rj["concept_a"] = rec.record.concept_a;
    rj["concept_b"] = rec.record.concept_b;
    if (rec.conjunction) rj["and"] = pair_to_json(*rec.conjunction);
    if (rec.disjunction) rj["or"] = pair_to_json(*rec.disjunction);
    if (rec.negation) rj["negation"] = negation_to_json(*rec.negation);
    if (!rec.errors.empty()) rj["errors"] = rec.errors;
    doc["records"].push_back(std::move(rj));
  }
  ordered_json sum;
  sum["records"] = report.summary.record_count;
  sum["negation_records"] = report.summary.negation_count;
  sum["classical"] = report.summary.classical_count;
  sum["nonclassical"] = report.summary.nonclassical_count;
  sum["infeasible_pair_fits"] = report.summary.infeasible_pair_fits;
  ordered_json nsq;
  nsq["count"] = report.summary.n_sq_values.size();
  nsq["values"] = report.summary.n_sq_values;
  nsq["mean"] = report.summary.n_sq_mean;
  nsq["sector1_dominant_fraction"] = report.summary.sector1_dominant_fraction;
  sum["n_sq"] = std::move(nsq);
  doc["summary"] = std::move(sum);
  return doc.dump(2) + "\n";
}

void csv_pair_row(std::ostringstream& out, const std::string& item,
                  const char* facet, const PairAnalysis& pair) {
  out << item << ',' << facet << ',' << num(pair.weights.mu_a) << ','
      << num(pair.weights.mu_b) << ',' << num(pair.weights.mu_combined) << ','
      << to_string(pair.deviation.kind) << ',' << num(pair.deviation.margin)
      << ',';
  if (pair.fit) {
    if (pair.fit->feasible()) {
      out << "yes," << num(pair.fit->params->m_sq) << ','
          << num(pair.fit->params->n_sq) << ','
          << num(pair.fit->params->theta_deg) << ','
          << num(pair.fit->residual);
    } else {
      out << "no,,,," << num(pair.fit->residual);
    }
    out << ',' << num(pair.fit->feasibility.lo) << ','
        << num(pair.fit->feasibility.hi);
  } else {
    out << ",,,,,,";
  }
  out << "\n";
}

std::string emit_csv(const AnalysisReport& report) {
  std::ostringstream out;
  out << "item,facet,mu_a,mu_b,mu_target,deviation,margin,feasible,"
         "m_sq,n_sq,angle_deg,residual,feasibility_lo,feasibility_hi\n";
  for (const RecordAnalysis& rec : report.records) {
    if (rec.conjunction) csv_pair_row(out, rec.record.item, "and", *rec.conjunction);
    if (rec.disjunction) csv_pair_row(out, rec.record.item, "or", *rec.disjunction);
    if (rec.negation) {
      const NegationAnalysis& neg = *rec.negation;
      out << rec.record.item << ",negation,,,,"
          << (neg.classicality.classical ? "classical" : "nonclassical") << ','
          << num(neg.classicality.max_abs_residual()) << ",,,,,,,\n";
      if (neg.fit) {
        for (const Quadrant q : kQuadrants) {
          const QuadrantParams& p = neg.fit->params[q];
          const auto [mu_x, mu_y] =
              quadrant_marginals(rec.record.negation(), q);
          out << rec.record.item << ",neg_" << to_string(q) << ','
              << num(mu_x) << ',' << num(mu_y) << ','
              << num(quadrant_target(rec.record.negation(), q)) << ",,,yes,"
              << num(p.m * p.m) << ',' << num(p.n * p.n) << ','
              << num(p.phi_deg) << ','
              << num(neg.fit->residuals[static_cast<int>(q)]) << ",,\n";
        }
      }
    }
  }
  return out.str();
}

std::string emit_plotdata(const AnalysisReport& report) {
  std::ostringstream out;
  out << "item\tn_sq\tangle_deg\tmargin\n";
  const auto pair_row = [&](const std::string& item, const PairAnalysis& pair) {
    out << item << '\t';
    if (pair.fit && pair.fit->feasible()) {
      out << num(pair.fit->params->n_sq) << '\t'
          << num(pair.fit->params->theta_deg);
    } else {
      out << "\t";
    }
    out << '\t' << num(pair.deviation.margin) << "\n";
  };
  for (const RecordAnalysis& rec : report.records) {
    if (rec.conjunction) pair_row(rec.record.item, *rec.conjunction);
    if (rec.disjunction) pair_row(rec.record.item, *rec.disjunction);
    if (rec.negation && rec.negation->fit) {
      const QuadrantParams& p = rec.negation->fit->params[Quadrant::AB];
      out << rec.record.item << '\t' << num(p.n * p.n) << '\t'
          << num(p.phi_deg) << '\t'
          << num(rec.negation->classicality.max_abs_residual()) << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return emit_json(report);
    case ReportFormat::Csv: return emit_csv(report);
    case ReportFormat::Plotdata: return emit_plotdata(report);
  }
  throw std::invalid_argument("emit_report: unknown format");
}

const char* to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return "json";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Plotdata: return "plotdata";
  }
  return "unknown";
}

const char* to_string(AnalysisMode mode) {
  switch (mode) {
    case AnalysisMode::Analyze: return "analyze";
    case AnalysisMode::FitOnly: return "fit";
    case AnalysisMode::CheckOnly: return "check";
    case AnalysisMode::ConstructOnly: return "construct";
  }
  return "unknown";
}

std::string to_string(const FitStrategy& strategy) {
  switch (strategy.kind) {
    case FitStrategy::Kind::FixM2:
      return "fix-m2=" + num(strategy.m_sq);
    case FitStrategy::Kind::MaxSector1:
      return "max-sector1";
    case FitStrategy::Kind::MinInterference:
      return "min-interference";
  }
  return "unknown";
}

std::optional<FitStrategy> parse_strategy(const std::string& text) {
  if (text == "max-sector1") return FitStrategy::max_sector1();
  if (text == "min-interference") return FitStrategy::min_interference();
  const std::string prefix = "fix-m2=";
  if (text.rfind(prefix, 0) == 0) {
    const std::string value = text.substr(prefix.size());
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() + value.size() && v >= 0.0 && v <= 1.0) {
      return FitStrategy::fix_m2(v);
    }
  }
  return std::nullopt;
}

}  // namespace fockfit
