#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fockfit/analysis.hpp"
#include "fockfit/negation.hpp"

// Brute-force verifiers, deliberately written as separate code paths from
// the closed-form routines they check. Built as their own library target so
// the code under test never links against them; the CLI reaches them only
// through its --verify mode.

namespace fockfit::oracle {

struct OracleConfig {
  int resolution = 200;  // grid points per axis; >= 100 enforced for angle grids
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

void validate(const OracleConfig& config);

// Root of forward(theta) = target for theta in [0, 180] degrees by plain
// bisection; the forward map is linear in cos(theta), hence monotone.
// Converges the bracket below 1e-10 degrees and requires the final value to
// match the target within 1e-8; returns nullopt when the target lies
// outside [forward(180), forward(0)].
std::optional<double> bisect_theta(const std::function<double(double)>& forward,
                                   double target);

// Direct dense evaluation of <state|op|state> (real part), independent of
// born_weight's validation and clamping.
double born_weight_reference(const ComplexVector& state, const LinearOperator& op);

// Records derived from random four-atom joint distributions; classical by
// construction (conditions hold to floating-point accuracy).
std::vector<NegationRecord> sample_classical_records(std::size_t count,
                                                     std::uint64_t seed);

// True iff no grid point over (m^2, alpha, beta, phi) beats the fitted
// parameters' total squared residual by more than config.tolerance. The
// beta*cos(phi) products are collapsed into one sorted axis so the scan is
// exact over the full four-axis grid without enumerating it.
bool grid_validate_fit(const NegationRecord& record,
                       const NegationFockParams& fitted,
                       const OracleConfig& config = {});

// In-place cross-checks over a finished analysis report: every feasible
// pair fit is re-solved by bisection (agreement within 1e-6 degrees), every
// negation fit is grid-validated, and every entangled construction is read
// back through the reference Born evaluation. Returns the number of checks
// that failed; details land in the per-record verify sections.
std::size_t annotate_report(AnalysisReport& report,
                            const OracleConfig& config = {});

}  // namespace fockfit::oracle
