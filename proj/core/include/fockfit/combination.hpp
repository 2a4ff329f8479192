#pragma once

#include <optional>
#include <string>

#include "fockfit/hilbert.hpp"
#include "fockfit/tolerances.hpp"

// Closed-form two-sector Fock model for the conjunction and disjunction of
// two concepts. Sector 2 carries the probabilistic-logic term (product rule
// for "and", inclusion-exclusion for "or"); sector 1 carries the emergent
// superposition term (mu_a + mu_b)/2 plus an interference contribution
// bounded by the geometry of unit vectors under a shared projector. The
// sector participation weights satisfy m^2 + n^2 = 1.
//
// Everything here is a pure function over immutable values.

namespace fockfit {

enum class Connective { And, Or };

struct PairWeights {
  double mu_a = 0.0;
  double mu_b = 0.0;
  double mu_combined = 0.0;
  Connective connective = Connective::And;
};

// Sector weights and interference angle for one combination. The lambda/nu
// phases appear in the combined state vector but cancel in every weight
// formula; they are carried for completeness and never affect outputs.
struct FockParams {
  double m_sq = 0.0;      // sector-2 (logical) participation
  double n_sq = 1.0;      // sector-1 (emergent) participation
  double theta_deg = 90.0;  // interference angle, canonical branch [0, 180]
  double lambda_phase_deg = 0.0;
  double nu_phase_deg = 0.0;

  static FockParams from_m_sq(double m_sq, double theta_deg);
};

// Throws when m_sq/n_sq leave [0,1], |m_sq + n_sq - 1| > 1e-9, or theta is
// outside the canonical branch.
void validate(const FockParams& params);

enum class DeviationKind {
  ClassicalRange,
  Overextended,
  DoubleOverextended,
  Underextended,
  DoubleUnderextended,
};

struct DeviationClass {
  DeviationKind kind = DeviationKind::ClassicalRange;
  double margin = 0.0;  // distance past the violated bound; 0 in range
};

const char* to_string(DeviationKind kind);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x, double slack = 0.0) const {
    return x >= lo - slack && x <= hi + slack;
  }
};

// Magnitude of the sector-1 interference coefficient:
//   sqrt((1-mu_a)(1-mu_b)) when mu_a + mu_b > 1, else sqrt(mu_a mu_b),
// which equals min(sqrt(mu_a mu_b), sqrt((1-mu_a)(1-mu_b))).
// Throws on weights outside [0,1].
double interference_magnitude(double mu_a, double mu_b);

// mu(A and B) = m^2 mu_a mu_b + n^2 ((mu_a+mu_b)/2 + beta cos(theta))
double conjunction_weight(double mu_a, double mu_b, const FockParams& params);

// mu(A or B) = m^2 (mu_a+mu_b-mu_a mu_b) + n^2 ((mu_a+mu_b)/2 + beta cos(theta))
double disjunction_weight(double mu_a, double mu_b, const FockParams& params);

double combination_weight(double mu_a, double mu_b, Connective connective,
                          const FockParams& params);

// Sector-2 term of the chosen connective (product / inclusion-exclusion).
double sector2_term(double mu_a, double mu_b, Connective connective);

// Inverts the weight formula for theta at fixed m^2:
//   cos(theta) = (mu_target - m^2 s2 - n^2 avg) / (n^2 beta).
// Returns nullopt when the required cosine falls outside [-1, 1]. In the
// degenerate case n^2 beta = 0 the angle is unobservable: returns 90 by
// convention when the residual is already <= 1e-9, nullopt otherwise.
std::optional<double> solve_theta(double mu_a, double mu_b, double mu_target,
                                  double m_sq, Connective connective);

// Closed set of target weights reachable by some (m^2, theta). Both hull
// edges are linear in m^2, so the extrema sit at m^2 in {0, 1}.
Interval feasibility_interval(double mu_a, double mu_b, Connective connective);

// Feasibility hull together with parameter witnesses attaining each edge.
struct FeasibilityHull {
  Interval range;
  FockParams at_lo;
  FockParams at_hi;
};
FeasibilityHull feasibility_hull(double mu_a, double mu_b, Connective connective);

// The published fits report (m^2, n^2, theta) triples without a selection
// rule, so the rule is an explicit caller choice.
struct FitStrategy {
  enum class Kind {
    FixM2,           // solve theta at a caller-fixed m^2
    MaxSector1,      // largest n^2 (smallest m^2) admitting a solution
    MinInterference  // |cos theta| minimal over feasible m^2
  };
  Kind kind = Kind::MaxSector1;
  double m_sq = 0.0;  // only for FixM2

  static FitStrategy fix_m2(double value) { return {Kind::FixM2, value}; }
  static FitStrategy max_sector1() { return {Kind::MaxSector1, 0.0}; }
  static FitStrategy min_interference() { return {Kind::MinInterference, 0.0}; }
};

struct PairFitResult {
  std::optional<FockParams> params;  // nullopt -> no exact solution exists
  double residual = 0.0;             // |forward(params) - target| when fitted
  Interval feasibility;              // always populated
  bool feasible() const { return params.has_value(); }
};

// Deterministic given the strategy; a successful fit reproduces
// mu_combined to 1e-9 under the forward formula.
PairFitResult fit_pair(const PairWeights& record, const FitStrategy& strategy);

// Classification against the classical bounds:
//   and: over if mu > min(mu_a, mu_b), double-over if mu > max(mu_a, mu_b)
//   or:  under if mu < max(mu_a, mu_b), double-under if mu < min(mu_a, mu_b),
//        double-over if mu > mu_a + mu_b (the additive union bound)
// The strongest applicable label wins; margin is the distance past the
// violated bound. Symmetric under swapping mu_a and mu_b.
DeviationClass classify_deviation(const PairWeights& record);

// Explicit sector-1 vectors: unit |A>, |B> and projector M with
//   <A|M|A> = mu_a, <B|M|B> = mu_b, Re<A|M|B> = target, Re<A|B> = 0.
// The last identity makes (|A>+|B>)/sqrt(2) a unit vector, which is what
// bounds |target| by interference_magnitude(mu_a, mu_b).
struct Sector1Realization {
  ComplexVector vec_a;
  ComplexVector vec_b;
  LinearOperator proj;
  std::size_t dimension;
};

// Throws std::invalid_argument (message carries the bound) when
// |target_interference| exceeds interference_magnitude(mu_a, mu_b) + 1e-12.
Sector1Realization realize_sector1(double mu_a, double mu_b,
                                   double target_interference);

}  // namespace fockfit
