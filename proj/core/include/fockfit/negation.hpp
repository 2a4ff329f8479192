#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "fockfit/combination.hpp"
#include "fockfit/hilbert.hpp"

// Conjunction-with-negation model: the five classicality conditions on the
// eight measured weights, the Kolmogorovian representability oracle, the
// sector-1 Born rule over an orthogonal four-frame, the entangled sector-2
// construction that realizes exactly the classical records, and the general
// per-quadrant Fock fit.

namespace fockfit {

// Measured membership weights of one item with respect to concepts A, B,
// their negations, and the four conjunctions.
struct NegationRecord {
  double mu_a = 0.0;
  double mu_b = 0.0;
  double mu_a_neg = 0.0;
  double mu_b_neg = 0.0;
  double mu_ab = 0.0;         // mu(A and B)
  double mu_ab_neg = 0.0;     // mu(A and B')
  double mu_aneg_b = 0.0;     // mu(A' and B)
  double mu_aneg_bneg = 0.0;  // mu(A' and B')
  std::string item;
  std::string concept_a;
  std::string concept_b;
};

void validate(const NegationRecord& record);

// Residuals of the five classicality conditions, in order:
//   mu(A)  - mu(AB)  - mu(AB')
//   mu(B)  - mu(AB)  - mu(A'B)
//   mu(A') - mu(A'B') - mu(A'B)
//   mu(B') - mu(A'B') - mu(AB')
//   mu(AB) + mu(AB') + mu(A'B) + mu(A'B') - 1
// The record is classical at `tolerance` iff every |residual| stays below it.
struct ClassicalityReport {
  std::array<double, 5> residuals{};
  bool classical = false;
  double tolerance = tol::kClassicalityDefault;
  double max_abs_residual() const;
};

ClassicalityReport classicality_conditions(
    const NegationRecord& record, double tolerance = tol::kClassicalityDefault);

// Independent representability check: the four conjunction weights are the
// only candidate joint distribution over the atoms A&B, A&B', A'&B, A'&B',
// so existence reduces to nonnegativity, normalization and marginal
// consistency of that candidate.
bool kolmogorov_oracle(const NegationRecord& record,
                       double tolerance = tol::kAlgebraicFit);

// Born weights of four mutually orthogonal unit vectors |A>,|B>,|A'>,|B'>
// under one projector, plus the weights of the emergent superpositions
// (|X>+|Y>)/sqrt(2) for the four conjunction readings.
struct Sector1NegationWeights {
  std::array<double, 4> marginals{};       // mu(A), mu(B), mu(A'), mu(B')
  std::array<double, 4> superpositions{};  // AB, AB', A'B, A'B'
};

// Throws when any pairwise |<x|y>| exceeds 1e-10 or a vector is not unit.
Sector1NegationWeights sector1_negation_weights(
    const std::array<ComplexVector, 4>& vectors, const LinearOperator& proj);

// Sector-2 state |C> on a 2x2 tensor space with M projecting onto the first
// base coordinate. Amplitudes are the square roots of the four conjunction
// weights, placed on the product basis in first-factor-slowest order.
struct EntangledRealization {
  ComplexVector state_c;  // unit, dimension 4
  LinearOperator proj;    // 2-dimensional projector
};

struct EntangledReadback {
  double mu_a, mu_b, mu_a_neg, mu_b_neg;
  double mu_ab, mu_ab_neg, mu_aneg_b, mu_aneg_bneg;
};

struct EntangledConstruction {
  std::optional<EntangledRealization> realization;  // empty on rejection
  ClassicalityReport report;                        // gate evidence either way
  bool constructed() const { return realization.has_value(); }
};

// Succeeds exactly on records passing the classicality conditions at 1e-9;
// the rejection carries the failing report.
EntangledConstruction construct_entangled(const NegationRecord& record);

// All eight weights recovered from the realization by Born evaluation of
// M(x)1, 1(x)M, their complements, and the four quadrant projectors.
EntangledReadback read_back(const EntangledRealization& realization);

// Residuals, all ~0 by construction:
//   [ mu(A') - (1 - mu(A)),  mu(B') - (1 - mu(B)),
//     mu(A) - (mu(AB) + mu(AB')),  mu(B) - (mu(AB) + mu(A'B)) ]
std::array<double, 4> sector2_marginal_check(const EntangledRealization& realization);

enum class Quadrant : int { AB = 0, ABneg = 1, AnegB = 2, AnegBneg = 3 };

inline constexpr std::array<Quadrant, 4> kQuadrants = {
    Quadrant::AB, Quadrant::ABneg, Quadrant::AnegB, Quadrant::AnegBneg};

const char* to_string(Quadrant q);

// One quadrant of the general four-state model:
//   mu(X and Y) = m^2 alpha + n^2 ((mu_X + mu_Y)/2 + beta cos(phi)).
// alpha is the sector-2 weight treated as a free coefficient in [0,1];
// beta carries its sign (the interference bound only limits |beta|).
// lambda/nu phases are inert metadata, as in FockParams.
struct QuadrantParams {
  double m = 0.0;
  double n = 1.0;
  double phi_deg = 90.0;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda_deg = 0.0;
  double nu_deg = 0.0;
};

struct NegationFockParams {
  std::array<QuadrantParams, 4> quadrants{};
  QuadrantParams& operator[](Quadrant q) { return quadrants[static_cast<int>(q)]; }
  const QuadrantParams& operator[](Quadrant q) const {
    return quadrants[static_cast<int>(q)];
  }
};

// Forward quadrant formula. Validates alpha in [0,1], |beta| <= 1 and
// m^2 + n^2 = 1 within `sector_norm_tolerance`; the loose default admits
// parameter sets published with two rounded decimals.
double negation_conjunction_weight(
    double mu_x, double mu_y, const QuadrantParams& params,
    double sector_norm_tolerance = tol::kPublishedSectorNorm);

// Marginal pair (mu_X, mu_Y) and measured conjunction weight of a quadrant.
std::pair<double, double> quadrant_marginals(const NegationRecord& record,
                                             Quadrant q);
double quadrant_target(const NegationRecord& record, Quadrant q);

struct NegationFitConfig {
  std::uint64_t seed = 20140213;
  int starts_per_quadrant = 16;  // kept >= 8; the objective is nonconvex in phi
  int max_sweeps = 200;
};

struct NegationFit {
  NegationFockParams params;
  std::array<double, 4> residuals{};  // |forward - target| per quadrant
  double total_squared_residual() const;
};

// Per-quadrant constrained least squares via seeded multi-start coordinate
// descent. Constraints: m^2 + n^2 = 1, alpha in [0,1], |beta| bounded by the
// interference magnitude of the quadrant's marginal pair, cos(phi) in
// [-1,1]. Deterministic for a fixed config; always returns the best-found
// parameters (an unreachable target shows up as a nonzero residual).
NegationFit fit_negation_model(const NegationRecord& record,
                               const NegationFitConfig& config = {});

}  // namespace fockfit
