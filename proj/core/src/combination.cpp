#include "fockfit/combination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fockfit {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Coefficients this small are treated as exactly zero when solving the
// linear hull inequalities; well below any meaningful weight difference.
constexpr double kCoefficientFloor = 1e-15;

void require_weight(double w, const char* name) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0,1], got " +
                                std::to_string(w));
  }
}

double sector1_average(double mu_a, double mu_b) { return 0.5 * (mu_a + mu_b); }

double cos_deg(double deg) { return std::cos(deg * kDegToRad); }

// Solution set of coef*x <= bound over x in [0,1]; nullopt when empty.
std::optional<Interval> solve_linear_leq(double coef, double bound) {
  if (std::abs(coef) <= kCoefficientFloor) {
    if (bound >= -tol::kAlgebraicFit) return Interval{0.0, 1.0};
    return std::nullopt;
  }
  const double cut = bound / coef;
  if (coef > 0.0) {
    if (cut < 0.0) return std::nullopt;
    return Interval{0.0, std::min(1.0, cut)};
  }
  if (cut > 1.0) return std::nullopt;
  return Interval{std::max(0.0, cut), 1.0};
}

std::optional<Interval> intersect(const std::optional<Interval>& a,
                                  const std::optional<Interval>& b) {
  if (!a || !b) return std::nullopt;
  const Interval out{std::max(a->lo, b->lo), std::min(a->hi, b->hi)};
  if (out.lo > out.hi) return std::nullopt;
  return out;
}

// m^2 values for which the target is reachable with |cos theta| <= 1.
std::optional<Interval> feasible_m_sq_interval(double mu_a, double mu_b,
                                               double target, Connective conn) {
  const double s2 = sector2_term(mu_a, mu_b, conn);
  const double avg = sector1_average(mu_a, mu_b);
  const double beta = interference_magnitude(mu_a, mu_b);
  // lower hull edge below target:  x*(s2 - avg + beta) <= target - avg + beta
  const auto lo_ok = solve_linear_leq(s2 - avg + beta, target - avg + beta);
  // upper hull edge above target:  x*(avg + beta - s2) <= avg + beta - target
  const auto hi_ok = solve_linear_leq(avg + beta - s2, avg + beta - target);
  return intersect(lo_ok, hi_ok);
}

}  // namespace

FockParams FockParams::from_m_sq(double m_sq, double theta_deg) {
  FockParams p;
  p.m_sq = m_sq;
  p.n_sq = 1.0 - m_sq;
  p.theta_deg = theta_deg;
  return p;
}

void validate(const FockParams& params) {
  require_weight(params.m_sq, "m_sq");
  require_weight(params.n_sq, "n_sq");
  if (std::abs(params.m_sq + params.n_sq - 1.0) > tol::kAlgebraicFit) {
    throw std::invalid_argument("FockParams: m_sq + n_sq must equal 1");
  }
  if (params.theta_deg < -tol::kAlgebraicFit ||
      params.theta_deg > 180.0 + tol::kAlgebraicFit) {
    throw std::invalid_argument("FockParams: theta must lie in [0, 180] degrees");
  }
}

const char* to_string(DeviationKind kind) {
  switch (kind) {
    case DeviationKind::ClassicalRange: return "classical_range";
    case DeviationKind::Overextended: return "overextended";
    case DeviationKind::DoubleOverextended: return "double_overextended";
    case DeviationKind::Underextended: return "underextended";
    case DeviationKind::DoubleUnderextended: return "double_underextended";
  }
  return "unknown";
}

double interference_magnitude(double mu_a, double mu_b) {
  require_weight(mu_a, "mu_a");
  require_weight(mu_b, "mu_b");
  if (mu_a + mu_b > 1.0) {
    return std::sqrt((1.0 - mu_a) * (1.0 - mu_b));
  }
  return std::sqrt(mu_a * mu_b);
}

double sector2_term(double mu_a, double mu_b, Connective connective) {
  return connective == Connective::And ? mu_a * mu_b
                                       : mu_a + mu_b - mu_a * mu_b;
}

double combination_weight(double mu_a, double mu_b, Connective connective,
                          const FockParams& params) {
  require_weight(mu_a, "mu_a");
  require_weight(mu_b, "mu_b");
  validate(params);
  const double beta = interference_magnitude(mu_a, mu_b);
  return params.m_sq * sector2_term(mu_a, mu_b, connective) +
         params.n_sq * (sector1_average(mu_a, mu_b) +
                        beta * cos_deg(params.theta_deg));
}

double conjunction_weight(double mu_a, double mu_b, const FockParams& params) {
  return combination_weight(mu_a, mu_b, Connective::And, params);
}

double disjunction_weight(double mu_a, double mu_b, const FockParams& params) {
  return combination_weight(mu_a, mu_b, Connective::Or, params);
}

std::optional<double> solve_theta(double mu_a, double mu_b, double mu_target,
                                  double m_sq, Connective connective) {
  require_weight(mu_a, "mu_a");
  require_weight(mu_b, "mu_b");
  require_weight(mu_target, "mu_target");
  require_weight(m_sq, "m_sq");
  const double n_sq = 1.0 - m_sq;
  const double beta = interference_magnitude(mu_a, mu_b);
  const double fixed = m_sq * sector2_term(mu_a, mu_b, connective) +
                       n_sq * sector1_average(mu_a, mu_b);
  const double scale = n_sq * beta;
  if (scale <= kCoefficientFloor) {
    // Interference is unobservable; any angle works iff the residual is
    // already negligible.
    if (std::abs(mu_target - fixed) <= tol::kAlgebraicFit) return 90.0;
    return std::nullopt;
  }
  const double required_cos = (mu_target - fixed) / scale;
  if (std::abs(required_cos) > 1.0 + tol::kUnitNorm) return std::nullopt;
  return std::acos(std::clamp(required_cos, -1.0, 1.0)) / kDegToRad;
}

Interval feasibility_interval(double mu_a, double mu_b, Connective connective) {
  return feasibility_hull(mu_a, mu_b, connective).range;
}

FeasibilityHull feasibility_hull(double mu_a, double mu_b, Connective connective) {
  require_weight(mu_a, "mu_a");
  require_weight(mu_b, "mu_b");
  const double s2 = sector2_term(mu_a, mu_b, connective);
  const double avg = sector1_average(mu_a, mu_b);
  const double beta = interference_magnitude(mu_a, mu_b);
  // Both edges are linear in m^2, so each extremum is attained either at
  // the pure sector-2 point (m^2 = 1) or the pure sector-1 point (m^2 = 0)
  // with cos(theta) = -1 or +1.
  FeasibilityHull hull;
  if (s2 <= avg - beta) {
    hull.range.lo = s2;
    hull.at_lo = FockParams::from_m_sq(1.0, 90.0);
  } else {
    hull.range.lo = avg - beta;
    hull.at_lo = FockParams::from_m_sq(0.0, 180.0);
  }
  if (s2 >= avg + beta) {
    hull.range.hi = s2;
    hull.at_hi = FockParams::from_m_sq(1.0, 90.0);
  } else {
    hull.range.hi = avg + beta;
    hull.at_hi = FockParams::from_m_sq(0.0, 0.0);
  }
  return hull;
}

PairFitResult fit_pair(const PairWeights& record, const FitStrategy& strategy) {
  require_weight(record.mu_a, "mu_a");
  require_weight(record.mu_b, "mu_b");
  require_weight(record.mu_combined, "mu_combined");

  const double target = record.mu_combined;
  const Connective conn = record.connective;
  PairFitResult result;
  result.feasibility = feasibility_interval(record.mu_a, record.mu_b, conn);

  const auto finish = [&](const FockParams& params) {
    result.params = params;
    result.residual = std::abs(
        combination_weight(record.mu_a, record.mu_b, conn, params) - target);
  };
  const auto infeasible = [&]() {
    result.params.reset();
    result.residual = std::max(result.feasibility.lo - target,
                               target - result.feasibility.hi);
    result.residual = std::max(result.residual, 0.0);
  };

  switch (strategy.kind) {
    case FitStrategy::Kind::FixM2: {
      require_weight(strategy.m_sq, "strategy m_sq");
      const auto theta = solve_theta(record.mu_a, record.mu_b, target,
                                     strategy.m_sq, conn);
      if (!theta) {
        infeasible();
        return result;
      }
      finish(FockParams::from_m_sq(strategy.m_sq, *theta));
      return result;
    }
    case FitStrategy::Kind::MaxSector1: {
      const auto m_sq_range =
          feasible_m_sq_interval(record.mu_a, record.mu_b, target, conn);
      if (!m_sq_range) {
        infeasible();
        return result;
      }
      const double m_sq = m_sq_range->lo;
      const auto theta = solve_theta(record.mu_a, record.mu_b, target, m_sq, conn);
      if (!theta) {
        infeasible();
        return result;
      }
      finish(FockParams::from_m_sq(m_sq, *theta));
      return result;
    }
    case FitStrategy::Kind::MinInterference: {
      const auto m_sq_range =
          feasible_m_sq_interval(record.mu_a, record.mu_b, target, conn);
      if (!m_sq_range) {
        infeasible();
        return result;
      }
      // required cos(theta) as a function of x = m^2 is
      //   (c + d x) / ((1-x) beta),  c = target - avg,  d = avg - s2,
      // monotone in x, so |cos| is minimized at a zero crossing when one
      // is feasible and at a range endpoint otherwise.
      const double avg = sector1_average(record.mu_a, record.mu_b);
      const double s2 = sector2_term(record.mu_a, record.mu_b, conn);
      const double c = target - avg;
      const double d = avg - s2;
      if (std::abs(d) > kCoefficientFloor) {
        const double crossing = -c / d;
        if (crossing >= m_sq_range->lo && crossing <= m_sq_range->hi &&
            crossing < 1.0) {
          finish(FockParams::from_m_sq(crossing, 90.0));
          if (result.residual <= tol::kAlgebraicFit) return result;
        }
      } else if (std::abs(c) <= tol::kAlgebraicFit) {
        finish(FockParams::from_m_sq(m_sq_range->lo, 90.0));
        return result;
      }
      std::optional<FockParams> best;
      double best_cos = 0.0;
      for (const double m_sq : {m_sq_range->lo, m_sq_range->hi}) {
        const auto theta =
            solve_theta(record.mu_a, record.mu_b, target, m_sq, conn);
        if (!theta) continue;
        const double n_sq_beta =
            (1.0 - m_sq) * interference_magnitude(record.mu_a, record.mu_b);
        const double cos_mag =
            n_sq_beta <= kCoefficientFloor ? 0.0 : std::abs(cos_deg(*theta));
        if (!best || cos_mag < best_cos - tol::kUnitNorm ||
            (std::abs(cos_mag - best_cos) <= tol::kUnitNorm &&
             m_sq < best->m_sq)) {
          best = FockParams::from_m_sq(m_sq, *theta);
          best_cos = cos_mag;
        }
      }
      if (!best) {
        infeasible();
        return result;
      }
      finish(*best);
      return result;
    }
  }
  infeasible();
  return result;
}

DeviationClass classify_deviation(const PairWeights& record) {
  require_weight(record.mu_a, "mu_a");
  require_weight(record.mu_b, "mu_b");
  require_weight(record.mu_combined, "mu_combined");
  const double lo = std::min(record.mu_a, record.mu_b);
  const double hi = std::max(record.mu_a, record.mu_b);
  const double mu = record.mu_combined;
  if (record.connective == Connective::And) {
    if (mu > hi) return {DeviationKind::DoubleOverextended, mu - hi};
    if (mu > lo) return {DeviationKind::Overextended, mu - lo};
    return {DeviationKind::ClassicalRange, 0.0};
  }
  if (mu < lo) return {DeviationKind::DoubleUnderextended, lo - mu};
  if (mu < hi) return {DeviationKind::Underextended, hi - mu};
  const double additive = record.mu_a + record.mu_b;
  if (mu > additive) return {DeviationKind::DoubleOverextended, mu - additive};
  return {DeviationKind::ClassicalRange, 0.0};
}

Sector1Realization realize_sector1(double mu_a, double mu_b,
                                   double target_interference) {
  require_weight(mu_a, "mu_a");
  require_weight(mu_b, "mu_b");
  const double bound = interference_magnitude(mu_a, mu_b);
  if (std::abs(target_interference) > bound + tol::kUnitNorm) {
    throw std::invalid_argument(
        "realize_sector1: |target| exceeds the Cauchy-Schwarz bound " +
        std::to_string(bound));
  }
  const double t = target_interference;
  // |A> = (sqrt(mu_a), 0, sqrt(1-mu_a)) with M the projector onto the first
  // two coordinates. |B>'s first component carries the interference target,
  // its third component cancels <A|B> on the real axis, and the imaginary
  // parts absorb whatever magnitude is left.
  const double a1 = std::sqrt(mu_a);
  const double a3 = std::sqrt(1.0 - mu_a);
  const double b1 = mu_a > 0.0 ? t / a1 : 0.0;
  const double b2 = std::sqrt(std::max(0.0, mu_b - b1 * b1));
  const double b3_re = mu_a < 1.0 ? -t / a3 : 0.0;
  const double b3_im =
      std::sqrt(std::max(0.0, (1.0 - mu_b) - b3_re * b3_re));
  Sector1Realization real{
      ComplexVector({Complex{a1, 0.0}, Complex{0.0, 0.0}, Complex{a3, 0.0}}),
      ComplexVector({Complex{b1, 0.0}, Complex{b2, 0.0}, Complex{b3_re, b3_im}}),
      LinearOperator::basis_projector(3, 2),
      3};
  return real;
}

}  // namespace fockfit
