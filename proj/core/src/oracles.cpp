#include "fockfit/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace fockfit::oracle {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

void validate(const OracleConfig& config) {
  if (config.resolution < 100) {
    throw std::invalid_argument("OracleConfig: angle grids need resolution >= 100");
  }
  if (config.tolerance < 0.0) {
    throw std::invalid_argument("OracleConfig: tolerance must be nonnegative");
  }
}

std::optional<double> bisect_theta(const std::function<double(double)>& forward,
                                   double target) {
  double lo = 0.0;
  double hi = 180.0;
  const double f_lo = forward(lo);
  const double f_hi = forward(hi);
  const double slack = 1e-12;
  if (target > std::max(f_lo, f_hi) + slack ||
      target < std::min(f_lo, f_hi) - slack) {
    return std::nullopt;
  }
  const bool decreasing = f_lo >= f_hi;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if ((forward(mid) > target) == decreasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double theta = 0.5 * (lo + hi);
  if (std::abs(forward(theta) - target) > 1e-8) return std::nullopt;
  return theta;
}

double born_weight_reference(const ComplexVector& state,
                             const LinearOperator& op) {
  const std::size_t d = state.dim();
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      acc += std::conj(state[i]) * op(i, j) * state[j];
    }
  }
  return std::real(acc);
}

std::vector<NegationRecord> sample_classical_records(std::size_t count,
                                                     std::uint64_t seed) {
  if (count < 1) {
    throw std::invalid_argument("sample_classical_records: count must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<NegationRecord> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    // Dirichlet(1,1,1,1) sample over the four atoms.
    double gammas[4];
    double total = 0.0;
    for (double& g : gammas) {
      g = -std::log(std::max(unit(rng), 1e-300));
      total += g;
    }
    NegationRecord rec;
    rec.mu_ab = gammas[0] / total;
    rec.mu_ab_neg = gammas[1] / total;
    rec.mu_aneg_b = gammas[2] / total;
    rec.mu_aneg_bneg = gammas[3] / total;
    rec.mu_a = rec.mu_ab + rec.mu_ab_neg;
    rec.mu_b = rec.mu_ab + rec.mu_aneg_b;
    rec.mu_a_neg = rec.mu_aneg_b + rec.mu_aneg_bneg;
    rec.mu_b_neg = rec.mu_ab_neg + rec.mu_aneg_bneg;
    rec.item = "sampled-" + std::to_string(k);
    out.push_back(std::move(rec));
  }
  return out;
}

bool grid_validate_fit(const NegationRecord& record,
                       const NegationFockParams& fitted,
                       const OracleConfig& config) {
  validate(config);
  const int res = config.resolution;

  double fitted_total = 0.0;
  double grid_total = 0.0;
  for (const Quadrant q : kQuadrants) {
    const auto [mu_x, mu_y] = quadrant_marginals(record, q);
    const double target = quadrant_target(record, q);
    const double avg = 0.5 * (mu_x + mu_y);
    const double bound = interference_magnitude(mu_x, mu_y);

    const QuadrantParams& p = fitted[q];
    const double fitted_value = p.m * p.m * p.alpha +
                                p.n * p.n * (avg + p.beta * std::cos(p.phi_deg * kDegToRad));
    fitted_total += (fitted_value - target) * (fitted_value - target);

    // All beta*cos(phi) grid values, sorted so the innermost search over
    // two axes becomes a nearest-neighbour lookup.
    std::vector<double> products;
    products.reserve(static_cast<std::size_t>(res) * res);
    for (int i = 0; i < res; ++i) {
      const double beta = -bound + 2.0 * bound * i / (res - 1);
      for (int j = 0; j < res; ++j) {
        const double phi = 180.0 * j / (res - 1);
        products.push_back(beta * std::cos(phi * kDegToRad));
      }
    }
    std::sort(products.begin(), products.end());

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < res && best > 0.0; ++i) {
      const double m_sq = static_cast<double>(i) / (res - 1);
      const double n_sq = 1.0 - m_sq;
      for (int j = 0; j < res; ++j) {
        const double alpha = static_cast<double>(j) / (res - 1);
        const double base = m_sq * alpha + n_sq * avg;
        if (n_sq <= 0.0) {
          best = std::min(best, std::abs(base - target));
          continue;
        }
        // Nearest grid product to the exact remainder.
        const double want = (target - base) / n_sq;
        auto it = std::lower_bound(products.begin(), products.end(), want);
        if (it != products.end()) {
          best = std::min(best, std::abs(base + n_sq * *it - target));
        }
        if (it != products.begin()) {
          best = std::min(best, std::abs(base + n_sq * *(it - 1) - target));
        }
      }
    }
    grid_total += best * best;
  }
  return grid_total >= fitted_total - config.tolerance;
}

namespace {

bool verify_pair(PairAnalysis& pair) {
  if (!pair.fit || !pair.fit->feasible()) return true;
  const PairWeights& w = pair.weights;
  const double m_sq = pair.fit->params->m_sq;
  const auto forward = [&](double theta_deg) {
    return combination_weight(w.mu_a, w.mu_b, w.connective,
                              FockParams::from_m_sq(m_sq, theta_deg));
  };
  PairVerify v;
  const auto theta = bisect_theta(forward, w.mu_combined);
  if (theta) {
    v.theta_diff_deg = std::abs(*theta - pair.fit->params->theta_deg);
    v.theta_agrees = v.theta_diff_deg <= 1e-6;
  }
  pair.verify = v;
  return v.theta_agrees;
}

}  // namespace

std::size_t annotate_report(AnalysisReport& report, const OracleConfig& config) {
  validate(config);
  std::size_t failures = 0;
  for (RecordAnalysis& rec : report.records) {
    if (rec.conjunction && !verify_pair(*rec.conjunction)) ++failures;
    if (rec.disjunction && !verify_pair(*rec.disjunction)) ++failures;
    if (!rec.negation || !rec.record.has_negation()) continue;
    NegationVerify v;
    bool ok = true;
    const NegationRecord source = rec.record.negation();
    if (rec.negation->fit) {
      v.grid_ok = grid_validate_fit(source, rec.negation->fit->params, config);
      ok = ok && v.grid_ok;
    } else {
      v.grid_ok = true;
    }
    if (rec.negation->entangled) {
      const EntangledConstruction built = construct_entangled(source);
      double max_err = 0.0;
      if (built.constructed()) {
        const LinearOperator m = built.realization->proj;
        const LinearOperator one = LinearOperator::identity(2);
        const LinearOperator m_c = m.complement();
        const ComplexVector& c = built.realization->state_c;
        const std::pair<LinearOperator, double> checks[] = {
            {tensor_product(m, one), source.mu_a},
            {tensor_product(one, m), source.mu_b},
            {tensor_product(m_c, one), source.mu_a_neg},
            {tensor_product(one, m_c), source.mu_b_neg},
            {tensor_product(m, m), source.mu_ab},
            {tensor_product(m, m_c), source.mu_ab_neg},
            {tensor_product(m_c, m), source.mu_aneg_b},
            {tensor_product(m_c, m_c), source.mu_aneg_bneg}};
        for (const auto& [proj, expected] : checks) {
          max_err = std::max(max_err,
                             std::abs(born_weight_reference(c, proj) - expected));
        }
      } else {
        max_err = 1.0;  // report claims a construction the gate now rejects
      }
      v.readback_max_error = max_err;
      ok = ok && max_err <= tol::kBornReadback;
    }
    rec.negation->verify = v;
    if (!ok) ++failures;
  }
  return failures;
}

}  // namespace fockfit::oracle
