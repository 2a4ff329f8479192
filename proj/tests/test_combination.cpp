#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fockfit/combination.hpp"
#include "fockfit/oracles.hpp"
#include "test_util.hpp"

using namespace fockfit;

namespace {

// Frozen from the scalar-bisection oracle run against the forward formulas.
constexpr double kMintTheta = 23.887658082420401;
constexpr double kSunglassesTheta = 138.85372991326273;
constexpr double kOliveAndTheta = 82.165481267218894;
constexpr double kMintBeta = 0.15716233645501709;

double forward(double mu_a, double mu_b, Connective conn, double m_sq,
               double theta_deg) {
  return combination_weight(mu_a, mu_b, conn, FockParams::from_m_sq(m_sq, theta_deg));
}

}  // namespace

TEST_CASE("interference magnitude branch formula") {
  CHECK(interference_magnitude(0.87, 0.81) ==
        doctest::Approx(kMintBeta).epsilon(1e-13));
  CHECK(interference_magnitude(1.0, 1.0) == 0.0);
  CHECK(interference_magnitude(0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(interference_magnitude(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(interference_magnitude(0.5, 1.2), std::invalid_argument);
}

TEST_CASE("interference magnitude equals the min form exactly") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 10000; ++rep) {
    const double a = unit(rng);
    const double b = unit(rng);
    const double min_form =
        std::min(std::sqrt(a * b), std::sqrt((1.0 - a) * (1.0 - b)));
    CHECK(interference_magnitude(a, b) == min_form);
  }
}

TEST_CASE("conjunction weight reproduces the Mint value") {
  CHECK(conjunction_weight(0.87, 0.81, FockParams::from_m_sq(0.3, kMintTheta)) ==
        doctest::Approx(0.9).epsilon(1e-10));
}

TEST_CASE("conjunction weight degenerate sectors") {
  // Pure sector 2: the product rule.
  CHECK(conjunction_weight(0.6, 0.3, FockParams::from_m_sq(1.0, 37.0)) ==
        doctest::Approx(0.18).epsilon(1e-15));
  // Pure sector 1 with a right-angle interference term: the plain average.
  CHECK(conjunction_weight(0.6, 0.3, FockParams::from_m_sq(0.0, 90.0)) ==
        doctest::Approx(0.45).epsilon(1e-12));
}

TEST_CASE("disjunction weight reproduces the Sunglasses value") {
  CHECK(disjunction_weight(0.4, 0.2, FockParams::from_m_sq(0.03, kSunglassesTheta)) ==
        doctest::Approx(0.1).epsilon(1e-10));
}

TEST_CASE("disjunction weight degenerate cases") {
  // Pure sector 2 equals inclusion-exclusion, the de Morgan dual of the
  // product rule.
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 100; ++rep) {
    const double a = unit(rng);
    const double b = unit(rng);
    const double w = disjunction_weight(a, b, FockParams::from_m_sq(1.0, 45.0));
    CHECK(w == 1.0 - (1.0 - a) * (1.0 - b));
  }
  for (double theta : {0.0, 45.0, 170.0}) {
    for (double m_sq : {0.0, 0.4, 1.0}) {
      CHECK(disjunction_weight(0.0, 0.0, FockParams::from_m_sq(m_sq, theta)) == 0.0);
    }
  }
}

TEST_CASE("solve_theta inverts the forward formulas") {
  const auto mint = solve_theta(0.87, 0.81, 0.9, 0.3, Connective::And);
  REQUIRE(mint.has_value());
  CHECK(*mint == doctest::Approx(kMintTheta).epsilon(1e-9));
  CHECK(forward(0.87, 0.81, Connective::And, 0.3, *mint) ==
        doctest::Approx(0.9).epsilon(1e-12));

  const auto sun = solve_theta(0.4, 0.2, 0.1, 0.03, Connective::Or);
  REQUIRE(sun.has_value());
  CHECK(*sun == doctest::Approx(kSunglassesTheta).epsilon(1e-9));

  // Upper feasibility endpoint: theta = 0.
  const double top = forward(0.3, 0.6, Connective::And, 0.25, 0.0);
  const auto at_top = solve_theta(0.3, 0.6, top, 0.25, Connective::And);
  REQUIRE(at_top.has_value());
  CHECK(*at_top == doctest::Approx(0.0).epsilon(1e-6));

  // Outside the reachable band.
  CHECK_FALSE(solve_theta(0.5, 0.1, 0.8, 0.0, Connective::Or).has_value());

  // Degenerate n^2 beta = 0 with a vanishing residual: 90 by convention.
  const auto degenerate = solve_theta(0.6, 0.3, 0.18, 1.0, Connective::And);
  REQUIRE(degenerate.has_value());
  CHECK(*degenerate == 90.0);
  CHECK_FALSE(solve_theta(0.6, 0.3, 0.5, 1.0, Connective::And).has_value());
}

TEST_CASE("solve_theta agrees with the bisection oracle on random feasible instances") {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int solved = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const double a = unit(rng);
    const double b = unit(rng);
    const double m_sq = unit(rng);
    const Connective conn = rep % 2 == 0 ? Connective::And : Connective::Or;
    // Draw the target inside the reachable band so the instance is feasible.
    const double theta_true = 180.0 * unit(rng);
    const double target = forward(a, b, conn, m_sq, theta_true);
    const auto algebraic = solve_theta(a, b, target, m_sq, conn);
    REQUIRE(algebraic.has_value());
    const auto bisected = fockfit::oracle::bisect_theta(
        [&](double t) { return forward(a, b, conn, m_sq, t); }, target);
    if (!bisected) continue;  // flat forward map: any angle solves it
    ++solved;
    CHECK(std::abs(*algebraic - *bisected) < 1e-6);
  }
  CHECK(solved > 900);
}

TEST_CASE("feasibility interval endpoints") {
  const Interval zero = feasibility_interval(0.0, 0.0, Connective::And);
  CHECK(zero.lo == 0.0);
  CHECK(zero.hi == 0.0);
  const Interval one = feasibility_interval(1.0, 1.0, Connective::And);
  CHECK(one.lo == 1.0);
  CHECK(one.hi == 1.0);
  const Interval half = feasibility_interval(0.5, 0.5, Connective::And);
  CHECK(half.lo == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(half.hi == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("feasibility hull edges are attained by their witnesses") {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 500; ++rep) {
    const double a = unit(rng);
    const double b = unit(rng);
    const Connective conn = rep % 2 == 0 ? Connective::And : Connective::Or;
    const FeasibilityHull hull = feasibility_hull(a, b, conn);
    CHECK(std::abs(combination_weight(a, b, conn, hull.at_lo) - hull.range.lo) <
          1e-9);
    CHECK(std::abs(combination_weight(a, b, conn, hull.at_hi) - hull.range.hi) <
          1e-9);
    // Any forward evaluation lands inside the hull.
    const FockParams p = FockParams::from_m_sq(unit(rng), 180.0 * unit(rng));
    CHECK(hull.range.contains(combination_weight(a, b, conn, p), 1e-12));
  }
}

TEST_CASE("fit_pair with a fixed sector weight") {
  const PairWeights sunglasses{0.4, 0.2, 0.1, Connective::Or};
  const PairFitResult fit = fit_pair(sunglasses, FitStrategy::fix_m2(0.03));
  REQUIRE(fit.feasible());
  CHECK(fit.params->n_sq == doctest::Approx(0.97).epsilon(1e-12));
  CHECK(fit.params->theta_deg == doctest::Approx(kSunglassesTheta).epsilon(1e-9));
  CHECK(fit.residual <= 1e-9);

  // Product-rule record fits exactly in pure sector 2.
  const PairWeights product{0.35, 0.4, 0.14, Connective::And};
  const PairFitResult exact = fit_pair(product, FitStrategy::fix_m2(1.0));
  REQUIRE(exact.feasible());
  CHECK(exact.params->theta_deg == 90.0);
  CHECK(exact.residual <= 1e-12);
}

TEST_CASE("fit_pair max-sector1 strategy") {
  // Olive's conjunction lies inside the hull and admits a pure sector-1 fit.
  const PairWeights olive_and{0.56, 0.63, 0.65, Connective::And};
  const PairFitResult fit = fit_pair(olive_and, FitStrategy::max_sector1());
  REQUIRE(fit.feasible());
  CHECK(fit.params->m_sq == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(fit.params->theta_deg == doctest::Approx(kOliveAndTheta).epsilon(1e-9));
  CHECK(fit.residual <= 1e-9);
}

TEST_CASE("fit_pair reports infeasibility with the hull attached") {
  // Olive's disjunction weight 0.8 exceeds everything the model can reach
  // for (0.5, 0.1): the hull tops out at the sector-2 value 0.55.
  const PairWeights olive_or{0.5, 0.1, 0.8, Connective::Or};
  for (const FitStrategy& strategy :
       {FitStrategy::max_sector1(), FitStrategy::min_interference(),
        FitStrategy::fix_m2(0.5)}) {
    const PairFitResult fit = fit_pair(olive_or, strategy);
    CHECK_FALSE(fit.feasible());
    CHECK(fit.feasibility.lo == doctest::Approx(0.076393202250021025).epsilon(1e-12));
    CHECK(fit.feasibility.hi == doctest::Approx(0.55).epsilon(1e-12));
    CHECK(fit.residual == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("fit_pair min-interference strategy") {
  // Target equal to a sector mixture of the averages admits cos(theta)=0.
  const double a = 0.3, b = 0.5;
  const double target = 0.25 * sector2_term(a, b, Connective::And) + 0.75 * 0.4;
  const PairFitResult fit =
      fit_pair({a, b, target, Connective::And}, FitStrategy::min_interference());
  REQUIRE(fit.feasible());
  CHECK(fit.params->theta_deg == doctest::Approx(90.0).epsilon(1e-9));
  CHECK(fit.residual <= 1e-9);

  // When no feasible m^2 zeroes the interference, the solution sits at a
  // feasible-interval endpoint with minimal |cos theta|.
  const PairWeights mint{0.87, 0.81, 0.9, Connective::And};
  const PairFitResult mint_fit = fit_pair(mint, FitStrategy::min_interference());
  REQUIRE(mint_fit.feasible());
  CHECK(mint_fit.residual <= 1e-9);
  const PairFitResult mint_max = fit_pair(mint, FitStrategy::max_sector1());
  REQUIRE(mint_max.feasible());
  const double cos_min =
      std::abs(std::cos(mint_fit.params->theta_deg * std::numbers::pi / 180.0));
  const double cos_max =
      std::abs(std::cos(mint_max.params->theta_deg * std::numbers::pi / 180.0));
  CHECK(cos_min <= cos_max + 1e-12);
}

TEST_CASE("fit_pair round-trips every feasible random record") {
  std::mt19937_64 rng(113);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 1000; ++rep) {
    const double a = unit(rng);
    const double b = unit(rng);
    const Connective conn = rep % 2 == 0 ? Connective::And : Connective::Or;
    const double target =
        forward(a, b, conn, unit(rng), 180.0 * unit(rng));
    const PairWeights rec{a, b, target, conn};
    for (const FitStrategy& strategy :
         {FitStrategy::max_sector1(), FitStrategy::min_interference()}) {
      const PairFitResult fit = fit_pair(rec, strategy);
      REQUIRE(fit.feasible());
      CHECK(fit.residual <= 1e-9);
      CHECK(std::abs(combination_weight(a, b, conn, *fit.params) - target) <=
            1e-9);
    }
  }
}

TEST_CASE("deviation classification on the published items") {
  const DeviationClass mint =
      classify_deviation({0.87, 0.81, 0.9, Connective::And});
  CHECK(mint.kind == DeviationKind::DoubleOverextended);
  CHECK(mint.margin == doctest::Approx(0.03).epsilon(1e-12));

  const DeviationClass sunglasses =
      classify_deviation({0.4, 0.2, 0.1, Connective::Or});
  CHECK(sunglasses.kind == DeviationKind::DoubleUnderextended);
  CHECK(sunglasses.margin == doctest::Approx(0.1).epsilon(1e-12));

  const DeviationClass olive_or =
      classify_deviation({0.5, 0.1, 0.8, Connective::Or});
  CHECK(olive_or.kind == DeviationKind::DoubleOverextended);
  CHECK(olive_or.margin == doctest::Approx(0.2).epsilon(1e-12));

  const DeviationClass olive_and =
      classify_deviation({0.56, 0.63, 0.65, Connective::And});
  CHECK(olive_and.kind == DeviationKind::DoubleOverextended);
  CHECK(olive_and.margin == doctest::Approx(0.02).epsilon(1e-12));

  const DeviationClass single =
      classify_deviation({0.2, 0.8, 0.5, Connective::And});
  CHECK(single.kind == DeviationKind::Overextended);
  CHECK(single.margin == doctest::Approx(0.3).epsilon(1e-12));

  CHECK(classify_deviation({0.6, 0.3, 0.2, Connective::And}).kind ==
        DeviationKind::ClassicalRange);
  CHECK(classify_deviation({0.6, 0.3, 0.7, Connective::Or}).kind ==
        DeviationKind::ClassicalRange);
  CHECK(classify_deviation({0.6, 0.3, 0.5, Connective::Or}).kind ==
        DeviationKind::Underextended);
}

TEST_CASE("deviation classification is symmetric in the constituents") {
  std::mt19937_64 rng(127);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 1000; ++rep) {
    const double a = unit(rng);
    const double b = unit(rng);
    const double t = unit(rng);
    const Connective conn = rep % 2 == 0 ? Connective::And : Connective::Or;
    const DeviationClass d1 = classify_deviation({a, b, t, conn});
    const DeviationClass d2 = classify_deviation({b, a, t, conn});
    CHECK(d1.kind == d2.kind);
    CHECK(d1.margin == d2.margin);
  }
}

TEST_CASE("sector-1 realization reproduces weights and interference target") {
  // Equal weights at the top of the interference range.
  const Sector1Realization equal = realize_sector1(0.5, 0.5, 0.5);
  CHECK(born_weight(equal.vec_a, equal.proj) == doctest::Approx(0.5).epsilon(1e-11));
  CHECK(born_weight(equal.vec_b, equal.proj) == doctest::Approx(0.5).epsilon(1e-11));

  // The Mint fit read back from an explicit construction.
  const double target = kMintBeta * std::cos(kMintTheta * std::numbers::pi / 180.0);
  const Sector1Realization mint = realize_sector1(0.87, 0.81, target);
  CHECK(mint.dimension <= 3);
  CHECK(born_weight(mint.vec_a, mint.proj) == doctest::Approx(0.87).epsilon(1e-11));
  CHECK(born_weight(mint.vec_b, mint.proj) == doctest::Approx(0.81).epsilon(1e-11));
  const Complex cross = inner_product(mint.vec_a, mint.proj.apply(mint.vec_b));
  CHECK(std::real(cross) == doctest::Approx(target).epsilon(1e-11));
  // Re<A|B> = 0 keeps the emergent superposition (|A>+|B>)/sqrt(2) unit.
  CHECK(std::abs(std::real(inner_product(mint.vec_a, mint.vec_b))) < 1e-12);
  const ComplexVector sup =
      (mint.vec_a + mint.vec_b).scaled(Complex{1.0 / std::sqrt(2.0), 0.0});
  CHECK(sup.is_unit(1e-10));
  CHECK(born_weight(sup, mint.proj) ==
        doctest::Approx(0.5 * (0.87 + 0.81) + target).epsilon(1e-10));

  CHECK_THROWS_AS(realize_sector1(0.87, 0.81, kMintBeta + 0.1),
                  std::invalid_argument);
}

TEST_CASE("sector-1 realizations satisfy the interference bound everywhere") {
  std::mt19937_64 rng(131);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 500; ++rep) {
    const double a = unit(rng);
    const double b = unit(rng);
    const double bound = interference_magnitude(a, b);
    const double target = bound * (2.0 * unit(rng) - 1.0);
    const Sector1Realization real = realize_sector1(a, b, target);
    CHECK(std::abs(born_weight(real.vec_a, real.proj) - a) < 1e-10);
    CHECK(std::abs(born_weight(real.vec_b, real.proj) - b) < 1e-10);
    const double cross =
        std::real(inner_product(real.vec_a, real.proj.apply(real.vec_b)));
    CHECK(std::abs(cross - target) < 1e-10);
    CHECK(std::abs(cross) <=
          std::min(std::sqrt(a * b), std::sqrt((1.0 - a) * (1.0 - b))) + 1e-10);
    CHECK(std::abs(std::real(inner_product(real.vec_a, real.vec_b))) < 1e-10);
  }
}

TEST_CASE("lambda and nu phases never affect weights") {
  FockParams p = FockParams::from_m_sq(0.3, 40.0);
  const double base_and = conjunction_weight(0.7, 0.4, p);
  const double base_or = disjunction_weight(0.7, 0.4, p);
  p.lambda_phase_deg = 123.0;
  p.nu_phase_deg = -45.0;
  CHECK(conjunction_weight(0.7, 0.4, p) == base_and);
  CHECK(disjunction_weight(0.7, 0.4, p) == base_or);
}
