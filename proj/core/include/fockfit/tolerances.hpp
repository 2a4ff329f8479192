#pragma once

// All numerical tolerances used across the library live here so that a
// threshold is never duplicated with drifting values.

namespace fockfit::tol {

// Unit-vector norms and projector validation (hermiticity, idempotence).
inline constexpr double kUnitNorm = 1e-12;

// Algebraic fits and solver residuals: a returned parameter set must
// reproduce its target weight at least this well.
inline constexpr double kAlgebraicFit = 1e-9;

// Born-rule readback of an explicit Hilbert-space realization.
inline constexpr double kBornReadback = 1e-10;

// Comparisons against values published with two rounded decimals.
inline constexpr double kPublishedValue = 0.05;

// Default threshold for calling a negation record classical.
inline constexpr double kClassicalityDefault = 1e-6;

// m^2 + n^2 = 1 checks: strict for internally fitted parameters, loose for
// externally supplied sets whose m and n were rounded to two decimals
// (rounding can push the norm off by slightly more than 1e-2).
inline constexpr double kFittedSectorNorm = 1e-9;
inline constexpr double kPublishedSectorNorm = 2e-2;

}  // namespace fockfit::tol
