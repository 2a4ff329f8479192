#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fockfit/tolerances.hpp"

// Minimal dense complex linear algebra for finite-dimensional state spaces:
// vectors, inner products, Kronecker products, orthogonal projectors and
// Born-rule evaluation. Model dimensions stay small (<= ~16), so everything
// is dense and value-semantic. All types are immutable after construction
// and every operation is a pure function; sharing across threads is safe.

namespace fockfit {

using Complex = std::complex<double>;

class ComplexVector {
 public:
  // Throws std::invalid_argument on an empty component list.
  explicit ComplexVector(std::vector<Complex> components);

  // Standard basis vector e_index in dimension dim.
  static ComplexVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return components_.size(); }
  const Complex& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Complex>& components() const { return components_; }

  double norm() const;
  bool is_unit(double tolerance = tol::kUnitNorm) const;

  // Fails (throws) when the vector is not unit within tolerance.
  ComplexVector& require_unit(double tolerance = tol::kUnitNorm);
  const ComplexVector& require_unit(double tolerance = tol::kUnitNorm) const;

  ComplexVector scaled(Complex factor) const;

  friend ComplexVector operator+(const ComplexVector& u, const ComplexVector& v);
  friend ComplexVector operator-(const ComplexVector& u, const ComplexVector& v);

 private:
  std::vector<Complex> components_;
};

// <u|v>, conjugate-linear in the first argument. Throws on dimension mismatch.
Complex inner_product(const ComplexVector& u, const ComplexVector& v);

class LinearOperator {
 public:
  // Row-major square matrix; entries.size() must be dim*dim.
  LinearOperator(std::size_t dim, std::vector<Complex> entries);

  static LinearOperator from_rows(const std::vector<std::vector<Complex>>& rows);
  static LinearOperator identity(std::size_t dim);

  // |u><v|. With u == v unit this is the rank-one projector onto u.
  static LinearOperator outer(const ComplexVector& u, const ComplexVector& v);

  // Projector onto the span of the first `rank` basis vectors.
  static LinearOperator basis_projector(std::size_t dim, std::size_t rank);

  // Validates M = M^dagger and M^2 = M entrywise to `tolerance` and flags
  // the result; throws std::invalid_argument when the check fails.
  static LinearOperator projector(LinearOperator m, double tolerance = tol::kUnitNorm);

  std::size_t dim() const { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  // True when the matrix is hermitian and idempotent within tolerance.
  // Flagged operators skip the arithmetic.
  bool is_projector(double tolerance = tol::kUnitNorm) const;
  bool projector_flagged() const { return projector_flag_; }

  LinearOperator adjoint() const;
  Complex trace() const;
  ComplexVector apply(const ComplexVector& v) const;

  // 1 - M. Preserves the projector flag.
  LinearOperator complement() const;

  friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator*(Complex scalar, const LinearOperator& a);

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
  // Set only by constructions that guarantee projector structure
  // (identity, validated factories, complement/tensor of flagged inputs).
  bool projector_flag_ = false;
};

// Kronecker products with the first factor varying slowest:
//   (u (x) v)[i*dim(v) + j]                 = u[i] * v[j]
//   (A (x) B)(i*dim(B)+k, j*dim(B)+l)       = A(i,j) * B(k,l)
// The convention is fixed here once; every tensor construction in the
// library relies on it.
ComplexVector tensor_product(const ComplexVector& u, const ComplexVector& v);
LinearOperator tensor_product(const LinearOperator& a, const LinearOperator& b);

// Born rule <state|proj|state> for a unit state and an orthogonal projector.
// The imaginary residue of the quadratic form must stay below 1e-12; the
// real part is clamped to [0, 1]. Throws std::invalid_argument on a
// non-unit state or a non-projector operator.
double born_weight(const ComplexVector& state, const LinearOperator& proj);

}  // namespace fockfit
