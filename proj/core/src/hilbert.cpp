#include "fockfit/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fockfit {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

ComplexVector::ComplexVector(std::vector<Complex> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("ComplexVector: dimension must be >= 1");
  }
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw std::invalid_argument("ComplexVector::basis: index out of range");
  }
  std::vector<Complex> c(dim, Complex{0.0, 0.0});
  c[index] = Complex{1.0, 0.0};
  return ComplexVector(std::move(c));
}

double ComplexVector::norm() const {
  double s = 0.0;
  for (const Complex& c : components_) s += std::norm(c);
  return std::sqrt(s);
}

bool ComplexVector::is_unit(double tolerance) const {
  const double n2 = std::real(inner_product(*this, *this));
  return std::abs(n2 - 1.0) <= tolerance;
}

ComplexVector& ComplexVector::require_unit(double tolerance) {
  if (!is_unit(tolerance)) {
    throw std::invalid_argument("ComplexVector: expected a unit vector, |<v|v>| = " +
                                std::to_string(norm() * norm()));
  }
  return *this;
}

const ComplexVector& ComplexVector::require_unit(double tolerance) const {
  if (!is_unit(tolerance)) {
    throw std::invalid_argument("ComplexVector: expected a unit vector, |<v|v>| = " +
                                std::to_string(norm() * norm()));
  }
  return *this;
}

ComplexVector ComplexVector::scaled(Complex factor) const {
  std::vector<Complex> c(components_);
  for (Complex& x : c) x *= factor;
  return ComplexVector(std::move(c));
}

ComplexVector operator+(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u.dim(), v.dim(), "ComplexVector::operator+");
  std::vector<Complex> c(u.components_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += v.components_[i];
  return ComplexVector(std::move(c));
}

ComplexVector operator-(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u.dim(), v.dim(), "ComplexVector::operator-");
  std::vector<Complex> c(u.components_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= v.components_[i];
  return ComplexVector(std::move(c));
}

Complex inner_product(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner_product");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

LinearOperator::LinearOperator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) {
    throw std::invalid_argument("LinearOperator: dimension must be >= 1");
  }
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("LinearOperator: entry count does not match dimension");
  }
}

LinearOperator LinearOperator::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t d = rows.size();
  std::vector<Complex> entries;
  entries.reserve(d * d);
  for (const auto& row : rows) {
    if (row.size() != d) {
      throw std::invalid_argument("LinearOperator::from_rows: matrix is not square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return LinearOperator(d, std::move(entries));
}

LinearOperator LinearOperator::identity(std::size_t dim) {
  std::vector<Complex> entries(dim * dim, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) entries[i * dim + i] = Complex{1.0, 0.0};
  LinearOperator op(dim, std::move(entries));
  op.projector_flag_ = true;
  return op;
}

LinearOperator LinearOperator::outer(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u.dim(), v.dim(), "LinearOperator::outer");
  const std::size_t d = u.dim();
  std::vector<Complex> entries(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      entries[i * d + j] = u[i] * std::conj(v[j]);
    }
  }
  LinearOperator op(d, std::move(entries));
  // |u><u| with unit u is an orthogonal projector.
  if (&u == &v || (u.components() == v.components() && u.is_unit())) {
    op.projector_flag_ = u.is_unit();
  }
  return op;
}

LinearOperator LinearOperator::basis_projector(std::size_t dim, std::size_t rank) {
  if (rank > dim) {
    throw std::invalid_argument("LinearOperator::basis_projector: rank exceeds dimension");
  }
  std::vector<Complex> entries(dim * dim, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < rank; ++i) entries[i * dim + i] = Complex{1.0, 0.0};
  LinearOperator op(dim, std::move(entries));
  op.projector_flag_ = true;
  return op;
}

LinearOperator LinearOperator::projector(LinearOperator m, double tolerance) {
  if (!m.is_projector(tolerance)) {
    throw std::invalid_argument(
        "LinearOperator::projector: matrix is not hermitian-idempotent within tolerance");
  }
  m.projector_flag_ = true;
  return m;
}

bool LinearOperator::is_projector(double tolerance) const {
  if (projector_flag_) return true;
  // Hermiticity.
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const Complex diff = (*this)(i, j) - std::conj((*this)(j, i));
      if (std::abs(diff) > tolerance) return false;
    }
  }
  // Idempotence.
  const LinearOperator sq = (*this) * (*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (std::abs(sq.entries_[k] - entries_[k]) > tolerance) return false;
  }
  return true;
}

LinearOperator LinearOperator::adjoint() const {
  std::vector<Complex> entries(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      entries[i * dim_ + j] = std::conj((*this)(j, i));
    }
  }
  return LinearOperator(dim_, std::move(entries));
}

Complex LinearOperator::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexVector LinearOperator::apply(const ComplexVector& v) const {
  require_same_dim(dim_, v.dim(), "LinearOperator::apply");
  std::vector<Complex> out(dim_, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex s{0.0, 0.0};
    for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return ComplexVector(std::move(out));
}

LinearOperator LinearOperator::complement() const {
  LinearOperator out = identity(dim_) - *this;
  out.projector_flag_ = projector_flag_;
  return out;
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  require_same_dim(a.dim_, b.dim_, "LinearOperator::operator+");
  std::vector<Complex> entries(a.entries_);
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] += b.entries_[k];
  return LinearOperator(a.dim_, std::move(entries));
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  require_same_dim(a.dim_, b.dim_, "LinearOperator::operator-");
  std::vector<Complex> entries(a.entries_);
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] -= b.entries_[k];
  return LinearOperator(a.dim_, std::move(entries));
}

LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
  require_same_dim(a.dim_, b.dim_, "LinearOperator::operator*");
  const std::size_t d = a.dim_;
  std::vector<Complex> entries(d * d, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < d; ++j) {
        entries[i * d + j] += aik * b(k, j);
      }
    }
  }
  return LinearOperator(d, std::move(entries));
}

LinearOperator operator*(Complex scalar, const LinearOperator& a) {
  std::vector<Complex> entries(a.entries_);
  for (Complex& e : entries) e *= scalar;
  return LinearOperator(a.dim_, std::move(entries));
}

ComplexVector tensor_product(const ComplexVector& u, const ComplexVector& v) {
  std::vector<Complex> out;
  out.reserve(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < v.dim(); ++j) {
      out.push_back(u[i] * v[j]);
    }
  }
  return ComplexVector(std::move(out));
}

LinearOperator tensor_product(const LinearOperator& a, const LinearOperator& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t d = da * db;
  std::vector<Complex> entries(d * d);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) {
          entries[(i * db + k) * d + (j * db + l)] = aij * b(k, l);
        }
      }
    }
  }
  LinearOperator out(d, std::move(entries));
  // Tensor of projectors is a projector.
  if (a.projector_flagged() && b.projector_flagged()) {
    out = LinearOperator::projector(std::move(out));
  }
  return out;
}

double born_weight(const ComplexVector& state, const LinearOperator& proj) {
  require_same_dim(state.dim(), proj.dim(), "born_weight");
  state.require_unit();
  if (!proj.is_projector()) {
    throw std::invalid_argument("born_weight: operator is not an orthogonal projector");
  }
  const Complex value = inner_product(state, proj.apply(state));
  if (std::abs(std::imag(value)) > tol::kUnitNorm) {
    throw std::invalid_argument("born_weight: quadratic form has non-real value");
  }
  return std::clamp(std::real(value), 0.0, 1.0);
}

}  // namespace fockfit
