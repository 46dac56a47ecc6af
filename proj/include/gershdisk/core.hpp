#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gershdisk {

using Index = Eigen::Index;

template <typename T>
using Complex = std::complex<T>;

// Dense complex matrices and vectors, templated on the real scalar.
template <typename T>
using CMatrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using CVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;
template <typename T>
using RMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using RVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using CMatrixd = CMatrix<double>;
using CVectord = CVector<double>;
using RMatrixd = RMatrix<double>;
using RVectord = RVector<double>;

// Error taxonomy. Every public operation reports contract violations by
// throwing one of these.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct ParameterError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct OrderingError : Error {
  using Error::Error;
};
struct BudgetError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct DegenerateBasisError : Error {
  using Error::Error;
};

// QR iteration ran out of sweeps; carries the partially reduced
// (upper Hessenberg) matrix.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, CMatrixd partial)
      : Error(what), partial(std::move(partial)) {}
  CMatrixd partial;
};

template <typename Derived>
bool is_square(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && m.rows() > 0;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      const auto z = m(i, j);
      if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z)))
        return false;
    }
  return true;
}

/// True when every entry is real (zero imaginary part) with re >= 0.
template <typename Derived>
bool is_nonneg_real(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      const auto z = m(i, j);
      if (std::imag(z) != 0 || std::real(z) < 0) return false;
    }
  return true;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  typename Eigen::NumTraits<typename Derived::Scalar>::Real tol) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* op) {
  if (!is_square(m))
    throw DimensionError(std::string(op) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* op) {
  if (!all_finite(m)) throw DomainError(std::string(op) + ": matrix has non-finite entries");
}

}  // namespace gershdisk
