#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <utility>

#include "corrdet/errors.hpp"
#include "corrdet/kahan.hpp"

namespace corrdet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

template <typename Derived>
bool has_finite_entries(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != (i == j ? 1.0 : 0.0)) return false;
    }
  }
  return true;
}

/// Dense symmetric matrix with finite entries. The constructor symmetrizes
/// inputs whose asymmetry is within `sym_tol` (relative to the largest entry)
/// and rejects anything worse.
class SymMatrix {
 public:
  explicit SymMatrix(Matrix m, double sym_tol = 0.0) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
      throw ShapeMismatch("SymMatrix: matrix must be square and non-empty");
    }
    if (!has_finite_entries(m_)) {
      throw InvalidInputs("SymMatrix: entries must be finite");
    }
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
    if (asym > sym_tol * scale) {
      throw InvalidInputs("SymMatrix: matrix is not symmetric");
    }
    if (asym > 0.0) {
      m_ = ((m_ + m_.transpose()) / 2.0).eval();
    }
  }

  Index dim() const { return m_.rows(); }
  const Matrix& mat() const { return m_; }
  operator const Matrix&() const { return m_; }

 private:
  Matrix m_;
};

/// log det via Cholesky: sum of 2*log(L_ii). Pivots at or below
/// 1e-12 * max(diag) are treated as loss of positive definiteness.
template <typename Derived>
typename Derived::Scalar cholesky_logdet(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw ShapeMismatch("cholesky_logdet: matrix must be square");
  }
  Eigen::LLT<Dense> llt(m);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("cholesky_logdet: factorization failed");
  }
  const auto& L = llt.matrixLLT();
  const Scalar tol = Scalar(1e-12) * m.diagonal().maxCoeff();
  KahanSum sum;
  for (Index i = 0; i < m.rows(); ++i) {
    const Scalar pivot = L(i, i) * L(i, i);
    if (!(pivot > tol)) {
      throw NotPositiveDefinite("cholesky_logdet: pivot below tolerance");
    }
    sum.add(2.0 * std::log(L(i, i)));
  }
  return sum.value();
}

/// Symmetric square root Q diag(sqrt(lambda)) Q^T. Eigenvalues in
/// [-tol_eig, 0) are clipped to zero; anything below -tol_eig is an error,
/// with tol_eig = 1e-10 * spectral norm.
template <typename Derived>
Matrix sym_sqrt(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) {
    throw ShapeMismatch("sym_sqrt: matrix must be square");
  }
  if (is_identity(m)) {
    return Matrix::Identity(m.rows(), m.cols());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) {
    throw NumericalBreakdown("sym_sqrt: eigendecomposition failed");
  }
  Vector lambda = es.eigenvalues();
  const double spectral = lambda.cwiseAbs().maxCoeff();
  const double tol_eig = 1e-10 * spectral;
  for (Index i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < -tol_eig) {
      throw NotPsd("sym_sqrt: matrix has a negative eigenvalue");
    }
    lambda[i] = lambda[i] > 0.0 ? std::sqrt(lambda[i]) : 0.0;
  }
  Matrix root = es.eigenvectors() * lambda.asDiagonal() *
                es.eigenvectors().transpose();
  return ((root + root.transpose()) / 2.0).eval();
}

/// C coefficient of a correlation matrix: tr[(R^{1/2} o R^{1/2})^2] / p,
/// i.e. the mean 4th-power row sum of the symmetric square root. Since
/// R^{1/2} o R^{1/2} is doubly stochastic, the value lies in [1/p, 1] and
/// equals 1 exactly iff R = I.
template <typename Derived>
double c_coefficient(const Eigen::MatrixBase<Derived>& r) {
  const Matrix root = sym_sqrt(r);
  KahanSum sum;
  for (Index j = 0; j < root.cols(); ++j) {
    for (Index i = 0; i < root.rows(); ++i) {
      const double sq = root(i, j) * root(i, j);
      sum.add(sq * sq);
    }
  }
  return sum.value() / static_cast<double>(root.rows());
}

/// tr((R - I)^2) for a unit-diagonal symmetric matrix: sum of squared
/// off-diagonal entries.
template <typename Derived>
double trace_sq_deviation(const Eigen::MatrixBase<Derived>& r) {
  if (r.rows() != r.cols()) {
    throw ShapeMismatch("trace_sq_deviation: matrix must be square");
  }
  KahanSum sum;
  for (Index j = 0; j < r.cols(); ++j) {
    for (Index i = 0; i < r.rows(); ++i) {
      if (i != j) sum.add(r(i, j) * r(i, j));
    }
  }
  return sum.value();
}

}  // namespace corrdet
