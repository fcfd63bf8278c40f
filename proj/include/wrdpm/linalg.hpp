#ifndef WRDPM_LINALG_HPP
#define WRDPM_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "wrdpm/errors.hpp"

namespace wrdpm {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Flips column signs so that each column's first entry of non-negligible
/// magnitude is nonnegative. Entries below 1e-12 of the column norm count as
/// zero.
template <typename Derived>
void canonicalize_signs(Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    const Scalar cutoff = Scalar(1e-12) * x.col(c).norm();
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      if (std::abs(x(r, c)) > cutoff) {
        if (x(r, c) < Scalar(0)) x.col(c) *= Scalar(-1);
        break;
      }
    }
  }
}

/// Best rank-`rank` positive semidefinite factor of a symmetric matrix:
/// X = V_r Λ_r^{1/2} over the `rank` largest eigenvalues, negatives clamped to
/// zero. Columns come in descending eigenvalue order with canonical signs.
/// `eigenvalues`, when given, receives all eigenvalues in descending order.
template <typename Derived>
Matrix<typename Derived::Scalar> truncated_psd_factor(
    const Eigen::MatrixBase<Derived>& m, Eigen::Index rank,
    Vector<typename Derived::Scalar>* eigenvalues = nullptr) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw ValidationError("matrix must be square");
  if (rank < 1 || rank > n) {
    throw ValidationError("rank " + std::to_string(rank) + " outside [1, " + std::to_string(n) +
                          "]");
  }
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> eig(m.derived());
  if (eig.info() != Eigen::Success) throw Error("eigendecomposition failed");
  // Eigen returns ascending order; take the top `rank` from the right.
  const Vector<Scalar> top = eig.eigenvalues().tail(rank).reverse();
  Matrix<Scalar> x = eig.eigenvectors().rightCols(rank).rowwise().reverse();
  x *= top.cwiseMax(Scalar(0)).cwiseSqrt().asDiagonal();
  canonicalize_signs(x);
  if (eigenvalues) *eigenvalues = eig.eigenvalues().reverse();
  return x;
}

/// Factor X with X Xᵀ = M for symmetric PSD M. Eigenvalues in (-tolerance, 0)
/// are treated as zero; anything lower raises NotPsdError. The default
/// tolerance is 1e-9·‖M‖_F.
template <typename Derived>
Matrix<typename Derived::Scalar> factor_psd(const Eigen::MatrixBase<Derived>& m,
                                            Eigen::Index rank,
                                            std::optional<double> tolerance = std::nullopt) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ValidationError("matrix must be square");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() >
      Scalar(1e-12) * std::max(Scalar(1), m.cwiseAbs().maxCoeff())) {
    throw ValidationError("matrix must be symmetric");
  }
  const Scalar tol = tolerance ? Scalar(*tolerance) : Scalar(1e-9) * m.norm();
  Vector<Scalar> eigenvalues;
  Matrix<Scalar> x = truncated_psd_factor(m, rank, &eigenvalues);
  const Scalar smallest = eigenvalues(eigenvalues.size() - 1);
  if (smallest < -tol) {
    throw NotPsdError("matrix is not positive semidefinite: eigenvalue " +
                          std::to_string(static_cast<double>(smallest)) + " below -" +
                          std::to_string(static_cast<double>(tol)),
                      static_cast<double>(smallest));
  }
  return x;
}

/// √(Σ_{j≠l} (⟨x_j, x_l⟩ − A_jl)²): the Frobenius discrepancy ignoring the diagonal.
template <typename DerivedA, typename DerivedX>
typename DerivedX::Scalar offdiagonal_residual(const Eigen::MatrixBase<DerivedA>& a,
                                               const Eigen::MatrixBase<DerivedX>& x) {
  using Scalar = typename DerivedX::Scalar;
  if (a.rows() != x.rows() || a.cols() != x.rows()) {
    throw ValidationError("residual: shape mismatch");
  }
  Matrix<Scalar> diff = x * x.transpose() - a.template cast<Scalar>();
  diff.diagonal().setZero();
  return diff.norm();
}

/// Euclidean length of each row.
template <typename Derived>
Vector<typename Derived::Scalar> row_norms(const Eigen::MatrixBase<Derived>& x) {
  return x.rowwise().norm();
}

/// Rows scaled to unit length; zero rows stay zero.
template <typename Derived>
Matrix<typename Derived::Scalar> normalize_rows(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> out = x;
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    const Scalar len = out.row(r).norm();
    if (len > Scalar(0)) out.row(r) /= len;
  }
  return out;
}

}  // namespace wrdpm

#endif  // WRDPM_LINALG_HPP
