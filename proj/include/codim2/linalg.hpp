#pragma once

#include <optional>

#include "codim2/scalar.hpp"

namespace codim2 {

// Row-echelon reduction over an exact field; returns the rank.
template <ExactScalar Scalar>
Eigen::Index exact_rank(Matrix<Scalar> M)
{
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < M.cols() && rank < M.rows(); ++c) {
    Eigen::Index pivot = rank;
    while (pivot < M.rows() && M(pivot, c) == 0) ++pivot;
    if (pivot == M.rows()) continue;
    M.row(pivot).swap(M.row(rank));
    for (Eigen::Index r = rank + 1; r < M.rows(); ++r) {
      if (M(r, c) == 0) continue;
      Scalar const f = M(r, c) / M(rank, c);
      M.row(r) -= f * M.row(rank);
    }
    ++rank;
  }
  return rank;
}

template <ExactScalar Scalar>
Scalar exact_determinant(Matrix<Scalar> M)
{
  Scalar det(1);
  Eigen::Index const n = M.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && M(pivot, c) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != c) {
      M.row(pivot).swap(M.row(c));
      det = -det;
    }
    det *= M(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (M(r, c) == 0) continue;
      Scalar const f = M(r, c) / M(c, c);
      M.row(r) -= f * M.row(c);
    }
  }
  return det;
}

// Unique solution of a square system, or nothing when singular.
template <ExactScalar Scalar>
std::optional<Vector<Scalar>> exact_solve(Matrix<Scalar> A, Vector<Scalar> b)
{
  Eigen::Index const n = A.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && A(pivot, c) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    A.row(pivot).swap(A.row(c));
    std::swap(b(pivot), b(c));
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || A(r, c) == 0) continue;
      Scalar const f = A(r, c) / A(c, c);
      A.row(r) -= f * A.row(c);
      b(r) -= f * b(c);
    }
  }
  Vector<Scalar> x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x(i) = b(i) / A(i, i);
  }
  return x;
}

template <FloatingScalar Scalar>
Vector<double> singular_values(Matrix<Scalar> const &M)
{
  return Eigen::JacobiSVD<Matrix<Scalar>>(M).singularValues();
}

// Numerical rank: singular values above tol times the largest.
template <FloatingScalar Scalar>
Eigen::Index numerical_rank(Matrix<Scalar> const &M, double tol)
{
  if (M.size() == 0) return 0;
  Vector<double> const s = singular_values(M);
  if (s(0) == 0.0) return 0;
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > tol * s(0)) ++r;
  return r;
}

// Orthonormal basis (as rows) of the row space of a full-row-rank matrix.
template <FloatingScalar Scalar>
Matrix<Scalar> orthonormal_rows(Matrix<Scalar> const &M)
{
  Eigen::HouseholderQR<Matrix<Scalar>> qr(M.adjoint());
  Matrix<Scalar> Q = qr.householderQ() * Matrix<Scalar>::Identity(M.cols(), M.rows());
  return Q.adjoint();
}

} // namespace codim2
