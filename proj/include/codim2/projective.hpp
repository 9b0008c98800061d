#pragma once

#include <optional>
#include <vector>

#include "codim2/errors.hpp"
#include "codim2/linalg.hpp"
#include "codim2/polynomial.hpp"
#include "codim2/scalar.hpp"

// Codimension-2 subspaces of P^d and the rational functions p/q they define.
//
// A subspace X = {z : B z = 0} with B a 2 x (d+1) matrix of rank 2 corresponds to
// f = p/q where p, q are the rows of B read as coefficient vectors. Invertible row
// operations on B leave X fixed and post-compose f with a Moebius map, so a class is
// the row space of B. Every predicate here is invariant under those row operations.
//
// Scalars: Rational (exact, predicates are exact), double and Complex (predicates
// take a relative tolerance).

namespace codim2 {

namespace detail {

template <typename Scalar>
void require_rank_two(Matrix<Scalar> const &B, double tol)
{
  Eigen::Index rank = 0;
  if constexpr (ExactScalar<Scalar>) {
    rank = exact_rank(B);
  } else {
    rank = numerical_rank(B, tol);
  }
  if (rank != 2) {
    throw DegenerateSubspace("coefficient matrix has rank " + std::to_string(rank) + ", expected 2");
  }
}

} // namespace detail

template <typename Scalar>
class Subspace
{
public:
  explicit Subspace(Matrix<Scalar> B, double tol = 1e-12)
    : B_(std::move(B))
  {
    if (B_.rows() != 2 || B_.cols() < 2) {
      throw DegenerateSubspace("coefficient matrix must be 2 x (d+1) with d >= 1");
    }
    detail::require_rank_two(B_, tol);
  }

  Matrix<Scalar> const &coefficients() const { return B_; }
  int d() const { return static_cast<int>(B_.cols()) - 1; }

private:
  Matrix<Scalar> B_;
};

template <typename Scalar>
class RationalClass
{
public:
  // Numerator and denominator are padded to d+1 coefficients.
  RationalClass(Poly<Scalar> const &p, Poly<Scalar> const &q, int d, double tol = 1e-12)
  {
    if (p.size() > d + 1 || q.size() > d + 1) {
      throw DegenerateSubspace("numerator or denominator has more than d+1 coefficients");
    }
    B_.resize(2, d + 1);
    B_.row(0) = resized(p, d + 1).transpose();
    B_.row(1) = resized(q, d + 1).transpose();
    detail::require_rank_two(B_, tol);
  }

  Poly<Scalar> p() const { return B_.row(0).transpose(); }
  Poly<Scalar> q() const { return B_.row(1).transpose(); }
  int d() const { return static_cast<int>(B_.cols()) - 1; }
  Matrix<Scalar> const &matrix() const { return B_; }

  // Homogeneous value (p(z), q(z)).
  std::pair<Scalar, Scalar> value(Scalar const &z) const { return {evaluate(p(), z), evaluate(q(), z)}; }

private:
  Matrix<Scalar> B_;
};

template <typename Scalar>
RationalClass<Scalar> rational_from_subspace(Subspace<Scalar> const &X)
{
  Matrix<Scalar> const &B = X.coefficients();
  return RationalClass<Scalar>(B.row(0).transpose(), B.row(1).transpose(), X.d());
}

template <typename Scalar>
Subspace<Scalar> subspace_from_rational(RationalClass<Scalar> const &f)
{
  return Subspace<Scalar>(f.matrix());
}

// All 2x2 minors B(0,i) B(1,j) - B(0,j) B(1,i), i < j, in lexicographic order.
template <typename Scalar>
Vector<Scalar> plucker(Matrix<Scalar> const &B)
{
  Eigen::Index const n = B.cols();
  Vector<Scalar> out(n * (n - 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out(k++) = B(0, i) * B(1, j) - B(0, j) * B(1, i);
    }
  }
  return out;
}

// Plücker vector normalized to a representative of the class. Exact: first nonzero
// coordinate equal to 1. Floating: unit norm, first coordinate above 1e-8 made real positive.
template <typename Scalar>
Vector<Scalar> canonical_key(Matrix<Scalar> const &B)
{
  if constexpr (ExactScalar<Scalar>) {
    Vector<Scalar> key = plucker(B);
    for (Eigen::Index i = 0; i < key.size(); ++i) {
      if (key(i) != 0) {
        Scalar const lead = key(i);
        for (Eigen::Index k = 0; k < key.size(); ++k) key(k) /= lead;
        break;
      }
    }
    return key;
  } else {
    Vector<Scalar> key = plucker<Scalar>(orthonormal_rows<Scalar>(B));
    key /= key.norm();
    for (Eigen::Index i = 0; i < key.size(); ++i) {
      if (std::abs(key(i)) > 1e-8) {
        Scalar const phase = key(i) / std::abs(key(i));
        key *= conjugate(phase);
        key(i) = std::abs(key(i));
        break;
      }
    }
    return key;
  }
}

template <typename Scalar>
Vector<Scalar> canonical_key(RationalClass<Scalar> const &f)
{
  return canonical_key(f.matrix());
}

// Projective distance between two canonical keys, phase-aligned (floating only).
template <FloatingScalar Scalar>
double key_distance(Vector<Scalar> const &a, Vector<Scalar> const &b)
{
  Scalar const ip = b.dot(a); // conj(b)^T a
  Scalar phase(1);
  if (std::abs(ip) > 0) phase = ip / std::abs(ip);
  return (a - phase * b).norm();
}

template <typename Scalar>
bool classes_equal(RationalClass<Scalar> const &f1, RationalClass<Scalar> const &f2, double tol = 1e-8)
{
  if (f1.d() != f2.d()) return false;
  if constexpr (ExactScalar<Scalar>) {
    return canonical_key(f1) == canonical_key(f2);
  } else {
    return key_distance<Scalar>(canonical_key(f1), canonical_key(f2)) <= tol;
  }
}

template <typename Scalar>
struct CurvePoint
{
  Scalar x;
  int multiplicity = 1;
};

// Columns E(x), E'(x), ..., E^{(m-1)}(x) for each point, E(z) = (1, z, ..., z^d).
template <typename Scalar>
Matrix<Scalar> curve_matrix(std::vector<CurvePoint<Scalar>> const &points, int d)
{
  int columns = 0;
  for (auto const &pt : points) {
    if (pt.multiplicity < 1) {
      throw BlockTooLarge("multiplicities must be positive");
    }
    columns += pt.multiplicity;
  }
  if (columns > d) {
    throw BlockTooLarge("block spans " + std::to_string(columns) + " columns, at most d = " + std::to_string(d) +
                        " allowed");
  }
  Matrix<Scalar> C = Matrix<Scalar>::Zero(d + 1, columns);
  int col = 0;
  for (auto const &pt : points) {
    for (int k = 0; k < pt.multiplicity; ++k, ++col) {
      // d^k/dz^k z^n = n!/(n-k)! z^{n-k}
      for (int n = k; n <= d; ++n) {
        Scalar coeff(1);
        for (int i = n - k + 1; i <= n; ++i) coeff *= Scalar(i);
        Scalar power(1);
        for (int i = 0; i < n - k; ++i) power *= pt.x;
        C(n, col) = coeff * power;
      }
    }
  }
  return C;
}

// rank(B C) <= 1: X meets the span of the columns of C non-transversally.
template <typename Scalar>
bool incidence_check(Subspace<Scalar> const &X, Matrix<Scalar> const &C, double tol = 1e-10)
{
  if (C.rows() != X.coefficients().cols()) {
    throw std::invalid_argument("curve matrix has " + std::to_string(C.rows()) + " rows, expected d+1");
  }
  if constexpr (ExactScalar<Scalar>) {
    return exact_rank<Scalar>(X.coefficients() * C) <= 1;
  } else {
    Matrix<Scalar> const M = orthonormal_rows<Scalar>(X.coefficients()) * C;
    Vector<double> const s = singular_values<Scalar>(M);
    if (s.size() < 2 || s(0) == 0.0) return true;
    return s(1) <= tol * s(0);
  }
}

// p and q share a non-constant factor, or deg f < d (both leading coefficients vanish).
template <typename Scalar>
bool is_reducible(RationalClass<Scalar> const &f, double tol = 1e-9)
{
  int const d = f.d();
  if constexpr (ExactScalar<Scalar>) {
    if (f.p()(d) == 0 && f.q()(d) == 0) return true;
    return exact_determinant<Scalar>(sylvester<Scalar>(f.p(), f.q())) == 0;
  } else {
    Matrix<Scalar> const B = orthonormal_rows<Scalar>(f.matrix());
    if (std::abs(B(0, d)) <= tol && std::abs(B(1, d)) <= tol) return true;
    Vector<double> const s = singular_values<Scalar>(sylvester<Scalar>(B.row(0).transpose(), B.row(1).transpose()));
    return s(s.size() - 1) <= tol * s(0);
  }
}

// Reduced echelon form taken from the highest degree down: p is monic at the
// highest degree present in the class, q is monic at the next pivot and has a
// zero coefficient at p's pivot.
template <typename Scalar>
RationalClass<Scalar> echelon_form(RationalClass<Scalar> const &f, double tol = 1e-9)
{
  Matrix<Scalar> B = f.matrix();
  if constexpr (!ExactScalar<Scalar>) {
    B = orthonormal_rows<Scalar>(B);
  }
  Eigen::Index row = 0;
  for (Eigen::Index c = B.cols() - 1; c >= 0 && row < 2; --c) {
    Eigen::Index pivot = row;
    if constexpr (ExactScalar<Scalar>) {
      if (B(row, c) == 0 && row == 0) pivot = 1;
      if (B(pivot, c) == 0) continue;
    } else {
      if (row == 0 && std::abs(B(1, c)) > std::abs(B(0, c))) pivot = 1;
      if (std::abs(B(pivot, c)) <= tol) continue;
    }
    B.row(pivot).swap(B.row(row));
    Scalar const lead = B(row, c);
    B.row(row) /= lead;
    Eigen::Index const other = 1 - row;
    Scalar const factor = B(other, c);
    B.row(other) -= factor * B.row(row);
    ++row;
  }
  if constexpr (!ExactScalar<Scalar>) {
    for (Eigen::Index i = 0; i < B.size(); ++i) {
      if (std::abs(B(i)) <= tol) B(i) = Scalar(0);
    }
  }
  return RationalClass<Scalar>(B.row(0).transpose(), B.row(1).transpose(), f.d());
}

template <typename Scalar>
struct RealityCheck
{
  bool real = false;
  // Class spanned by real coefficient vectors, in echelon form.
  std::optional<RationalClass<RealOf<Scalar>>> representative;
};

// The row space of B is conjugation invariant: rank [B; conj(B)] = 2.
template <typename Scalar>
RealityCheck<Scalar> is_real_class(RationalClass<Scalar> const &f, double tol = 1e-8)
{
  if constexpr (!std::is_same_v<Scalar, Complex>) {
    return {true, echelon_form(f)};
  } else {
    Matrix<Complex> const B = orthonormal_rows<Complex>(f.matrix());
    Matrix<Complex> stacked(4, B.cols());
    stacked << B, B.conjugate();
    Vector<double> const s = singular_values<Complex>(stacked);
    if (s(2) > tol * s(0)) return {false, std::nullopt};

    Matrix<double> parts(4, B.cols());
    parts << B.real(), B.imag();
    Eigen::JacobiSVD<Matrix<double>> svd(parts, Eigen::ComputeFullV);
    Matrix<double> const V = svd.matrixV();
    RationalClass<double> rep(V.col(0), V.col(1), f.d());
    return {true, echelon_form(rep)};
  }
}

template <typename Scalar>
RationalClass<Scalar> conjugate_class(RationalClass<Scalar> const &f)
{
  Matrix<Scalar> B = f.matrix();
  for (Eigen::Index i = 0; i < B.size(); ++i) B(i) = conjugate(B(i));
  return RationalClass<Scalar>(B.row(0).transpose(), B.row(1).transpose(), f.d());
}

// Chordal distance on the Riemann sphere between [a0 : a1] and [b0 : b1].
inline double chordal_distance(std::pair<Complex, Complex> const &a, std::pair<Complex, Complex> const &b)
{
  double const na = std::sqrt(std::norm(a.first) + std::norm(a.second));
  double const nb = std::sqrt(std::norm(b.first) + std::norm(b.second));
  if (na == 0.0 || nb == 0.0) return 1.0;
  return std::abs(a.first * b.second - a.second * b.first) / (na * nb);
}

template <typename To, typename From>
RationalClass<To> cast_class(RationalClass<From> const &f)
{
  Matrix<To> B(2, f.d() + 1);
  for (Eigen::Index i = 0; i < B.rows(); ++i) {
    for (Eigen::Index j = 0; j < B.cols(); ++j) {
      if constexpr (std::is_same_v<From, Rational>) {
        B(i, j) = To(f.matrix()(i, j).template convert_to<double>());
      } else {
        B(i, j) = To(f.matrix()(i, j));
      }
    }
  }
  return RationalClass<To>(B.row(0).transpose(), B.row(1).transpose(), f.d());
}

} // namespace codim2
