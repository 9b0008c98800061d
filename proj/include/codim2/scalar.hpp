#pragma once

#include <complex>
#include <type_traits>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

// Eigen 3.4 expressions expose a void const_iterator, which trips Boost's byte-container
// probe when Eigen checks whether an expression converts to the scalar type.
namespace boost::multiprecision::detail {
template <typename T>
  requires requires { typename T::StorageKind; typename T::StorageIndex; }
struct is_byte_container<T> : boost::false_type
{};
} // namespace boost::multiprecision::detail

namespace codim2 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using Complex = std::complex<double>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Coefficients stored low degree first: p(z) = p[0] + p[1] z + ... + p[n] z^n.
template <typename Scalar>
using Poly = Vector<Scalar>;

template <typename Scalar>
struct scalar_traits
{
  static constexpr bool exact = false;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
};

template <>
struct scalar_traits<Rational>
{
  static constexpr bool exact = true;
  using Real = Rational;
};

template <typename Scalar>
concept ExactScalar = scalar_traits<Scalar>::exact;

template <typename Scalar>
concept FloatingScalar = !scalar_traits<Scalar>::exact;

template <typename Scalar>
using RealOf = typename scalar_traits<Scalar>::Real;

template <typename Scalar>
inline RealOf<Scalar> magnitude(Scalar const &x)
{
  using std::abs;
  using boost::multiprecision::abs;
  return abs(x);
}

template <typename Scalar>
inline Scalar conjugate(Scalar const &x)
{
  if constexpr (std::is_same_v<Scalar, Complex>) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <typename Scalar>
inline bool is_zero(Scalar const &x, double tol = 0.0)
{
  if constexpr (ExactScalar<Scalar>) {
    return x == 0;
  } else {
    return std::abs(x) <= tol;
  }
}

} // namespace codim2
