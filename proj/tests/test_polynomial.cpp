#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eigen_doctest.hpp"

#include <random>

#include "codim2/linalg.hpp"
#include "codim2/polynomial.hpp"

using namespace codim2;

namespace {

Poly<Rational> poly(std::initializer_list<int> c)
{
  Poly<Rational> p(c.size());
  Eigen::Index i = 0;
  for (int v : c) p(i++) = Rational(v);
  return p;
}

} // namespace

TEST_CASE("evaluate, derivative and multiply")
{
  Poly<Rational> const p = poly({1, -3, 0, 2}); // 1 - 3z + 2z^3
  CHECK(evaluate(p, Rational(2)) == Rational(11));
  CHECK(derivative(p) == poly({-3, 0, 6}));
  CHECK(multiply(poly({-1, 1}), poly({1, 1})) == poly({-1, 0, 1}));
  CHECK(monomial<Rational>(2) == poly({0, 0, 1}));
}

TEST_CASE("taylor coefficients match repeated derivatives")
{
  Poly<Rational> const p = poly({4, -1, 3, 5, 2});
  Rational const z(3, 2);
  Poly<Rational> dk = p;
  Rational factorial(1);
  for (int k = 0; k <= 5; ++k) {
    CHECK(taylor_coefficient(p, z, k) * factorial == evaluate(dk, z));
    dk = derivative(dk);
    factorial *= k + 1;
  }
}

TEST_CASE("from_roots and remainder")
{
  Poly<Rational> const m = from_roots<Rational>({{Rational(1), 2}, {Rational(-2), 1}});
  CHECK(m == poly({2, -3, 0, 1})); // (z-1)^2 (z+2)
  Poly<Rational> const p = poly({5, 0, 0, 0, 1});
  Poly<Rational> const r = remainder_monic(p, m);
  // p - r is divisible by m: it vanishes at 1 to order 2 and at -2.
  Poly<Rational> const diff = p - resized(r, p.size());
  CHECK(evaluate(diff, Rational(1)) == 0);
  CHECK(evaluate(derivative(diff), Rational(1)) == 0);
  CHECK(evaluate(diff, Rational(-2)) == 0);
  CHECK(r.size() == 3);
}

TEST_CASE("compose_affine evaluates at the transformed point")
{
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  Poly<double> p(5);
  for (auto &c : p) c = u(rng);
  Poly<double> const g = compose_affine(p, 1.7, -0.4);
  for (int i = 0; i < 10; ++i) {
    double const z = u(rng);
    CHECK(evaluate(g, z) == doctest::Approx(evaluate(p, 1.7 * z - 0.4)).epsilon(1e-12));
  }
}

TEST_CASE("sylvester determinant is the resultant")
{
  // res(z^2 - 1, z - 1) = 0, res(z^2, z - 1) = 1 up to sign.
  CHECK(exact_determinant(sylvester(poly({-1, 0, 1}), poly({-1, 1}))) == 0);
  CHECK(abs(exact_determinant(sylvester(poly({0, 0, 1}), poly({-1, 1})))) == 1);
  // res(z - a, z - b) = b - a up to sign.
  CHECK(abs(exact_determinant(sylvester(poly({-3, 1}), poly({-7, 1})))) == 4);
}

TEST_CASE("wronskian")
{
  // W(z^2, z - 1) = 2z(z - 1) - z^2 = z^2 - 2z
  Poly<Rational> const w = wronskian(poly({0, 0, 1}), poly({-1, 1}));
  CHECK(resized(w, 3) == poly({0, -2, 1}));
}

TEST_CASE("exact linear algebra")
{
  Matrix<Rational> A(3, 3);
  A << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  CHECK(exact_rank(A) == 3);
  CHECK(exact_determinant(A) == 18);
  Vector<Rational> b(3);
  b << 1, 2, 3;
  auto const x = exact_solve(A, b);
  REQUIRE(x.has_value());
  CHECK(A * *x == b);
  A.row(2) = A.row(0) + A.row(1);
  CHECK(exact_rank(A) == 2);
  CHECK(!exact_solve(A, b).has_value());
}

TEST_CASE("floating rank and orthonormal rows")
{
  Matrix<Complex> M(2, 4);
  M << Complex(1, 1), 2, 0, Complex(0, -1), Complex(2, 2), 4, 0, Complex(0, -2);
  CHECK(numerical_rank(M, 1e-10) == 1);
  M(1, 2) = 1;
  CHECK(numerical_rank(M, 1e-10) == 2);
  Matrix<Complex> const Q = orthonormal_rows(M);
  CHECK((Q * Q.adjoint() - Matrix<Complex>::Identity(2, 2)).norm() < 1e-12);
  // Same row span: stacking adds no rank.
  Matrix<Complex> S(4, 4);
  S << M, Q;
  CHECK(numerical_rank(S, 1e-10) == 2);
}
