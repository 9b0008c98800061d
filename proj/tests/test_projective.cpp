#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eigen_doctest.hpp"

#include <random>

#include "codim2/errors.hpp"
#include "codim2/projective.hpp"

using namespace codim2;

namespace {

template <typename S>
Poly<S> poly(std::initializer_list<S> c)
{
  Poly<S> p(c.size());
  Eigen::Index i = 0;
  for (auto const &v : c) p(i++) = v;
  return p;
}

Poly<Rational> rpoly(std::initializer_list<int> c)
{
  Poly<Rational> p(c.size());
  Eigen::Index i = 0;
  for (int v : c) p(i++) = Rational(v);
  return p;
}

template <typename S>
RationalClass<S> row_op(RationalClass<S> const &f, Matrix<S> const &M)
{
  Matrix<S> const B = M * f.matrix();
  return RationalClass<S>(B.row(0).transpose(), B.row(1).transpose(), f.d());
}

Complex random_complex(std::mt19937_64 &rng)
{
  std::normal_distribution<double> n;
  return {n(rng), n(rng)};
}

RationalClass<Complex> random_class(int d, std::mt19937_64 &rng)
{
  Poly<Complex> p(d + 1), q(d + 1);
  for (int i = 0; i <= d; ++i) {
    p(i) = random_complex(rng);
    q(i) = random_complex(rng);
  }
  return {p, q, d};
}

Matrix<Rational> random_invertible_rational(std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> u(-5, 5);
  Matrix<Rational> M(2, 2);
  do {
    for (int i = 0; i < 4; ++i) M(i) = Rational(u(rng), 1 + (u(rng) + 5) % 3);
  } while (M(0, 0) * M(1, 1) == M(0, 1) * M(1, 0));
  return M;
}

// max_k chordal distance between f(z_k) and f(z_0)
double spread_on_block(RationalClass<Complex> const &f, std::vector<double> const &pts)
{
  double worst = 0;
  auto const v0 = f.value(Complex(pts[0]));
  for (double z : pts) worst = std::max(worst, chordal_distance(f.value(Complex(z)), v0));
  return worst;
}

std::vector<CurvePoint<Complex>> simple_points(std::vector<double> const &pts)
{
  std::vector<CurvePoint<Complex>> out;
  for (double z : pts) out.push_back({Complex(z), 1});
  return out;
}

} // namespace

TEST_CASE("subspace requires rank two")
{
  Matrix<Rational> B(2, 3);
  B << 1, 2, 3, 2, 4, 6;
  CHECK_THROWS_AS(Subspace<Rational>{B}, DegenerateSubspace);
  Matrix<Complex> C(2, 3);
  C << 1, 2, 3, 2, 4, 6;
  CHECK_THROWS_AS(Subspace<Complex>{C}, DegenerateSubspace);
  CHECK_THROWS_AS(RationalClass<Rational>(rpoly({1, 1}), rpoly({2, 2}), 2), DegenerateSubspace);
}

TEST_CASE("curve_matrix examples")
{
  Matrix<Rational> C = curve_matrix<Rational>({{Rational(0), 1}, {Rational(1), 1}}, 2);
  Matrix<Rational> expected(3, 2);
  expected << 1, 1, 0, 1, 0, 1;
  CHECK(C == expected);

  C = curve_matrix<Rational>({{Rational(0), 2}}, 2);
  expected << 1, 0, 0, 1, 0, 0;
  CHECK(C == expected);

  C = curve_matrix<Rational>({{Rational(2), 1}}, 3);
  Matrix<Rational> col(4, 1);
  col << 1, 2, 4, 8;
  CHECK(C == col);

  // Second derivative column at z = 1, d = 3: (0, 0, 2, 6).
  C = curve_matrix<Rational>({{Rational(1), 3}}, 3);
  CHECK(C.col(2) == (Vector<Rational>(4) << 0, 0, 2, 6).finished());
  CHECK_THROWS_AS(curve_matrix<Rational>({{Rational(0), 2}, {Rational(1), 2}}, 3), BlockTooLarge);
}

TEST_CASE("subspace and rational function conversions")
{
  Matrix<Rational> B(2, 3);
  B << 1, 0, 0, 0, 0, 1;
  RationalClass<Rational> const f = rational_from_subspace(Subspace<Rational>(B));
  CHECK(f.p() == rpoly({1, 0, 0}));
  CHECK(f.q() == rpoly({0, 0, 1}));

  RationalClass<Rational> const g(rpoly({0, 1, 0}), rpoly({1, 0, 0}), 2);
  Matrix<Rational> expected(2, 3);
  expected << 0, 1, 0, 1, 0, 0;
  CHECK(subspace_from_rational(g).coefficients() == expected);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    RationalClass<Complex> const h = random_class(4, rng);
    CHECK(classes_equal(rational_from_subspace(subspace_from_rational(h)), h));
  }
}

TEST_CASE("incidence_check examples")
{
  Matrix<Rational> B(2, 3);
  B << 1, 0, 0, 0, 0, 1;
  Subspace<Rational> const X(B);
  Matrix<Rational> const W1 = curve_matrix<Rational>({{Rational(1), 1}, {Rational(-1), 1}}, 2);
  Matrix<Rational> BC(2, 2);
  BC << 1, 1, 1, 1;
  CHECK(B * W1 == BC);
  CHECK(incidence_check(X, W1));
  CHECK(!incidence_check(X, curve_matrix<Rational>({{Rational(1), 1}, {Rational(2), 1}}, 2)));

  RationalClass<Rational> const z2(rpoly({0, 0, 1}), rpoly({1, 0, 0}), 2);
  CHECK(incidence_check(subspace_from_rational(z2), curve_matrix<Rational>({{Rational(0), 2}}, 2)));
  CHECK(!incidence_check(subspace_from_rational(z2), curve_matrix<Rational>({{Rational(1), 2}}, 2)));

  // Floating path on the same data.
  Subspace<Complex> const Xc(B.cast<double>().cast<Complex>());
  CHECK(incidence_check(Xc, curve_matrix(simple_points({1, -1}), 2)));
  CHECK(!incidence_check(Xc, curve_matrix(simple_points({1, 2}), 2)));
}

TEST_CASE("is_reducible examples")
{
  CHECK(is_reducible(RationalClass<Rational>(rpoly({-1, 0, 1}), rpoly({-1, 1}), 2)));
  CHECK(!is_reducible(RationalClass<Rational>(rpoly({0, 0, 1}), rpoly({-1, 1}), 2)));
  CHECK(is_reducible(RationalClass<Rational>(rpoly({1, 0, 1}), rpoly({0, 0, 1}), 3)));

  using C = Complex;
  CHECK(is_reducible(RationalClass<C>(poly<C>({-1, 0, 1}), poly<C>({-1, 1}), 2)));
  CHECK(!is_reducible(RationalClass<C>(poly<C>({0, 0, 1}), poly<C>({-1, 1}), 2)));
  CHECK(is_reducible(RationalClass<C>(poly<C>({1, 0, 1}), poly<C>({0, 0, 1}), 3)));
  // A common factor hidden by a row operation is still found.
  CHECK(is_reducible(RationalClass<C>(poly<C>({-1, 0, 1}) + poly<C>({-2, 2, 0}), poly<C>({-1, 1, 0}), 2)));
}

TEST_CASE("is_real_class examples")
{
  using C = Complex;
  C const i(0, 1);
  auto const r = is_real_class(RationalClass<C>(poly<C>({0, 0, i}), poly<C>({i, 0, 0}), 2));
  CHECK(r.real);
  REQUIRE(r.representative.has_value());
  RationalClass<double> const z2(poly<double>({0, 0, 1}), poly<double>({1, 0, 0}), 2);
  CHECK(classes_equal(cast_class<Complex>(*r.representative), cast_class<Complex>(z2)));

  // z^2 - i is a translate of z^2, so its class is real; z^2 + i z is not.
  CHECK(is_real_class(RationalClass<C>(poly<C>({-i, 0, 1}), poly<C>({1, 0, 0}), 2)).real);
  CHECK(!is_real_class(RationalClass<C>(poly<C>({0, i, 1}), poly<C>({1, 0, 0}), 2)).real);
  CHECK(!is_real_class(RationalClass<C>(poly<C>({0, i, 1}), poly<C>({1, 0, 0}), 2)).representative.has_value());

  std::mt19937_64 rng(5);
  std::normal_distribution<double> n;
  for (int t = 0; t < 20; ++t) {
    Poly<double> p(4), q(4);
    for (int k = 0; k < 4; ++k) {
      p(k) = n(rng);
      q(k) = n(rng);
    }
    RationalClass<double> const real(p, q, 3);
    CHECK(is_real_class(real).real);
    // A complex change of basis keeps the class real and the representative equivalent.
    Matrix<Complex> M(2, 2);
    M << random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng);
    RationalClass<Complex> const mixed = row_op(cast_class<Complex>(real), M);
    auto const check = is_real_class(mixed);
    CHECK(check.real);
    REQUIRE(check.representative.has_value());
    CHECK(classes_equal(cast_class<Complex>(*check.representative), mixed));
  }
}

TEST_CASE("classes_equal examples")
{
  std::mt19937_64 rng(17);
  RationalClass<Complex> const f = random_class(3, rng);
  // (2f + 1) / (f - 1)
  RationalClass<Complex> const g(2.0 * f.p() + f.q(), f.p() - f.q(), 3);
  CHECK(classes_equal(f, g));
  RationalClass<Complex> const scaled(7.0 * f.p(), 7.0 * f.q(), 3);
  CHECK(classes_equal(f, scaled));

  RationalClass<Rational> const z2(rpoly({0, 0, 1}), rpoly({1, 0, 0}), 2);
  RationalClass<Rational> const z2z(rpoly({0, 1, 1}), rpoly({1, 0, 0}), 2);
  CHECK(!classes_equal(z2, z2z));
  RationalClass<Rational> const mobius(rpoly({1, 0, 2}), rpoly({-1, 0, 1}), 2);
  CHECK(classes_equal(z2, mobius));
  RationalClass<Rational> const scaled7(rpoly({0, 0, 7}), rpoly({7, 0, 0}), 2);
  CHECK(classes_equal(z2, scaled7));
}

TEST_CASE("canonical key normalization")
{
  std::mt19937_64 rng(23);
  RationalClass<Complex> const f = random_class(3, rng);
  Vector<Complex> const key = canonical_key(f);
  CHECK(key.norm() == doctest::Approx(1.0));
  Eigen::Index first = 0;
  while (std::abs(key(first)) <= 1e-8) ++first;
  CHECK(std::abs(key(first).imag()) < 1e-14);
  CHECK(key(first).real() > 0);
}

TEST_CASE("gauge invariance, exact")
{
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> u(-4, 4);
  for (int t = 0; t < 30; ++t) {
    Poly<Rational> p(4), q(4);
    for (int k = 0; k < 4; ++k) {
      p(k) = u(rng);
      q(k) = u(rng);
    }
    if (exact_rank(Matrix<Rational>((Matrix<Rational>(2, 4) << p.transpose(), q.transpose()).finished())) < 2) continue;
    // Sometimes force a common root at 1 so both reducible outcomes occur.
    if (t % 3 == 0) {
      p = multiply<Rational>(rpoly({-1, 1}), p.head(3));
      q = multiply<Rational>(rpoly({-1, 1}), q.head(3));
      if (exact_rank(Matrix<Rational>((Matrix<Rational>(2, 4) << p.transpose(), q.transpose()).finished())) < 2) continue;
    }
    RationalClass<Rational> const f(p, q, 3);
    RationalClass<Rational> const g = row_op(f, random_invertible_rational(rng));
    CHECK(canonical_key(f) == canonical_key(g));
    CHECK(is_reducible(f) == is_reducible(g));
    CHECK(classes_equal(f, g));
    for (int a : {-1, 0, 1, 2}) {
      Matrix<Rational> const W = curve_matrix<Rational>({{Rational(a), 1}, {Rational(a + 1), 1}}, 3);
      CHECK(incidence_check(subspace_from_rational(f), W) == incidence_check(subspace_from_rational(g), W));
    }
  }
}

TEST_CASE("gauge invariance, floating")
{
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    RationalClass<Complex> const f = random_class(4, rng);
    Matrix<Complex> M(2, 2);
    M << random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng);
    RationalClass<Complex> const g = row_op(f, M);
    CHECK(key_distance(canonical_key(f), canonical_key(g)) < 1e-10);
    CHECK(is_reducible(f) == is_reducible(g));
    CHECK(is_real_class(f).real == is_real_class(g).real);
  }
}

TEST_CASE("incidence agrees with constancy on the block")
{
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-2, 2);
  int const d = 4;
  for (int t = 0; t < 40; ++t) {
    int const size = 2 + t % (d - 1);
    std::vector<double> pts;
    for (int k = 0; k < size; ++k) pts.push_back(k + 0.5 * u(rng));
    Matrix<Complex> const W = curve_matrix(simple_points(pts), d);

    // f constant on the block: p = c q + prod (z - z_k) s, possibly with p and q swapped
    // so that the common value is infinity.
    RationalClass<Complex> const base = random_class(d, rng);
    std::vector<std::pair<Complex, int>> roots;
    for (double z : pts) roots.emplace_back(Complex(z), 1);
    Poly<Complex> s(d + 1 - size);
    for (auto &c : s) c = random_complex(rng);
    Poly<Complex> const vanish = multiply(from_roots(roots), s);
    Poly<Complex> const p = random_complex(rng) * base.q() + resized(vanish, d + 1);
    RationalClass<Complex> const f = t % 4 == 0 ? RationalClass<Complex>(base.q(), p, d)
                                                : RationalClass<Complex>(p, base.q(), d);
    if (is_reducible(f)) continue;
    CHECK(incidence_check(subspace_from_rational(f), W, 1e-9));
    CHECK(spread_on_block(f, pts) < 1e-9);

    RationalClass<Complex> const generic = random_class(d, rng);
    CHECK(!incidence_check(subspace_from_rational(generic), W, 1e-9));
    CHECK(spread_on_block(generic, pts) > 1e-6);
  }
}

TEST_CASE("classes_equal is reflexive, symmetric and exactly transitive")
{
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    RationalClass<Complex> const f = random_class(3, rng);
    RationalClass<Complex> const g = random_class(3, rng);
    CHECK(classes_equal(f, f));
    CHECK(classes_equal(f, g) == classes_equal(g, f));
  }
  std::uniform_int_distribution<int> u(-3, 3);
  for (int t = 0; t < 20; ++t) {
    RationalClass<Rational> const f(rpoly({u(rng), u(rng), 1}), rpoly({1, u(rng), 0}), 2);
    RationalClass<Rational> const g = row_op(f, random_invertible_rational(rng));
    RationalClass<Rational> const h = row_op(g, random_invertible_rational(rng));
    CHECK(classes_equal(f, g));
    CHECK(classes_equal(g, h));
    CHECK(classes_equal(f, h));
  }
}

TEST_CASE("conjugate class and chordal distance")
{
  using C = Complex;
  C const i(0, 1);
  RationalClass<C> const f(poly<C>({i, 1, 0}), poly<C>({1, 0, 1}), 2);
  RationalClass<C> const fc = conjugate_class(f);
  CHECK(fc.p()(0) == -i);
  CHECK(chordal_distance({C(1), C(0)}, {C(2), C(0)}) == doctest::Approx(0.0));
  CHECK(chordal_distance({C(1), C(0)}, {C(0), C(1)}) == doctest::Approx(1.0));
}
