#pragma once

#include <utility>
#include <vector>

#include "codim2/scalar.hpp"

namespace codim2 {

template <typename Scalar>
Poly<Scalar> monomial(int degree)
{
  Poly<Scalar> p = Poly<Scalar>::Zero(degree + 1);
  p(degree) = Scalar(1);
  return p;
}

// Pads with zeros (or truncates) to exactly `length` coefficients.
template <typename Scalar>
Poly<Scalar> resized(Poly<Scalar> const &p, Eigen::Index length)
{
  Poly<Scalar> out = Poly<Scalar>::Zero(length);
  Eigen::Index const n = std::min(length, p.size());
  out.head(n) = p.head(n);
  return out;
}

template <typename Scalar, typename Point>
Scalar evaluate(Poly<Scalar> const &p, Point const &z)
{
  Scalar acc(0);
  for (Eigen::Index k = p.size() - 1; k >= 0; --k) {
    acc = acc * Scalar(z) + p(k);
  }
  return acc;
}

template <typename Scalar>
Poly<Scalar> derivative(Poly<Scalar> const &p)
{
  if (p.size() <= 1) return Poly<Scalar>::Zero(1);
  Poly<Scalar> out(p.size() - 1);
  for (Eigen::Index k = 1; k < p.size(); ++k) {
    out(k - 1) = Scalar(static_cast<int>(k)) * p(k);
  }
  return out;
}

template <typename Scalar>
Poly<Scalar> multiply(Poly<Scalar> const &a, Poly<Scalar> const &b)
{
  Poly<Scalar> out = Poly<Scalar>::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      out(i + j) += a(i) * b(j);
    }
  }
  return out;
}

// k-th Taylor coefficient at z, i.e. p^{(k)}(z) / k!.
template <typename Scalar>
Scalar taylor_coefficient(Poly<Scalar> const &p, Scalar const &z, int k)
{
  Scalar acc(0);
  for (Eigen::Index n = p.size() - 1; n >= k; --n) {
    // C(n, k) z^{n-k}: Horner in z over the shifted sequence C(n,k) p_n.
    Scalar c(1);
    for (int i = 1; i <= k; ++i) {
      c = c * Scalar(static_cast<int>(n - k + i)) / Scalar(i);
    }
    acc = acc * z + c * p(n);
  }
  return acc;
}

// prod (z - root)^mult, monic.
template <typename Scalar>
Poly<Scalar> from_roots(std::vector<std::pair<Scalar, int>> const &roots)
{
  Poly<Scalar> out = Poly<Scalar>::Ones(1);
  for (auto const &[root, mult] : roots) {
    Poly<Scalar> lin(2);
    lin << -root, Scalar(1);
    for (int i = 0; i < mult; ++i) {
      out = multiply(out, lin);
    }
  }
  return out;
}

// Remainder of p modulo a monic divisor; length = deg(divisor).
template <typename Scalar>
Poly<Scalar> remainder_monic(Poly<Scalar> p, Poly<Scalar> const &divisor)
{
  Eigen::Index const m = divisor.size() - 1;
  for (Eigen::Index k = p.size() - 1; k >= m; --k) {
    Scalar const c = p(k);
    if (c == Scalar(0)) continue;
    for (Eigen::Index i = 0; i <= m; ++i) {
      p(k - m + i) -= c * divisor(i);
    }
  }
  return resized(p, m);
}

// q(z) = p(scale * z + shift).
template <typename Scalar>
Poly<Scalar> compose_affine(Poly<Scalar> const &p, Scalar const &scale, Scalar const &shift)
{
  Poly<Scalar> out = Poly<Scalar>::Zero(p.size());
  Poly<Scalar> power = Poly<Scalar>::Ones(1);
  Poly<Scalar> lin(2);
  lin << shift, scale;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    out.head(power.size()) += p(k) * power;
    power = multiply(power, lin);
  }
  return out;
}

// Sylvester matrix of p and q regarded as polynomials of formal degrees m and n
// (coefficient vectors of length m+1 and n+1). Singular iff they share a root,
// counting a common root at infinity when both formal leading coefficients vanish.
template <typename Scalar>
Matrix<Scalar> sylvester(Poly<Scalar> const &p, Poly<Scalar> const &q)
{
  Eigen::Index const m = p.size() - 1;
  Eigen::Index const n = q.size() - 1;
  Matrix<Scalar> S = Matrix<Scalar>::Zero(m + n, m + n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index k = 0; k <= m; ++k) {
      S(r, r + k) = p(m - k);
    }
  }
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index k = 0; k <= n; ++k) {
      S(n + r, r + k) = q(n - k);
    }
  }
  return S;
}

// W(p, q) = p' q - p q'.
template <typename Scalar>
Poly<Scalar> wronskian(Poly<Scalar> const &p, Poly<Scalar> const &q)
{
  Eigen::Index const n = std::max(p.size(), q.size());
  Poly<Scalar> const pp = resized(p, n);
  Poly<Scalar> const qq = resized(q, n);
  Poly<Scalar> out = multiply<Scalar>(resized(derivative(pp), n), qq) - multiply<Scalar>(pp, resized(derivative(qq), n));
  return out;
}

} // namespace codim2
