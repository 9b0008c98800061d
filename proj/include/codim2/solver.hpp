#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codim2/combinatorics.hpp"
#include "codim2/projective.hpp"

namespace codim2 {

struct BlockPoint
{
  double x = 0.0;
  int multiplicity = 1;

  friend bool operator==(BlockPoint const &, BlockPoint const &) = default;
};

// One set A_j; a point of multiplicity m stands for m collided points.
using Block = std::vector<BlockPoint>;

int block_size(Block const &block);

// Real point blocks on which f must be constant. Block j contributes a_j = (sum of
// multiplicities) - 1 to the content. The full 2d-2 sum is only required by the
// enumerative solvers; solve_polynomial works with configs summing to d-1.
class ProblemConfig
{
public:
  ProblemConfig(int d, std::vector<Block> blocks, bool non_generic = false);

  int d() const { return d_; }
  std::vector<Block> const &blocks() const { return blocks_; }
  Block const &block(std::size_t j) const { return blocks_[j]; }
  std::size_t block_count() const { return blocks_.size(); }
  bool non_generic() const { return non_generic_; }

  std::vector<int> content_entries() const;
  // Throws ConstraintViolation when the content does not satisfy the 2d-2 constraints.
  ContentVector content() const;

  // Smallest signed gap between two block hulls: their distance when disjoint, minus
  // the length of their intersection when they overlap.
  double separation_margin() const;

  friend bool operator==(ProblemConfig const &, ProblemConfig const &) = default;

private:
  int d_;
  std::vector<Block> blocks_;
  bool non_generic_;
};

bool is_separated(ProblemConfig const &config);

// Norm of g(z) = p(z) q(w) - q(z) p(w) modulo prod (z - z_i)^{m_i}, with w the first point
// of the block. Max-abs coefficient norm; exact zero for exact scalars iff f is constant
// on the block to the prescribed orders.
template <typename Scalar>
RealOf<Scalar> block_residual(RationalClass<Scalar> const &f, Block const &block)
{
  std::vector<std::pair<Scalar, int>> roots;
  for (auto const &pt : block) {
    roots.emplace_back(Scalar(pt.x), pt.multiplicity);
  }
  Scalar const w(block.front().x);
  auto const [pw, qw] = f.value(w);
  Poly<Scalar> const g = f.p() * qw - f.q() * pw;
  Poly<Scalar> const r = remainder_monic(g, from_roots(roots));
  RealOf<Scalar> worst(0);
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    RealOf<Scalar> const m = magnitude(r(i));
    if (m > worst) worst = m;
  }
  return worst;
}

// Largest block residual of the orthonormalized representative (floating scalars).
double class_residual(RationalClass<Complex> const &f, std::vector<Block> const &blocks);

// The unique p = z^d + c_{d-1} z^{d-1} + ... + c_1 z constant on every block, returned
// with denominator 1. Requires sum a_j = d - 1 and simple points. A singular system
// is a logic_error: separated blocks make it nonsingular.
template <typename Scalar>
RationalClass<Scalar> solve_polynomial(ProblemConfig const &config);

struct SolverParams
{
  std::uint64_t seed = 1;
  int starts_budget = 0; // total over all gauges; 0 selects 200 * target count
  double newton_tol = 1e-10;
  double dedup_tol = 1e-6;
  int max_iter = 200;
  bool stop_at_target = true;
};

struct SolutionSet
{
  std::vector<RationalClass<Complex>> classes;
  std::vector<double> residuals;
  std::vector<bool> reality_flags;
  std::vector<std::optional<RationalClass<double>>> real_representatives;
  // Filled by solve_critical_points: relative deviation of W(p,q) from a multiple
  // of prod (z - x_k)^{a_k}.
  std::vector<double> wronskian_deviation;
  bool wronskian_consistent = false;
  int starts_used = 0;
  int starts_budget = 0;
  int target_count = 0;
  bool deficit = false;
  std::vector<std::pair<int, int>> gauges_tried; // 0-based block pairs sent to 0 and infinity

  std::size_t found() const { return classes.size(); }
  std::size_t real_count() const;
};

// All classes f of degree d constant on every block, by multi-start Newton on a
// gauge-fixed square system. Deterministic for a given seed.
SolutionSet solve_problem1(ProblemConfig const &config, SolverParams const &params = {});

struct CriticalPoint
{
  double x = 0.0;
  int multiplicity = 1;
};

SolutionSet solve_critical_points(std::vector<CriticalPoint> const &points, int d, SolverParams const &params = {},
                                  double wronskian_tol = 1e-8);

// Relative distance of W(p,q) from the span of prod (z - x_k)^{a_k}.
double wronskian_deviation(RationalClass<Complex> const &f, std::vector<CriticalPoint> const &points);

struct Flag
{
  Subspace<Complex> f2;
  Matrix<Complex> f2_generators; // (d+1) x (d-1)
  Matrix<Complex> f1_generators; // (d+1) x d, orthonormal columns
  Vector<Complex> f1_equation;   // F1 = {z : f1_equation^T z = 0}
};

// Flag F2 subset F1 for a solved flag problem: block 1 holds a_1+1 distinct points,
// every other block is a single point of multiplicity 2.
Flag flags_from_solution(ProblemConfig const &config, RationalClass<Complex> const &f);

std::vector<CurvePoint<Complex>> curve_points(Block const &block);

} // namespace codim2
