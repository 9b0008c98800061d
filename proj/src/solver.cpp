#include "codim2/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "codim2/errors.hpp"

namespace codim2 {

int block_size(Block const &block)
{
  int n = 0;
  for (auto const &pt : block) n += pt.multiplicity;
  return n;
}

ProblemConfig::ProblemConfig(int d, std::vector<Block> blocks, bool non_generic)
  : d_(d)
  , blocks_(std::move(blocks))
  , non_generic_(non_generic)
{
  if (d_ < 2) throw InvalidConfig("d must be at least 2");
  if (blocks_.empty()) throw InvalidConfig("config has no blocks");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    auto const &block = blocks_[j];
    std::string const name = "block " + std::to_string(j + 1);
    if (block.empty()) throw InvalidConfig(name + " is empty");
    for (auto const &pt : block) {
      if (pt.multiplicity < 1) throw InvalidConfig(name + " has a non-positive multiplicity");
      if (!std::isfinite(pt.x)) throw InvalidConfig(name + " has a non-finite point");
    }
    int const size = block_size(block);
    if (size < 2) throw InvalidConfig(name + " needs at least two points counted with multiplicity");
    if (size > d_) throw BlockTooLarge(name + " has " + std::to_string(size) + " points, at most d allowed");
    for (std::size_t a = 0; a < block.size(); ++a) {
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        if (block[a].x == block[b].x) throw InvalidConfig(name + " repeats the point " + std::to_string(block[a].x));
      }
    }
  }
  if (!non_generic_) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
        for (auto const &a : blocks_[i]) {
          for (auto const &b : blocks_[j]) {
            if (a.x == b.x) {
              throw InvalidConfig("point " + std::to_string(a.x) + " appears in blocks " + std::to_string(i + 1) +
                                  " and " + std::to_string(j + 1) + "; mark the config non-generic to allow this");
            }
          }
        }
      }
    }
  }
}

std::vector<int> ProblemConfig::content_entries() const
{
  std::vector<int> out;
  for (auto const &b : blocks_) out.push_back(block_size(b) - 1);
  return out;
}

ContentVector ProblemConfig::content() const
{
  ContentVector c(content_entries());
  if (c.d() != d_) {
    throw ConstraintViolation("content sums to " + std::to_string(c.sum()) + " but 2d-2 = " + std::to_string(2 * d_ - 2));
  }
  return c;
}

double ProblemConfig::separation_margin() const
{
  std::vector<std::pair<double, double>> hulls;
  for (auto const &b : blocks_) {
    auto [lo, hi] = std::minmax_element(b.begin(), b.end(),
                                        [](BlockPoint const &u, BlockPoint const &v) { return u.x < v.x; });
    hulls.emplace_back(lo->x, hi->x);
  }
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hulls.size(); ++i) {
    for (std::size_t j = i + 1; j < hulls.size(); ++j) {
      double const gap = std::max(hulls[i].first, hulls[j].first) - std::min(hulls[i].second, hulls[j].second);
      margin = std::min(margin, gap);
    }
  }
  return margin;
}

bool is_separated(ProblemConfig const &config)
{
  return config.separation_margin() > 0.0;
}

double class_residual(RationalClass<Complex> const &f, std::vector<Block> const &blocks)
{
  Matrix<Complex> const B = orthonormal_rows<Complex>(f.matrix());
  RationalClass<Complex> const g(B.row(0).transpose(), B.row(1).transpose(), f.d());
  double worst = 0.0;
  for (auto const &b : blocks) worst = std::max(worst, block_residual(g, b));
  return worst;
}

template <typename Scalar>
RationalClass<Scalar> solve_polynomial(ProblemConfig const &config)
{
  int const d = config.d();
  auto const entries = config.content_entries();
  int const total = std::accumulate(entries.begin(), entries.end(), 0);
  if (total != d - 1) {
    throw WrongCodimension("polynomial case needs sum a_j = d-1 = " + std::to_string(d - 1) + ", got " +
                           std::to_string(total));
  }
  for (auto const &b : config.blocks()) {
    for (auto const &pt : b) {
      if (pt.multiplicity != 1) throw InvalidConfig("polynomial case takes simple points only");
    }
  }
  // Unknowns c_1..c_{d-1}; each row: p(z_i) - p(z_0) = 0.
  int const n = d - 1;
  Matrix<Scalar> A(n, n);
  Vector<Scalar> rhs(n);
  int row = 0;
  auto power = [](Scalar const &x, int k) {
    Scalar r(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r;
  };
  for (auto const &b : config.blocks()) {
    Scalar const z0(b.front().x);
    for (std::size_t i = 1; i < b.size(); ++i, ++row) {
      Scalar const zi(b[i].x);
      for (int k = 1; k <= n; ++k) A(row, k - 1) = power(zi, k) - power(z0, k);
      rhs(row) = power(z0, d) - power(zi, d);
    }
  }
  Vector<Scalar> coeffs;
  if constexpr (ExactScalar<Scalar>) {
    auto sol = exact_solve<Scalar>(A, rhs);
    if (!sol) throw std::logic_error("polynomial system is singular");
    coeffs = *sol;
  } else {
    Eigen::FullPivLU<Matrix<Scalar>> lu(A);
    if (!lu.isInvertible()) throw std::logic_error("polynomial system is singular");
    coeffs = lu.solve(rhs);
  }
  Poly<Scalar> p = Poly<Scalar>::Zero(d + 1);
  p(d) = Scalar(1);
  p.segment(1, n) = coeffs;
  Poly<Scalar> q = Poly<Scalar>::Zero(d + 1);
  q(0) = Scalar(1);
  return RationalClass<Scalar>(p, q, d);
}

template RationalClass<Rational> solve_polynomial<Rational>(ProblemConfig const &);
template RationalClass<double> solve_polynomial<double>(ProblemConfig const &);
template RationalClass<Complex> solve_polynomial<Complex>(ProblemConfig const &);

std::size_t SolutionSet::real_count() const
{
  return static_cast<std::size_t>(std::count(reality_flags.begin(), reality_flags.end(), true));
}

std::vector<CurvePoint<Complex>> curve_points(Block const &block)
{
  std::vector<CurvePoint<Complex>> out;
  for (auto const &pt : block) out.push_back({Complex(pt.x), pt.multiplicity});
  return out;
}

namespace {

// Taylor-coefficient functional h -> h^{(order)}(point) / order!.
struct Functional
{
  Complex point;
  int order;
};

// Bilinear square system for one gauge, in normalized coordinates:
//   p = P0 * sum_{k<=nu} u_k z^k,  q = Pinf * sum_{k<nv} v_k z^k,
// P0 / Pinf vanishing on the zero / pole blocks. For every other block with
// reference functional r: L(p) r(q) - L(q) r(p) = 0 for each remaining condition L.
// Two more equations fix the remaining scalings: p(w) = q(w) at the normalizing
// block's reference point, and a random affine patch c . (u, v) = 1.
class GaugeSystem
{
public:
  GaugeSystem(std::vector<Block> const &blocks, int d, int zero_block, int pole_block, Vector<Complex> patch)
    : d_(d)
    , patch_(std::move(patch))
  {
    std::vector<std::pair<Complex, int>> zero_roots, pole_roots;
    for (auto const &pt : blocks[zero_block]) zero_roots.emplace_back(pt.x, pt.multiplicity);
    for (auto const &pt : blocks[pole_block]) pole_roots.emplace_back(pt.x, pt.multiplicity);
    Poly<Complex> const P0 = from_roots(zero_roots);
    Poly<Complex> const Pinf = from_roots(pole_roots);
    nu_ = d - (block_size(blocks[zero_block]) - 1) - 1;
    nv_ = d - (block_size(blocks[pole_block]) - 1);
    for (int k = 0; k <= nu_; ++k) p_basis_.push_back(resized(multiply(P0, monomial<Complex>(k)), d + 1));
    for (int k = 0; k < nv_; ++k) q_basis_.push_back(resized(multiply(Pinf, monomial<Complex>(k)), d + 1));

    bool normalized = false;
    for (int j = 0; j < static_cast<int>(blocks.size()); ++j) {
      if (j == zero_block || j == pole_block) continue;
      auto const &block = blocks[j];
      int const ref = add_functional({block.front().x, 0});
      if (!normalized) {
        norm_ref_ = ref;
        normalized = true;
      }
      for (std::size_t i = 0; i < block.size(); ++i) {
        for (int k = 0; k < block[i].multiplicity; ++k) {
          if (i == 0 && k == 0) continue;
          conditions_.emplace_back(add_functional({block[i].x, k}), ref);
        }
      }
    }
    if (unknowns() != static_cast<int>(conditions_.size()) + 2 || patch_.size() != unknowns()) {
      throw std::logic_error("gauge-fixed system is not square");
    }
  }

  int unknowns() const { return nu_ + 1 + nv_; }

  void evaluate(Vector<Complex> const &x, Vector<Complex> &F, Matrix<Complex> *J) const
  {
    int const n = unknowns();
    int const nu1 = nu_ + 1;
    auto const u = x.head(nu1);
    auto const v = x.tail(nv_);
    std::size_t const nf = lp_.size();
    std::vector<Complex> Lp(nf), Lq(nf);
    for (std::size_t f = 0; f < nf; ++f) {
      Lp[f] = lp_[f].cwiseProduct(u).sum();
      Lq[f] = lq_[f].cwiseProduct(v).sum();
    }
    F.resize(n);
    if (J) J->setZero(n, n);
    for (std::size_t e = 0; e < conditions_.size(); ++e) {
      auto const [c, r] = conditions_[e];
      F(e) = Lp[c] * Lq[r] - Lq[c] * Lp[r];
      if (J) {
        J->row(e).head(nu1) = (lp_[c] * Lq[r] - Lq[c] * lp_[r]).transpose();
        J->row(e).tail(nv_) = (Lp[c] * lq_[r] - lq_[c] * Lp[r]).transpose();
      }
    }
    F(n - 2) = Lp[norm_ref_] - Lq[norm_ref_];
    F(n - 1) = patch_.cwiseProduct(x).sum() - Complex(1);
    if (J) {
      J->row(n - 2).head(nu1) = lp_[norm_ref_].transpose();
      J->row(n - 2).tail(nv_) = -lq_[norm_ref_].transpose();
      J->row(n - 1) = patch_.transpose();
    }
  }

  std::pair<Poly<Complex>, Poly<Complex>> polynomials(Vector<Complex> const &x) const
  {
    Poly<Complex> p = Poly<Complex>::Zero(d_ + 1);
    Poly<Complex> q = Poly<Complex>::Zero(d_ + 1);
    for (int k = 0; k <= nu_; ++k) p += x(k) * p_basis_[k];
    for (int k = 0; k < nv_; ++k) q += x(nu_ + 1 + k) * q_basis_[k];
    return {p, q};
  }

private:
  int add_functional(Functional const &fn)
  {
    Vector<Complex> rp(nu_ + 1), rq(nv_);
    for (int k = 0; k <= nu_; ++k) rp(k) = taylor_coefficient(p_basis_[k], fn.point, fn.order);
    for (int k = 0; k < nv_; ++k) rq(k) = taylor_coefficient(q_basis_[k], fn.point, fn.order);
    lp_.push_back(rp);
    lq_.push_back(rq);
    return static_cast<int>(lp_.size()) - 1;
  }

  int d_;
  Vector<Complex> patch_;
  int nu_ = 0;
  int nv_ = 0;
  std::vector<Poly<Complex>> p_basis_, q_basis_;
  std::vector<Vector<Complex>> lp_, lq_;
  std::vector<std::pair<int, int>> conditions_;
  int norm_ref_ = 0;
};

// Damped Newton from one start; returns the final iterate when the step size
// has collapsed, nothing on divergence or a non-finite iterate.
std::optional<Vector<Complex>> newton(GaugeSystem const &sys, Vector<Complex> x, int max_iter)
{
  Vector<Complex> F, Ftrial;
  Matrix<Complex> J;
  sys.evaluate(x, F, &J);
  double fnorm = F.norm();
  int polish = -1;
  for (int it = 0; it < max_iter; ++it) {
    Vector<Complex> const dx = J.partialPivLu().solve(-F);
    if (!dx.allFinite()) return std::nullopt;
    double lambda = 1.0;
    Vector<Complex> trial = x + dx;
    sys.evaluate(trial, Ftrial, nullptr);
    while (Ftrial.norm() > fnorm && lambda > 1.0 / 1024) {
      lambda *= 0.5;
      trial = x + lambda * dx;
      sys.evaluate(trial, Ftrial, nullptr);
    }
    x = trial;
    if (!x.allFinite() || x.norm() > 1e8) return std::nullopt;
    sys.evaluate(x, F, &J);
    fnorm = F.norm();
    if (polish < 0 && lambda == 1.0 && dx.norm() <= 1e-13 * (1.0 + x.norm())) polish = 2;
    if (polish >= 0 && polish-- == 0) return x;
  }
  return x;
}

struct Affine
{
  double center = 0.0;
  double scale = 1.0;
};

Affine normalizing_map(std::vector<Block> const &blocks)
{
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (auto const &b : blocks) {
    for (auto const &pt : b) {
      lo = std::min(lo, pt.x);
      hi = std::max(hi, pt.x);
    }
  }
  Affine a;
  a.center = 0.5 * (lo + hi);
  a.scale = std::max(0.5 * (hi - lo), 1e-3);
  return a;
}

bool key_less(Vector<Complex> const &a, Vector<Complex> const &b)
{
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt)
{
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Found
{
  RationalClass<Complex> normalized;
  Vector<Complex> key;
};

} // namespace

SolutionSet solve_problem1(ProblemConfig const &config, SolverParams const &params)
{
  ContentVector const content = config.content();
  int const d = config.d();
  SolutionSet result;
  BigInt const target = kostka(content);
  result.target_count = target.convert_to<int>();
  result.starts_budget = params.starts_budget > 0 ? params.starts_budget : 200 * result.target_count;

  Affine const affine = normalizing_map(config.blocks());
  std::vector<Block> normalized = config.blocks();
  for (auto &b : normalized) {
    for (auto &pt : b) pt.x = (pt.x - affine.center) / affine.scale;
  }

  std::vector<Found> found;
  auto const record = [&](RationalClass<Complex> const &f) {
    if (is_reducible(f)) return;
    Vector<Complex> key = canonical_key(f);
    for (auto const &g : found) {
      if (key_distance<Complex>(key, g.key) <= params.dedup_tol) return;
    }
    found.push_back({f, std::move(key)});
    if (static_cast<int>(found.size()) > result.target_count && !config.non_generic()) {
      throw std::logic_error("more distinct classes than the Kostka bound; dedup tolerance too small");
    }
  };

  int const q = static_cast<int>(config.block_count());
  if (q == 2) {
    std::vector<std::pair<Complex, int>> zero_roots, pole_roots;
    for (auto const &pt : normalized[0]) zero_roots.emplace_back(pt.x, pt.multiplicity);
    for (auto const &pt : normalized[1]) pole_roots.emplace_back(pt.x, pt.multiplicity);
    record(RationalClass<Complex>(from_roots(zero_roots), from_roots(pole_roots), d));
    result.gauges_tried.emplace_back(0, 1);
  } else {
    // Charts are visited round-robin in batches so a class that is badly conditioned
    // in one gauge is picked up in another.
    struct Chart
    {
      std::pair<int, int> blocks;
      GaugeSystem system;
      std::mt19937_64 rng;
    };
    std::vector<Chart> charts;
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < q; ++i) {
      for (int j = i + 1; j < q; ++j) {
        std::mt19937_64 rng(mix_seed(params.seed, charts.size()));
        int const unknowns = 2 * d - (block_size(normalized[i]) - 1) - (block_size(normalized[j]) - 1);
        Vector<Complex> patch(unknowns);
        for (Eigen::Index k = 0; k < patch.size(); ++k) patch(k) = Complex(normal(rng), normal(rng));
        charts.push_back({{i, j}, GaugeSystem(normalized, d, i, j, patch), rng});
      }
    }
    auto const done = [&] {
      return result.starts_used >= result.starts_budget ||
             (params.stop_at_target && static_cast<int>(found.size()) >= result.target_count);
    };
    int const batch = std::max(8, 4 * result.target_count);
    while (!done()) {
      for (auto &chart : charts) {
        if (done()) break;
        if (std::find(result.gauges_tried.begin(), result.gauges_tried.end(), chart.blocks) ==
            result.gauges_tried.end()) {
          result.gauges_tried.push_back(chart.blocks);
        }
        for (int s = 0; s < batch && !done(); ++s) {
          ++result.starts_used;
          Vector<Complex> x0(chart.system.unknowns());
          for (Eigen::Index i = 0; i < x0.size(); ++i) x0(i) = Complex(normal(chart.rng), normal(chart.rng));
          auto const x = newton(chart.system, x0, params.max_iter);
          if (!x) continue;
          auto const [p, qq] = chart.system.polynomials(*x);
          if (p.norm() == 0.0 || qq.norm() == 0.0) continue;
          std::optional<RationalClass<Complex>> f;
          try {
            f.emplace(p, qq, d);
          } catch (DegenerateSubspace const &) {
            continue;
          }
          if (class_residual(*f, normalized) > params.newton_tol) continue;
          record(*f);
        }
      }
    }
  }

  std::sort(found.begin(), found.end(), [](Found const &a, Found const &b) { return key_less(a.key, b.key); });

  Complex const scale(1.0 / affine.scale);
  Complex const shift(-affine.center / affine.scale);
  for (auto const &item : found) {
    RationalClass<Complex> const f(compose_affine(item.normalized.p(), scale, shift),
                                   compose_affine(item.normalized.q(), scale, shift), d);
    auto const reality = is_real_class(item.normalized);
    result.classes.push_back(f);
    result.residuals.push_back(class_residual(f, config.blocks()));
    result.reality_flags.push_back(reality.real);
    if (reality.real) {
      result.real_representatives.push_back(is_real_class(f, 1e-6).representative);
    } else {
      result.real_representatives.push_back(std::nullopt);
    }
  }
  result.deficit = static_cast<int>(result.classes.size()) < result.target_count;
  return result;
}

double wronskian_deviation(RationalClass<Complex> const &f, std::vector<CriticalPoint> const &points)
{
  Matrix<Complex> const B = orthonormal_rows<Complex>(f.matrix());
  Poly<Complex> const W = wronskian<Complex>(B.row(0).transpose(), B.row(1).transpose());
  std::vector<std::pair<Complex, int>> roots;
  for (auto const &pt : points) roots.emplace_back(pt.x, pt.multiplicity);
  Poly<Complex> const target = resized(from_roots(roots), W.size());
  Complex const c = target.dot(W) / target.squaredNorm();
  double const wn = W.norm();
  if (wn == 0.0) return 1.0;
  return (W - c * target).norm() / wn;
}

SolutionSet solve_critical_points(std::vector<CriticalPoint> const &points, int d, SolverParams const &params,
                                  double wronskian_tol)
{
  std::vector<Block> blocks;
  for (auto const &pt : points) {
    if (pt.multiplicity < 1 || pt.multiplicity > d - 1) {
      throw ConstraintViolation("critical point multiplicity " + std::to_string(pt.multiplicity) +
                                " outside [1, d-1]");
    }
    blocks.push_back({{pt.x, pt.multiplicity + 1}});
  }
  ProblemConfig const config(d, std::move(blocks));
  SolutionSet result = solve_problem1(config, params);
  result.wronskian_consistent = true;
  for (auto const &f : result.classes) {
    double const dev = wronskian_deviation(f, points);
    result.wronskian_deviation.push_back(dev);
    if (!(dev <= wronskian_tol)) result.wronskian_consistent = false;
  }
  return result;
}

Flag flags_from_solution(ProblemConfig const &config, RationalClass<Complex> const &f)
{
  int const d = config.d();
  if (config.block_count() < 2 || f.d() != d) throw NotAFlagProblem("flag problems need at least two blocks");
  for (auto const &pt : config.block(0)) {
    if (pt.multiplicity != 1) throw NotAFlagProblem("block 1 must consist of distinct simple points");
  }
  for (std::size_t j = 1; j < config.block_count(); ++j) {
    auto const &b = config.block(j);
    if (b.size() != 1 || b.front().multiplicity != 2) {
      throw NotAFlagProblem("block " + std::to_string(j + 1) + " must be a single point of multiplicity 2");
    }
  }
  Subspace<Complex> F2 = subspace_from_rational(f);
  Eigen::JacobiSVD<Matrix<Complex>> svd_b(orthonormal_rows<Complex>(F2.coefficients()), Eigen::ComputeFullV);
  Matrix<Complex> const kernel = svd_b.matrixV().rightCols(d - 1);

  Matrix<Complex> const W1 = curve_matrix<Complex>(curve_points(config.block(0)), d);
  Matrix<Complex> span(d + 1, kernel.cols() + W1.cols());
  span << kernel, W1;
  Eigen::JacobiSVD<Matrix<Complex>> svd(span, Eigen::ComputeFullU);
  if (numerical_rank<Complex>(span, 1e-8) != d) {
    throw std::runtime_error("span of F2 and W1 is not a hyperplane; f does not solve the flag problem");
  }
  Matrix<Complex> const U = svd.matrixU();
  return Flag{std::move(F2), kernel, U.leftCols(d), U.col(d).conjugate()};
}

} // namespace codim2
